"""
Declarative kernel laws.

A ModelSpec pairs one variant (the law of a single column or row of the
random matrix) with the lattice dimension. Offsets are always displacements
y - x from the source x to the target y.
"""

from __future__ import annotations

from functools import cached_property
from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from lingrowth.core.lattice import SITE_ORDER, Site, linf, origin, unit_vectors

COLUMN = "column"
ROW = "row"


def _check_value(value: float) -> float:
    if value != 0 and value < 1:
        raise ValueError(f"Kernel values must lie in {{0}} U [1, inf), got {value}")
    return value


class SiteOP(BaseModel):
    """Oriented site percolation: A_{x,y} = eta_y 1{|x-y| = 1}."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["site_op"] = "site_op"
    p: float = Field(ge=0, le=1)


class BondOP(BaseModel):
    """Oriented bond percolation: A_{x,y} = eta_{(x,y)} 1{|x-y| = 1}."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["bond_op"] = "bond_op"
    p: float = Field(ge=0, le=1)


class BcppLse(BaseModel):
    """Binary contact path process, the target chooses its source."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["bcpp_lse"] = "bcpp_lse"
    p: float = Field(ge=0, le=1)
    q: float = Field(ge=0, le=1)


class BcppDlse(BaseModel):
    """Binary contact path process, the source chooses its target."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["bcpp_dlse"] = "bcpp_dlse"
    p: float = Field(ge=0, le=1)
    q: float = Field(ge=0, le=1)


class WeightedBernoulli(BaseModel):
    """Each neighbourhood entry of a column is independently v w.p. p, else 0."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["weighted"] = "weighted"
    p: float = Field(ge=0, le=1)
    v: float
    neighborhood: Optional[List[Tuple[int, ...]]] = None

    @field_validator("v")
    @classmethod
    def _v_in_range(cls, v):
        return _check_value(v)


class TablePattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    prob: float = Field(ge=0, le=1)
    entries: List[Tuple[Tuple[int, ...], float]] = Field(default_factory=list)

    @field_validator("entries")
    @classmethod
    def _values_in_range(cls, entries):
        for _, value in entries:
            _check_value(value)
        return entries

    def value_at(self, offset: Site) -> float:
        return sum(v for e, v in self.entries if tuple(e) == offset)

    def nonzero_offsets(self) -> list[Site]:
        return [tuple(e) for e, v in self.entries if v != 0]


class Table(BaseModel):
    """Explicit finite law of one column (LSE) or one row (DLSE) pattern."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["table"] = "table"
    orientation: Literal["column", "row"] = COLUMN
    patterns: List[TablePattern]

    @field_validator("patterns")
    @classmethod
    def _probabilities_sum_to_one(cls, patterns):
        total = sum(pattern.prob for pattern in patterns)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"Pattern probabilities sum to {total}, expected 1")
        return patterns


class Product(BaseModel):
    """The m-step product B_1 ... B_m of a base kernel."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["product"] = "product"
    base: "ModelSpec"
    m: int = Field(ge=1)


Variant = Annotated[
    Union[SiteOP, BondOP, BcppLse, BcppDlse, WeightedBernoulli, Table, Product],
    Field(discriminator="kind"),
]

LSE_KINDS = {"site_op", "bond_op", "bcpp_lse", "weighted"}
DLSE_KINDS = {"bcpp_dlse"}


class ModelSpec(BaseModel):
    """A kernel distribution on Z^d."""

    model_config = ConfigDict(frozen=True)

    variant: Variant
    dimension: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _consistent(self):
        variant = self.variant
        if isinstance(variant, Product) and variant.base.dimension != self.dimension:
            raise ValueError("Product base must share the lattice dimension")
        for offset in self._declared_offsets():
            if len(offset) != self.dimension:
                raise ValueError(f"Offset {offset} does not match dimension {self.dimension}")
        return self

    def _declared_offsets(self) -> list[Site]:
        variant = self.variant
        if isinstance(variant, WeightedBernoulli) and variant.neighborhood:
            return [tuple(e) for e in variant.neighborhood]
        if isinstance(variant, Table):
            return [tuple(e) for pattern in variant.patterns for e, _ in pattern.entries]
        return []

    @property
    def kind(self) -> str:
        return self.variant.kind

    @cached_property
    def offsets(self) -> list[Site]:
        """Displacements y - x that may carry a nonzero entry, in site order."""
        variant = self.variant
        d = self.dimension
        if isinstance(variant, (SiteOP, BondOP)):
            return unit_vectors(d)
        if isinstance(variant, (BcppLse, BcppDlse)):
            return SITE_ORDER.sorted([origin(d), *unit_vectors(d)])
        if isinstance(variant, WeightedBernoulli):
            return self.neighborhood
        if isinstance(variant, Table):
            return SITE_ORDER.sorted(set(self._declared_offsets()))
        base_offsets = variant.base.offsets
        reach = {origin(d)}
        for _ in range(variant.m):
            reach = {tuple(a + b for a, b in zip(x, e)) for x in reach for e in base_offsets}
        return SITE_ORDER.sorted(reach)

    @cached_property
    def neighborhood(self) -> list[Site]:
        variant = self.variant
        if isinstance(variant, WeightedBernoulli) and variant.neighborhood:
            return SITE_ORDER.sorted({tuple(e) for e in variant.neighborhood})
        return unit_vectors(self.dimension)

    @property
    def range(self) -> int:
        """r: entries vanish whenever the L-infinity distance is >= r."""
        if isinstance(self.variant, Product):
            return self.variant.m * (self.variant.base.range - 1) + 1
        return max((linf(e) for e in self.offsets), default=0) + 1

    @property
    def orientation(self) -> Optional[str]:
        """Independence unit: "column" (LSE), "row" (DLSE), None for products."""
        if isinstance(self.variant, Table):
            return self.variant.orientation
        if self.kind in LSE_KINDS:
            return COLUMN
        if self.kind in DLSE_KINDS:
            return ROW
        return None

    def label(self) -> str:
        params = self.variant.model_dump(exclude={"kind", "base", "patterns", "neighborhood"})
        text = ",".join(f"{k}={v}" for k, v in params.items())
        if isinstance(self.variant, Product):
            return f"product({self.variant.base.label()},m={self.variant.m})"
        return f"{self.kind}({text};d={self.dimension})"

    # Convenience constructors
    @classmethod
    def site_op(cls, p: float, dimension: int = 1) -> "ModelSpec":
        return cls(variant=SiteOP(p=p), dimension=dimension)

    @classmethod
    def bond_op(cls, p: float, dimension: int = 1) -> "ModelSpec":
        return cls(variant=BondOP(p=p), dimension=dimension)

    @classmethod
    def bcpp_lse(cls, p: float, q: float, dimension: int = 1) -> "ModelSpec":
        return cls(variant=BcppLse(p=p, q=q), dimension=dimension)

    @classmethod
    def bcpp_dlse(cls, p: float, q: float, dimension: int = 1) -> "ModelSpec":
        return cls(variant=BcppDlse(p=p, q=q), dimension=dimension)

    @classmethod
    def weighted(
        cls, p: float, v: float, neighborhood=None, dimension: int = 1
    ) -> "ModelSpec":
        return cls(
            variant=WeightedBernoulli(p=p, v=v, neighborhood=neighborhood),
            dimension=dimension,
        )

    @classmethod
    def table(cls, patterns, orientation: str = COLUMN, dimension: int = 1) -> "ModelSpec":
        """``patterns`` is a list of (prob, {offset: value}) pairs."""
        return cls(
            variant=Table(
                orientation=orientation,
                patterns=[
                    TablePattern(prob=prob, entries=[(tuple(e), v) for e, v in entries.items()])
                    for prob, entries in patterns
                ],
            ),
            dimension=dimension,
        )

    @classmethod
    def product(cls, base: "ModelSpec", m: int) -> "ModelSpec":
        return cls(variant=Product(base=base, m=m), dimension=base.dimension)


Product.model_rebuild()


class HeavySiteInfo(BaseModel):
    """A site maximizing P(B_{o,x} >= 1 + delta) and that probability."""

    model_config = ConfigDict(frozen=True)

    site: Tuple[int, ...]
    delta: float = Field(gt=0)
    prob: float = Field(ge=0, le=1)
    stderr: float = 0.0
    exact: bool = True
    samples: int = 0
