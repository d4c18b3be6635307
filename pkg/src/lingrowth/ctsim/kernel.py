"""
Law of the random vector K = (K_x) driving the continuous-time processes.

Components are independent: each listed offset carries its own finite
distribution over {0} U [1, inf); unlisted offsets are identically 0.
"""

from functools import cached_property
from typing import Dict, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from lingrowth.core.lattice import SITE_ORDER, Site, linf, origin


class CtComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    offset: Tuple[int, ...]
    # (probability, value) pairs
    values: List[Tuple[float, float]]

    @field_validator("values")
    @classmethod
    def _valid_law(cls, values):
        total = sum(prob for prob, _ in values)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"Component probabilities sum to {total}, expected 1")
        for prob, value in values:
            if prob < 0:
                raise ValueError(f"Negative probability {prob}")
            if value != 0 and value < 1:
                raise ValueError(f"K values must lie in {{0}} U [1, inf), got {value}")
        return values

    def can_be_nonzero(self) -> bool:
        return any(prob > 0 and value != 0 for prob, value in self.values)


class CtKernel(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimension: int = Field(default=1, ge=1)
    components: List[CtComponent]

    @model_validator(mode="after")
    def _consistent(self):
        offsets = [c.offset for c in self.components]
        if len(set(offsets)) != len(offsets):
            raise ValueError("Each offset may carry one component only")
        for offset in offsets:
            if len(offset) != self.dimension:
                raise ValueError(f"Offset {offset} does not match dimension {self.dimension}")
        return self

    @classmethod
    def deterministic(cls, values: Mapping[Site, float], dimension: int = 1) -> "CtKernel":
        return cls(
            dimension=dimension,
            components=[
                CtComponent(offset=tuple(e), values=[(1.0, float(v))]) for e, v in values.items()
            ],
        )

    @classmethod
    def bernoulli(
        cls,
        fixed: Mapping[Site, float],
        random: Mapping[Site, Tuple[float, float]],
        dimension: int = 1,
    ) -> "CtKernel":
        """``fixed`` offsets are deterministic, ``random`` ones equal value w.p. p, else 0."""
        components = [
            CtComponent(offset=tuple(e), values=[(1.0, float(v))]) for e, v in fixed.items()
        ]
        components += [
            CtComponent(offset=tuple(e), values=[(p, float(v)), (1.0 - p, 0.0)])
            for e, (p, v) in random.items()
        ]
        return cls(dimension=dimension, components=components)

    @cached_property
    def offsets(self) -> List[Site]:
        return SITE_ORDER.sorted(c.offset for c in self.components)

    @property
    def range(self) -> int:
        """r_K: K_x vanishes for L-infinity |x| >= r_K."""
        return max((linf(c.offset) for c in self.components if c.can_be_nonzero()), default=0) + 1

    def sum_law(self) -> Dict[float, float]:
        """Exact law of sum_x K_x, by convolution of the components."""
        law = {0.0: 1.0}
        for component in self.components:
            nxt: Dict[float, float] = {}
            for total, p in law.items():
                for prob, value in component.values:
                    if prob > 0:
                        nxt[total + value] = nxt.get(total + value, 0.0) + p * prob
            law = nxt
        return law

    def heavy_sum_prob(self, delta: float) -> float:
        """P(sum_x K_x >= 1 + delta)."""
        return sum(p for total, p in self.sum_law().items() if total >= 1.0 + delta)

    def is_coalescing(self) -> bool:
        """P(sum_x K_x = 1) = 1: the process is a coalescing random walk."""
        return all(total == 1.0 for total, p in self.sum_law().items() if p > 0)

    def is_integer_valued(self) -> bool:
        return all(
            float(value).is_integer() for c in self.components for _, value in c.values
        )

    def label(self) -> str:
        parts = []
        for c in self.components:
            law = "|".join(f"{v:g}@{p:g}" for p, v in c.values)
            parts.append(f"{','.join(map(str, c.offset))}:{law}")
        return f"ct[{';'.join(parts)};d={self.dimension}]"

    def self_offset(self) -> Site:
        return origin(self.dimension)
