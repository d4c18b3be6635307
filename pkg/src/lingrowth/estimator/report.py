"""
Report records of the estimator.

GrowthReport serializes to JSON and to a single CSV row; both carry the
schema version and the tolerances the numbers were judged with.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from lingrowth.config.constants import SCHEMA_VERSION
from lingrowth.config.env import TOLERANCES
from lingrowth.kernels.models import ModelSpec


class Verdict(str, Enum):
    """Outcome of the trichotomy classifier."""

    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    INCONCLUSIVE = "inconclusive"


class Estimate(BaseModel):
    """A Monte Carlo estimate with its normal-approximation standard error."""

    model_config = ConfigDict(frozen=True)

    value: float
    stderr: float = 0.0
    count: int = 0

    def significant(self, sigma: Optional[float] = None) -> bool:
        """value exceeds ``sigma`` standard errors above zero."""
        sigma = TOLERANCES.SIGMA if sigma is None else sigma
        return self.value > 0 and self.value - sigma * self.stderr > 0

    def __str__(self) -> str:
        return f"{self.value:.6g} ± {self.stderr:.2g}"


class GrowthReport(BaseModel):
    """
    Growth summary of one model at one (delta, m).

    c_delta_hat is survival_hat times heavy_prob; bound is
    c_delta_hat * ln(1 + delta) / m.
    """

    schema_version: str = SCHEMA_VERSION
    model: ModelSpec
    delta: float = Field(gt=0)
    epsilon: float = 0.0
    m: int = Field(default=1, ge=1)
    horizon: int
    replicas: int
    lookahead: Optional[int] = None
    survival_hat: float
    survival_stderr: float = 0.0
    heavy_site: Optional[Tuple[int, ...]] = None
    heavy_prob: float = 0.0
    heavy_stderr: float = 0.0
    heavy_exact: bool = True
    c_delta_hat: float = 0.0
    c_delta_stderr: float = 0.0
    bound: float = 0.0
    fitted_rate: Optional[float] = None
    fitted_rate_stderr: Optional[float] = None
    surviving_replicas: Optional[int] = None
    cesaro: Optional[float] = None
    classifier: Optional[Verdict] = None
    tolerances: Dict[str, float] = Field(default_factory=TOLERANCES.echo)
    config_hash: Optional[str] = None
    version: Optional[str] = None

    @model_validator(mode="after")
    def _consistent(self):
        expected = self.survival_hat * self.heavy_prob
        if not math.isclose(self.c_delta_hat, expected, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError(f"c_delta_hat {self.c_delta_hat} != survival x heavy {expected}")
        if self.bound < 0:
            raise ValueError(f"Negative growth bound {self.bound}")
        if self.classifier == Verdict.CASE3 and self.bound != 0:
            raise ValueError("A case3 report must carry a zero bound")
        return self

    @property
    def rate_margin(self) -> Optional[float]:
        """fitted_rate - bound, None before a rate was fitted."""
        if self.fitted_rate is None:
            return None
        return self.fitted_rate - self.bound

    def to_json(self) -> Dict[str, Any]:
        payload = self.model_dump(mode="json")
        payload["model_label"] = self.model.label()
        return payload

    def csv_header(self) -> List[str]:
        return list(self.csv_row().keys())

    def csv_row(self) -> Dict[str, Any]:
        """Flat one-line form: nested fields become labels."""
        row: Dict[str, Any] = {}
        for name, value in self.model_dump(mode="json", exclude={"model", "tolerances"}).items():
            if name == "heavy_site":
                value = "" if value is None else " ".join(str(c) for c in value)
            row[name] = "" if value is None else value
        row["model"] = self.model.label()
        for name, value in self.tolerances.items():
            row[f"tol_{name}"] = value
        return row
