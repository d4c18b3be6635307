"""PathTrace: the record of one run of the path algorithm."""

import math
from collections import Counter
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

Coords = Tuple[int, ...]


class Rule(str, Enum):
    """Which rule of the recursion chose gamma(n+1)."""

    HEAVY = "ii"
    NEAREST = "iii"
    BACKTRACK = "iv"
    RESET = "v"


def format_coords(site: Optional[Coords]) -> str:
    return "" if site is None else " ".join(str(c) for c in site)


class PathTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    start_time: int = 0
    start_site: Coords
    heavy_site: Coords
    delta: float
    gamma: List[Coords]
    rules: List[Rule]
    t_back: List[Optional[int]]
    lookahead: Optional[int] = None
    percolates: Optional[bool] = None
    tau: List[int] = Field(default_factory=list)
    big_gamma: List[Coords] = Field(default_factory=list)
    big_gamma_log_mass: List[float] = Field(default_factory=list)
    good: List[bool] = Field(default_factory=list)
    truncated: bool = False

    @property
    def end_time(self) -> int:
        return self.start_time + len(self.gamma) - 1

    def gamma_at(self, n: int) -> Coords:
        return self.gamma[n - self.start_time]

    def big_gamma_at(self, n: int) -> Optional[Coords]:
        i = n - self.start_time
        return self.big_gamma[i] if 0 <= i < len(self.big_gamma) else None

    def rule_histogram(self) -> Dict[str, int]:
        counts = Counter(rule.value for rule in self.rules)
        return {rule.value: counts.get(rule.value, 0) for rule in Rule}

    def good_frequency(self) -> float:
        return sum(self.good) / len(self.good) if self.good else 0.0

    def good_before(self, n: int) -> int:
        """Number of good events G_m with m < n."""
        return sum(self.good[: n - self.start_time])

    def csv_rows(self) -> Iterator[dict]:
        """n, gamma_coords, rule, T_n, good, big_gamma_coords, mass_at_big_gamma."""
        steps = len(self.rules)
        for i, site in enumerate(self.gamma):
            log_mass = self.big_gamma_log_mass[i] if i < len(self.big_gamma_log_mass) else None
            mass = "" if log_mass is None else (math.exp(log_mass) if log_mass < 709 else math.inf)
            yield {
                "n": self.start_time + i,
                "gamma_coords": format_coords(site),
                "rule": self.rules[i].value if i < steps else "",
                "T_n": "" if i >= steps or self.t_back[i] is None else self.t_back[i],
                "good": int(self.good[i]) if i < len(self.good) else "",
                "big_gamma_coords": format_coords(self.big_gamma_at(self.start_time + i)),
                "mass_at_big_gamma": mass,
            }
