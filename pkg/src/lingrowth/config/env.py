from pathlib import Path
from typing import Optional

from pydantic import ConfigDict
from pydantic_settings import BaseSettings


class Tolerances(BaseSettings):
    # Rate units, absorbs finite-n and proxy bias in the growth bounds
    RATE: float = 0.05
    # Multiple of the Monte Carlo standard error used for "> 0" decisions
    SIGMA: float = 3.0
    # Allowed gap between the good-event frequency and c_delta
    LLN: float = 0.05
    # Largest fitted rate accepted as "no growth"
    NONGROWTH: float = 0.02
    # Float masses above this trip the overflow guard
    FLOAT_CEILING: float = 1e300

    model_config = ConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="allow",
        env_prefix="LINGROWTH_TOL_",
    )

    def echo(self) -> dict:
        """Tolerances as they are embedded into every report."""
        return {
            "rate": self.RATE,
            "sigma": self.SIGMA,
            "lln": self.LLN,
            "nongrowth": self.NONGROWTH,
        }


TOLERANCES = Tolerances()


class Defaults(BaseSettings):
    LOOKAHEAD_PER_RANGE: int = 20
    HEAVY_MC_SAMPLES: int = 20000
    ENUMERATION_MAX_VARIABLES: int = 16
    WORKERS: int = 1
    TAIL_FRACTION: float = 0.5
    LOG_LEVEL: str = "INFO"
    LOG_JSON: Optional[Path] = None

    model_config = ConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="allow",
        env_prefix="LINGROWTH_",
    )


DEFAULTS = Defaults()
