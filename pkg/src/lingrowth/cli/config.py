"""
Experiment configuration.

Precedence, lowest first: field defaults (some read from the LINGROWTH_
environment settings), the JSON config file, command-line flags.

JSON schema::

    {
      "model": {"variant": {"kind": "weighted", "p": 0.7, "v": 1.5}, "dimension": 1},
      "ct_kernel": {"dimension": 1, "components": [{"offset": [0], "values": [[1.0, 1.0]]}]},
      "delta": 0.4, "deltas": [0.4, 1.0], "epsilon": 0.0, "m": 1,
      "horizon": 200, "lookahead": 40, "replicas": 20, "seed": 7,
      "tail_fraction": 0.5, "t_end": 10.0, "oracle_steps": 10,
      "log_mass": false, "exact": false, "out": "out"
    }

``model.variant.kind`` is one of site_op, bond_op, bcpp_lse, bcpp_dlse,
weighted, table, product.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from lingrowth.config.env import DEFAULTS
from lingrowth.config.utils import config_hash
from lingrowth.core.mass_field import MassMode
from lingrowth.ctsim.kernel import CtKernel
from lingrowth.exceptions import ConfigError
from lingrowth.kernels.models import ROW, ModelSpec

config_logger = logger.bind(component="cli")

MODEL_FLAGS = ("model", "p", "q", "v", "dimension")


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    model: Optional[ModelSpec] = None
    ct_kernel: Optional[CtKernel] = None
    delta: float = Field(default=0.4, gt=0)
    deltas: Optional[List[float]] = None
    epsilon: float = Field(default=0.0, ge=0)
    m: int = Field(default=1, ge=1)
    horizon: int = Field(default=100, ge=0)
    lookahead: Optional[int] = Field(default=None, ge=1)
    replicas: int = Field(default=20, ge=1)
    seed: int = 0
    tail_fraction: float = Field(default_factory=lambda: DEFAULTS.TAIL_FRACTION, gt=0, le=1)
    t_end: float = Field(default=10.0, gt=0)
    oracle_steps: int = Field(default=10, ge=0)
    log_mass: bool = False
    exact: bool = False
    workers: int = Field(default_factory=lambda: DEFAULTS.WORKERS, ge=1)
    out: Path = Path("out")

    @model_validator(mode="after")
    def _consistent(self):
        if self.log_mass and self.exact:
            raise ValueError("log_mass and exact are mutually exclusive")
        if self.epsilon >= self.delta:
            raise ValueError(f"epsilon {self.epsilon} must be smaller than delta {self.delta}")
        return self

    @property
    def mode(self) -> MassMode:
        if self.log_mass:
            return MassMode.LOG
        if self.exact:
            return MassMode.EXACT
        return MassMode.FLOAT

    @property
    def delta_grid(self) -> List[float]:
        return sorted(self.deltas) if self.deltas else [self.delta]

    def require_model(self) -> ModelSpec:
        if self.model is None:
            raise ConfigError("No kernel model configured; pass --model or a config file")
        return self.model

    def require_ct_kernel(self) -> CtKernel:
        if self.ct_kernel is None:
            raise ConfigError("No continuous-time kernel configured; pass --model ct_... or a config file")
        return self.ct_kernel

    def digest(self) -> str:
        """Hash of everything that determines the outputs; not the output path or thread count."""
        return config_hash(self.model_dump(mode="json", exclude={"out", "workers"}))


def preset(name: str, p: Optional[float], q: Optional[float], v: Optional[float], dimension: int):
    """ModelSpec or CtKernel for a named preset; returns (field, value)."""
    p = 0.5 if p is None else p
    e1 = tuple(1 if j == 0 else 0 for j in range(dimension))
    here = (0,) * dimension
    catalogue = {
        "site_op": lambda: ("model", ModelSpec.site_op(p, dimension)),
        "bond_op": lambda: ("model", ModelSpec.bond_op(p, dimension)),
        "bcpp_lse": lambda: ("model", ModelSpec.bcpp_lse(p, 0.5 if q is None else q, dimension)),
        "bcpp_dlse": lambda: ("model", ModelSpec.bcpp_dlse(p, 0.5 if q is None else q, dimension)),
        "weighted": lambda: ("model", ModelSpec.weighted(p, 1.5 if v is None else v, dimension=dimension)),
        "coalescing_walk": lambda: (
            "model",
            ModelSpec.table(
                [(0.5, {e1: 1.0}), (0.5, {tuple(-c for c in e1): 1.0})], orientation=ROW, dimension=dimension
            ),
        ),
        "ct_bernoulli": lambda: (
            "ct_kernel",
            CtKernel.bernoulli({here: 1.0}, {e1: (p, 1.0 if v is None else v)}, dimension),
        ),
        "ct_doubling": lambda: ("ct_kernel", CtKernel.deterministic({here: 2.0}, dimension)),
        "ct_identity": lambda: ("ct_kernel", CtKernel.deterministic({here: 1.0}, dimension)),
        "ct_walk": lambda: ("ct_kernel", CtKernel.deterministic({e1: 1.0}, dimension)),
    }
    if name not in catalogue:
        raise ConfigError(f"Unknown model preset {name!r}; choose from {sorted(catalogue)}")
    try:
        return catalogue[name]()
    except ValidationError as e:
        raise ConfigError(f"Invalid parameters for preset {name!r}: {e.errors()[0]['msg']}") from e


def load_config_file(path) -> Dict[str, Any]:
    """Parse a JSON config document, reporting syntax errors with line and column."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in {path}: {e.msg}", line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a JSON object", line=1, column=1)
    return data


def _override_parameters(model: Dict[str, Any], flags: Dict[str, Any]) -> None:
    variant = model.setdefault("variant", {})
    for name in ("p", "q", "v"):
        if name in flags:
            variant[name] = flags[name]
    if "dimension" in flags:
        model["dimension"] = flags["dimension"]


def build_config(config_path=None, **flags) -> ExperimentConfig:
    """
    Merge the config file and flags into an ExperimentConfig.

    Raises:
        ConfigError: unreadable file, invalid JSON, unknown preset or a field
                     failing validation (with its location)
    """
    data = load_config_file(config_path) if config_path else {}
    flags = {k.replace("-", "_"): v for k, v in flags.items() if v is not None}
    model_flags = {k: flags.pop(k) for k in MODEL_FLAGS if k in flags}

    if "model" in model_flags:
        field, value = preset(
            str(model_flags["model"]),
            model_flags.get("p"),
            model_flags.get("q"),
            model_flags.get("v"),
            int(model_flags.get("dimension", 1)),
        )
        data[field] = value.model_dump(mode="json")
    elif model_flags and isinstance(data.get("model"), dict):
        _override_parameters(data["model"], model_flags)
    elif model_flags:
        raise ConfigError(f"Flags {sorted(model_flags)} need --model or a configured model")

    if "deltas" in flags and not isinstance(flags["deltas"], (list, tuple)):
        flags["deltas"] = [flags["deltas"]]
    data.update(flags)
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigError(f"Invalid configuration at {location}: {first['msg']}") from e
    config_logger.debug(f"Configuration {config.digest()}: {config.model_dump(mode='json')}")
    return config
