from pathlib import Path

from lingrowth.config.constants import OutputFiles
from lingrowth.config.env import Defaults, Tolerances


def test_tolerance_defaults():
    tolerances = Tolerances()
    assert tolerances.echo() == {"rate": 0.05, "sigma": 3.0, "lln": 0.05, "nongrowth": 0.02}
    assert tolerances.FLOAT_CEILING == 1e300


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LINGROWTH_TOL_RATE", "0.1")
    monkeypatch.setenv("LINGROWTH_WORKERS", "4")
    monkeypatch.setenv("LINGROWTH_LOOKAHEAD_PER_RANGE", "5")
    assert Tolerances().RATE == 0.1
    defaults = Defaults()
    assert defaults.WORKERS == 4
    assert defaults.LOOKAHEAD_PER_RANGE == 5


def test_output_files_live_under_the_directory():
    assert OutputFiles.ORACLE.under("out") == Path("out") / "oracle.json"
