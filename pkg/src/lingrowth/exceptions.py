"""Exceptions raised by lingrowth."""


class LinGrowthError(Exception):
    """Base class of every domain error."""


class ConfigError(LinGrowthError):
    """An experiment configuration could not be parsed or validated."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class NumericalGuardError(LinGrowthError):
    """A numerical guard tripped during a simulation."""


class MassOverflowError(NumericalGuardError):
    """A float mass left the representable range; rerun with log masses."""


class WindowTooSmallError(LinGrowthError):
    """A kernel slice does not cover the support of the field it is applied to."""


class EmptySiteSetError(ValueError, LinGrowthError):
    """Min of an empty set of sites was requested."""


class NoHeavyEntryError(LinGrowthError):
    """P(B_{o,x} >= 1 + delta) vanishes for every site x."""


class NoPercolationStartError(LinGrowthError):
    """The origin (0, o) is not a (proxy) percolation point."""


class ExtinctTrajectoryError(LinGrowthError):
    """A growth rate was requested for a trajectory that died out."""


class NonBinaryKernelError(LinGrowthError):
    """A path-counting oracle met a kernel entry other than 0 or 1."""


class SizeGuardError(LinGrowthError):
    """An exhaustive computation was requested beyond its size guard."""


class UnsupportedModelError(LinGrowthError):
    """The operation is not defined for this kernel variant."""
