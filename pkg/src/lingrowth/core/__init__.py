"""Lattice geometry, sparse mass fields and kernel slices."""

from lingrowth.core.kernel_slice import KernelSlice, multiply_slices
from lingrowth.core.lattice import (
    SITE_ORDER,
    Site,
    SiteOrder,
    add,
    dilate,
    l1,
    linf,
    min_site,
    origin,
    sub,
    unit_vectors,
)
from lingrowth.core.mass_field import (
    MassField,
    MassMode,
    apply_kernel,
    exact_value,
    log_total_mass,
    scale_add,
    total_mass,
)

__all__ = [
    "KernelSlice",
    "MassField",
    "MassMode",
    "SITE_ORDER",
    "Site",
    "SiteOrder",
    "add",
    "apply_kernel",
    "dilate",
    "exact_value",
    "l1",
    "linf",
    "log_total_mass",
    "min_site",
    "multiply_slices",
    "origin",
    "scale_add",
    "sub",
    "total_mass",
    "unit_vectors",
]
