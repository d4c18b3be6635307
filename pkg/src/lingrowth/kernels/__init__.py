"""Kernel laws, counter-keyed samplers and exact kernel properties."""

from lingrowth.kernels.conditions import is_binary, is_coalescing_walk, is_nonrandom, is_trivial, two_site_condition
from lingrowth.kernels.enumeration import enumeration_variable_count, product_tail_law
from lingrowth.kernels.heavy import heavy_site
from lingrowth.kernels.models import (
    COLUMN,
    ROW,
    HeavySiteInfo,
    ModelSpec,
)
from lingrowth.kernels.samplers import product_slice, sample_slice, unit_patterns
from lingrowth.kernels.streams import Purpose, derive_seed, uniforms

__all__ = [
    "COLUMN",
    "HeavySiteInfo",
    "ModelSpec",
    "Purpose",
    "ROW",
    "derive_seed",
    "enumeration_variable_count",
    "heavy_site",
    "is_binary",
    "is_coalescing_walk",
    "is_nonrandom",
    "is_trivial",
    "product_slice",
    "product_tail_law",
    "sample_slice",
    "two_site_condition",
    "uniforms",
]
