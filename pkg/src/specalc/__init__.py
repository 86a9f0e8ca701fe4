"""Exact dimension calculators for bound quiver algebras, species and period spaces."""
from .dimforms import bounded_dim, extract_species, hereditary_dim, saturate
from .homalg import bongartz_ext_pairwise, resolution_ext_oracle
from .mixedtate import RATIONALS, FieldParams, dim_B, mtm_report, path_counts, zagier_d
from .motives import OneMotiveInput, generic_period_dim, one_motive_dims
from .pathalg import AlgebraPresentation
from .quiver import Quiver, SpeciesData

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation", "FieldParams", "OneMotiveInput", "Quiver", "RATIONALS", "SpeciesData",
    "bongartz_ext_pairwise", "bounded_dim", "dim_B", "extract_species", "generic_period_dim",
    "hereditary_dim", "mtm_report", "one_motive_dims", "path_counts", "resolution_ext_oracle",
    "saturate", "zagier_d",
]
