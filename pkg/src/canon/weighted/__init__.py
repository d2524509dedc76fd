"""Linear systems in weighted projective space and the tricuspidal-quartic
bidouble plane."""
from .curves import (
    ConfigurationVerdict,
    CuspPoint,
    PlaneQuartic,
    configuration_check,
    cusps_of_bidouble,
    is_ordinary_cusp,
    standard_tricuspidal,
    tricuspidal_quartic,
)
from .linsys import (
    P11122,
    WeightedLinearSystem,
    double_point_system,
    monomials,
    multiplicity_system_dimension,
)
from .polynomials import Poly
from .scalars import QuadExt

__all__ = [
    "ConfigurationVerdict", "CuspPoint", "PlaneQuartic", "configuration_check",
    "cusps_of_bidouble", "is_ordinary_cusp", "standard_tricuspidal",
    "tricuspidal_quartic", "P11122", "WeightedLinearSystem", "double_point_system",
    "monomials", "multiplicity_system_dimension", "Poly", "QuadExt",
]
