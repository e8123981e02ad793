from .utils import DomainError, ParseError, ShamError, UsageError
from .poly import BPoly, UPoly, divides, resultant_y
from .derivation import (
    Derivation,
    ShamsuddinDerivation,
    certify_no_singular_points,
    is_simple_shamsuddin,
    solve_sham_ode,
    stabilizes_ideal,
)
from .automorphism import Affine, Automorphism, ElemX, ElemY, RawEndo
from .isotropy import isotropy_shamsuddin, solve_commuting_system, simplicity_crosscheck, verify_group_law
from .series import TruncatedSeries, solve_through
from .jobs import JobSpec, Report, run

__all__ = [
    "ShamError", "DomainError", "ParseError", "UsageError",
    "UPoly", "BPoly", "divides", "resultant_y",
    "Derivation", "ShamsuddinDerivation", "solve_sham_ode", "is_simple_shamsuddin",
    "stabilizes_ideal", "certify_no_singular_points",
    "Affine", "ElemY", "ElemX", "Automorphism", "RawEndo",
    "isotropy_shamsuddin", "solve_commuting_system", "verify_group_law", "simplicity_crosscheck",
    "TruncatedSeries", "solve_through",
    "JobSpec", "Report", "run",
]
