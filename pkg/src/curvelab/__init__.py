"""curvelab: exact log canonical thresholds, Milnor numbers and GIT stability
for reduced plane curves, with an alpha-invariant probe for surfaces in P^3."""

from .mpoly import MPoly, squarefree_part
from .numberfield import QQ, FieldElement, NumberField
from .parsing import parse_polynomial
from .linear import LinearChange, apply_linear_change
from .factor import factor_univariate

__all__ = [
    "MPoly",
    "NumberField",
    "FieldElement",
    "QQ",
    "parse_polynomial",
    "LinearChange",
    "apply_linear_change",
    "factor_univariate",
    "squarefree_part",
]

__version__ = "0.1.0"
