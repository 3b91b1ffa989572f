"""Exact toolkit for quantum sl(n+1) Mathieu modules."""

from ._kernels import BACKEND
from .qfield import LaurentPoly, Q, QRat, eval_at, qbinomial, qfactorial, qint, qrat, qshifted_factorial
from .algebra import Element, cartan, gen, mul, normalize, root_of
from .centralizer import OneDimRep, SubsetS, h_minus, h_plus, phi_eval, split_U0S
from .sl2module import Rank1Sl2Params, analyze, basis
from .rankn import RankNParams, rankn_analyze

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "LaurentPoly", "Q", "QRat", "eval_at", "qbinomial", "qfactorial", "qint", "qrat",
    "qshifted_factorial", "Element", "cartan", "gen", "mul", "normalize", "root_of", "OneDimRep", "SubsetS",
    "h_minus", "h_plus", "phi_eval", "split_U0S", "Rank1Sl2Params", "analyze", "basis", "RankNParams",
    "rankn_analyze",
]
