"""Exact linear-algebra engine for comodules, contramodules and modules over
representations of finite posets in finite-dimensional coalgebras and algebras.

Submodules: ``exactla`` (exact fields and matrices), ``coalg``, ``contra``,
``algmod`` (fiber-level categories and change-of-base functors), ``repcat``
(representations, objects, ex/ev/coe, cartesian objects), ``rational``
(pairings and rationalization), ``codec``/``corpus``/``cli`` (I/O).
"""

from .exactla import GF, QQ, ExactField, Mat, Subspace, Quotient
from .report import CheckReport, DimensionError, MismatchError, PreconditionError, UnsupportedInputError, Violation

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "ExactField", "Mat", "Subspace", "Quotient",
    "CheckReport", "Violation", "DimensionError", "MismatchError", "PreconditionError", "UnsupportedInputError",
    "__version__",
]
