"""Representations of finite posets and the objects living over them."""

from .poset import FinitePoset, chain, check_poset, discrete, point
from .reps import AlgebraRep, CoalgebraRep, check_representation, constant_rep, dual_rep
from .objects import *  # noqa: F401,F403
from .objects import __all__ as _obj_all
from .functors import *  # noqa: F401,F403
from .functors import __all__ as _fun_all
from .cartesian import *  # noqa: F401,F403
from .cartesian import __all__ as _cart_all
from .fg import ContraComoduleAdjunction, contra_comodule_adjunction

__all__ = [
    "FinitePoset", "chain", "check_poset", "discrete", "point",
    "AlgebraRep", "CoalgebraRep", "check_representation", "constant_rep", "dual_rep",
    *_obj_all, *_fun_all, *_cart_all,
    "ContraComoduleAdjunction", "contra_comodule_adjunction",
]
