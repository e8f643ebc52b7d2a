"""Instance families shared by the module tests and the acceptance suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

from comodcalc.algmod import (
    AlgebraMorphism,
    Module,
    algebra_unit_morphism,
    module_from_matrix_of_generator,
    polynomial_quotient_morphism,
    regular_module,
    truncated_polynomial_algebra,
    matrix_algebra,
    product_algebra,
    trivial_algebra,
)
from comodcalc.coalg import (
    CoalgebraMorphism,
    RightComodule,
    counit_morphism,
    divided_power,
    grouplike,
    grouplike_map,
    inclusion_dp,
    matrix_coalgebra,
    regular_right,
    trivial_coalgebra,
    direct_sum_comodules,
)
from comodcalc.contra import free_contramodule, trivial_contramodule, direct_sum_contra
from comodcalc.corpus import standard_coalgebras
from comodcalc.exactla import GF, QQ, Mat
from comodcalc.repcat import (
    AlgebraRep,
    CoalgebraRep,
    FinitePoset,
    chain,
    coe,
    ex,
)

FIELDS = (GF(2), GF(5), QQ)
SMALL_FIELDS = (GF(2), GF(3), QQ)


def corpus_coalgebras(F):
    return standard_coalgebras(F)


def trivial_comodule(C, g: int = 0) -> RightComodule:
    """``K`` with coaction ``1 -> 1 (x) c_g`` for a grouplike basis element ``c_g``."""
    F = C.field
    return RightComodule(C, Mat.column(F, [1 if i == g else 0 for i in range(C.dim)]))


def comodule_family(C):
    """Regular, a one-dimensional one (when the first basis element is grouplike) and a sum."""
    out = [regular_right(C)]
    F = C.field
    e0 = Mat.unit(F, C.dim, 0)
    if C.delta @ e0 == e0.kron(e0) and (C.eps @ e0)[0, 0] == 1:
        out.append(trivial_comodule(C))
        out.append(direct_sum_comodules(regular_right(C), trivial_comodule(C)))
    return out


def contramodule_family(C):
    out = [free_contramodule(C, 1), free_contramodule(C, 2)]
    F = C.field
    e0 = Mat.unit(F, C.dim, 0)
    if C.delta @ e0 == e0.kron(e0):
        out.append(trivial_contramodule(C))
    return out


def coalgebra_morphisms(F):
    """Morphisms ``a: C -> D`` spanning injective, surjective and neither."""
    out = [
        inclusion_dp(F, 1, 2),
        inclusion_dp(F, 2, 3),
        inclusion_dp(F, 2, 4),
        counit_morphism(grouplike(F, 2)),
        counit_morphism(divided_power(F, 2)),
        grouplike_map(F, [0, 0, 1], 2),
        grouplike_map(F, [1], 2),
        CoalgebraMorphism.identity(divided_power(F, 2)),
    ]
    return out


def adjunction_triples(F, max_total: int = 12):
    """``(a, X, Y)`` with ``X`` over the source and ``Y`` over the target."""
    for a in coalgebra_morphisms(F):
        for X in comodule_family(a.source):
            for Y in comodule_family(a.target):
                if X.dim + Y.dim <= max_total:
                    yield a, X, Y


def contra_triples(F, max_total: int = 12):
    """``(a, X, Y)`` with ``X`` over the target and ``Y`` over the source (contraextension direction)."""
    for a in coalgebra_morphisms(F):
        for X in contramodule_family(a.target):
            for Y in contramodule_family(a.source):
                if X.dim + Y.dim <= max_total:
                    yield a, X, Y


def algebra_morphisms(F):
    return [
        polynomial_quotient_morphism(F, 3, 2),
        polynomial_quotient_morphism(F, 2, 1),
        algebra_unit_morphism(truncated_polynomial_algebra(F, 2)),
        algebra_unit_morphism(matrix_algebra(F, 2)),
        algebra_unit_morphism(product_algebra(F, 2)),
    ]


def module_family(A, side: str = "right"):
    F = A.field
    out = [regular_module(A, side)]
    if A.name.startswith("K[x]") and A.dim >= 2:
        J = Mat.from_rows(F, [[0, 1], [0, 0]])
        out.append(module_from_matrix_of_generator(A, J, side))
        out.append(module_from_matrix_of_generator(A, Mat.zeros(F, 1, 1), side))
    if A.dim == 1:
        out.append(Module(A, (Mat.identity(F, 2),), side, 2))
    return out


def algebra_triples(F, side_x: str = "right"):
    for al in algebra_morphisms(F):
        for X in module_family(al.source, side_x):
            for Y in module_family(al.target, side_x):
                yield al, X, Y


# representations -------------------------------------------------------------

def coalgebra_reps(F):
    """Chain ``DP(2) -> DP(3)``, chain ``KG2 -> K`` and the three-element V shape."""
    out = []
    a = inclusion_dp(F, 2, 3)
    out.append(CoalgebraRep(chain(2), {0: a.source, 1: a.target}, {(0, 1): a}, "dp"))
    e = counit_morphism(grouplike(F, 2))
    out.append(CoalgebraRep(chain(2), {0: e.source, 1: e.target}, {(0, 1): e}, "kgk"))
    P = FinitePoset.from_relations([0, 1, 2], [(0, 2), (1, 2)])
    G, D = grouplike(F, 2), divided_power(F, 2)
    out.append(CoalgebraRep(P, {0: G, 1: D, 2: trivial_coalgebra(F)},
                            {(0, 2): counit_morphism(G), (1, 2): counit_morphism(D)}, "vee"))
    return out


def algebra_reps(F):
    out = []
    q32, q21 = polynomial_quotient_morphism(F, 3, 2), polynomial_quotient_morphism(F, 2, 1)
    out.append(AlgebraRep(chain(3), {0: q32.source, 1: q32.target, 2: q21.target}, {(0, 1): q32, (1, 2): q21}, "kx"))
    u = algebra_unit_morphism(product_algebra(F, 2))
    out.append(AlgebraRep(chain(2), {0: u.source, 1: u.target}, {(0, 1): u}, "k2"))
    return out


def fiber_family(flavor, B):
    if flavor in ("cis-comodule", "trans-comodule"):
        return comodule_family(B)[:2]
    if flavor == "trans-contramodule":
        return contramodule_family(B)[::2]
    return module_family(B, "right")[:2]


def reps_for(flavor, F):
    return coalgebra_reps(F) if "module" not in flavor or "comodule" in flavor or "contra" in flavor else algebra_reps(F)


FLAVORS = ("cis-comodule", "trans-comodule", "trans-contramodule", "cis-module", "trans-module")


def objects_over(flavor, rep, max_total: int = 8):
    """``ex`` and ``coe`` of small fibers at every element of ``rep``."""
    out = []
    for x in rep.poset.elements:
        for V in fiber_family(flavor, rep.fibers[x]):
            for mk in (ex, coe):
                M = mk(flavor, rep, x, V)
                if M.total_dim <= max_total:
                    out.append(M)
    return out


def objects_for(flavor, F, max_total: int = 8):
    return [M for rep in reps_for(flavor, F) for M in objects_over(flavor, rep, max_total)]


def ex_ev_triples(flavor, F, max_total: int = 8):
    """``(rep, x, V, M)`` for the ex -| ev and ev -| coe certificates."""
    for rep in reps_for(flavor, F):
        objs = objects_over(flavor, rep, max_total)
        for x in rep.poset.elements:
            for V in fiber_family(flavor, rep.fibers[x]):
                for M in objs:
                    yield rep, x, V, M
