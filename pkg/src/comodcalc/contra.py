"""Contramodules over finite-dimensional coalgebras.

A contramodule ``M`` over ``C`` is stored through its contraction
``pi: Hom(C, M) -> M`` with ``Hom(C, M) = M (x) C*``: a map ``h`` has
coordinates ``h(c_i) = sum_k H[k, i] m_k`` at index ``k d + i``.

Nested homs are identified by the adjunction between ``- (x) C`` and
``Hom(C, -)``: ``g in Hom(C (x) C, M)`` corresponds to ``c -> (c' -> g(c (x) c'))``
in ``Hom(C, Hom(C, M)) = (M (x) C*) (x) C*``, so the outer argument is the last
tensor factor.  With that choice the axioms read

* counit: ``pi (id (x) eps*) = id``;
* contra-associativity: ``pi (pi (x) id) = pi (id (x) X)`` where
  ``X = (flip Delta)^T`` is the matrix of ``g -> g o Delta``.

Under this identification ``pi(m (x) f)`` makes ``M`` a left ``C*``-module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algmod import Module, balanced_tensor
from .coalg import (
    Coalgebra,
    CoalgebraMorphism,
    LeftComodule,
    RightComodule,
    as_left,
    dual_algebra,
    hom_comodules,
)
from .exactla import (
    ExactField,
    Mat,
    Quotient,
    Subspace,
    coordinate_map,
    image,
    intertwiners,
    kernel,
    quotient_operators,
    restrict_operators,
    swap_matrix,
)
from .report import CheckReport, DimensionError, MismatchError, compare_maps

__all__ = [
    "Contramodule",
    "ContraExtension",
    "Contratensor",
    "check_contramodule",
    "check_contra_morphism",
    "free_contramodule",
    "contrarestrict",
    "contraextend",
    "contraextend_data",
    "contraextend_by_presentation",
    "cohom_contra",
    "contratensor",
    "contratensor_data",
    "contratensor_balanced",
    "hom_comodule_contra",
    "hom_comodule_contra_data",
    "hom_contra",
    "contramodule_to_module",
    "module_to_contramodule",
    "trivial_contramodule",
    "zero_contramodule",
    "direct_sum_contra",
    "contraextension_adjunction",
]


@dataclass(frozen=True, eq=False)
class Contramodule:
    coalgebra: Coalgebra
    pi: Mat

    def __post_init__(self):
        m = self.pi.rows
        if self.pi.cols != m * self.coalgebra.dim:
            raise DimensionError("contraction must be dim M x (dim M * dim C)")

    @property
    def dim(self) -> int:
        return self.pi.rows

    @property
    def field(self) -> ExactField:
        return self.coalgebra.field

    @property
    def base(self) -> Coalgebra:
        return self.coalgebra

    def operators(self) -> tuple[Mat, ...]:
        """``m -> pi(m (x) c^i)``: the left ``C*``-action of the dual basis."""
        d, m = self.coalgebra.dim, self.dim
        return tuple(self.pi.select_cols([k * d + i for k in range(m)]) for i in range(d))

    @classmethod
    def from_operators(cls, C: Coalgebra, ops: Sequence[Mat], dim: int) -> "Contramodule":
        d = C.dim
        cols = [None] * (dim * d)
        for i, U in enumerate(ops):
            for k in range(dim):
                cols[k * d + i] = U.column_values(k)
        if not cols:
            return cls(C, Mat.zeros(C.field, dim, 0))
        return cls(C, Mat.from_columns(C.field, cols, dim))

    def with_operators(self, ops: Sequence[Mat], dim: int) -> "Contramodule":
        return Contramodule.from_operators(self.coalgebra, ops, dim)

    def submodule(self, sub: Subspace) -> "Contramodule":
        return self.with_operators(restrict_operators(sub, self.operators()), sub.dim)

    def quotient(self, q: Quotient) -> "Contramodule":
        return self.with_operators(quotient_operators(q, self.operators()), q.dim)


def _assoc_rhs(C: Coalgebra, m: int) -> Mat:
    return Mat.identity(C.field, m).kron(C.flipped_delta_dual)


def check_contramodule(M: Contramodule) -> CheckReport:
    C, F, m = M.coalgebra, M.field, M.dim
    Im, Ic = Mat.identity(F, m), Mat.identity(F, C.dim)
    v = compare_maps("counit", M.pi @ Im.kron(C.eps.T), Im)
    v += compare_maps("contra-associativity", M.pi @ M.pi.kron(Ic), M.pi @ _assoc_rhs(C, m))
    return CheckReport("contramodule", tuple(v))


def check_contra_morphism(f: Mat, M: Contramodule, N: Contramodule) -> CheckReport:
    Ic = Mat.identity(f.field, M.coalgebra.dim)
    return CheckReport("contramodule morphism", tuple(compare_maps("contralinearity", f @ M.pi, N.pi @ f.kron(Ic))))


def free_contramodule(C: Coalgebra, dim_v: int) -> Contramodule:
    """``T_C(V) = Hom(C, V) = V (x) C*`` with contraction ``g -> g o Delta``."""
    return Contramodule(C, _assoc_rhs(C, dim_v))


def free_contra_map(C: Coalgebra, g: Mat, dim_w: int) -> Mat:
    """The contramodule map ``T_C(V) -> T_C(W)`` extending a linear ``g: V -> Hom(C, W)``."""
    return _assoc_rhs(C, dim_w) @ g.kron(Mat.identity(C.field, C.dim))


def trivial_contramodule(C: Coalgebra, g_functional: Sequence | None = None) -> Contramodule:
    """One-dimensional contramodule ``pi(1 (x) f) = f(x)`` for a grouplike-like point.

    With no argument the point is the first basis element, which is grouplike
    for the standard coalgebras (``KG``, ``DP(n)``).
    """
    F = C.field
    vals = list(g_functional) if g_functional is not None else [1] + [0] * (C.dim - 1)
    return Contramodule(C, Mat.from_rows(F, [vals]))


def zero_contramodule(C: Coalgebra) -> Contramodule:
    return Contramodule(C, Mat.zeros(C.field, 0, 0))


def direct_sum_contra(M: Contramodule, N: Contramodule) -> Contramodule:
    if M.coalgebra != N.coalgebra:
        raise MismatchError("direct sum over different coalgebras")
    ops = [Mat.block_diag(M.field, [a, b]) for a, b in zip(M.operators(), N.operators())]
    return Contramodule.from_operators(M.coalgebra, ops, M.dim + N.dim)


def hom_contra(M: Contramodule, N: Contramodule) -> list[Mat]:
    if M.coalgebra != N.coalgebra:
        raise MismatchError("hom over different coalgebras")
    return intertwiners(M.field, M.operators(), N.operators(), M.dim, N.dim)


def contramodule_to_module(M: Contramodule) -> Module:
    return Module(dual_algebra(M.coalgebra), M.operators(), "left", M.dim)


def module_to_contramodule(N: Module, C: Coalgebra) -> Contramodule:
    if N.algebra != dual_algebra(C) or N.side != "left":
        raise MismatchError("expected a left module over the dual algebra")
    return Contramodule.from_operators(C, N.ops, N.dim)


def contrarestrict(a: CoalgebraMorphism, M: Contramodule) -> Contramodule:
    """``pi' = pi (id (x) a*)`` on ``Hom(D, M) -> Hom(C, M) -> M``."""
    if M.coalgebra != a.source:
        raise MismatchError("contrarestrict: contramodule is not over the source coalgebra")
    return Contramodule(a.target, M.pi @ Mat.identity(M.field, M.dim).kron(a.map.T))


def _cohom_relations(P: RightComodule, M: Contramodule) -> Mat:
    """Image of ``Hom(P (x) C, M)`` in ``Hom(P, M)`` under the difference of the two maps."""
    C, F = M.coalgebra, M.field
    if P.coalgebra != C:
        raise MismatchError("cohom over different coalgebras")
    p = P.dim
    Ip = Mat.identity(F, p)
    # Hom(P, Hom(C, M)) = M (x) C* (x) P*, outer argument last
    f = M.pi.kron(Ip)
    Y = (swap_matrix(F, p, C.dim) @ P.rho).T
    g = Mat.identity(F, M.dim).kron(Y)
    return f - g


def cohom_contra(P: RightComodule, M: Contramodule) -> Quotient:
    """``Cohom_C(P, M)``: coequalizer of ``Hom(P (x) C, M)`` into ``Hom(P, M) = M (x) P*``."""
    return Quotient.of(image(_cohom_relations(P, M)))


@dataclass(frozen=True, eq=False)
class ContraExtension:
    """``a^. M = Cohom_D(C, M)`` as a quotient of ``T_C(M) = M (x) C*``."""

    contramodule: Contramodule
    quotient: Quotient
    source: Contramodule
    morphism: CoalgebraMorphism

    def unit(self) -> Mat:
        """``m -> [eps_C . m]``, the unit of contraextension -| contrarestriction."""
        C = self.morphism.source
        return self.quotient.proj @ Mat.identity(C.field, self.source.dim).kron(C.eps.T)

    def induced(self, f: Mat, other: "ContraExtension") -> Mat:
        """``[h] -> [f o h]``."""
        C = self.morphism.source
        return other.quotient.proj @ f.kron(Mat.identity(f.field, C.dim)) @ self.quotient.section

    def counit_into(self, N: Contramodule) -> Mat:
        """``[h] -> pi_N(h)`` when ``self`` is the contraextension of ``a_. N``."""
        return N.pi @ self.quotient.section


def contraextend_data(a: CoalgebraMorphism, M: Contramodule) -> ContraExtension:
    if M.coalgebra != a.target:
        raise MismatchError("contraextend: contramodule is not over the target coalgebra")
    C = a.source
    F = M.field
    C_over_D = RightComodule(a.target, Mat.identity(F, C.dim).kron(a.map) @ C.delta)
    q = cohom_contra(C_over_D, M)
    free = free_contramodule(C, M.dim)
    pi = q.proj @ free.pi @ q.section.kron(Mat.identity(F, C.dim))
    return ContraExtension(Contramodule(C, pi), q, M, a)


def contraextend(a: CoalgebraMorphism, M: Contramodule) -> Contramodule:
    """Contraextension of scalars, computed as the cohom coequalizer."""
    return contraextend_data(a, M).contramodule


def contraextend_by_presentation(a: CoalgebraMorphism, M: Contramodule) -> tuple[Contramodule, Subspace]:
    """Contraextension through a free presentation ``T_D(K) -> T_D(M) -> M -> 0``.

    Free objects go to free objects, ``T_D(V) -> T_C(V)``, and a free map given
    by ``g: V -> Hom(D, W)`` goes to the one given by ``h -> h o a``.  Returns
    the cokernel contramodule and the relation subspace of ``M (x) C*``.
    """
    if M.coalgebra != a.target:
        raise MismatchError("contraextend: contramodule is not over the target coalgebra")
    C = a.source
    F = M.field
    K = kernel(M.pi)  # inside T_D(M)
    g = Mat.identity(F, M.dim).kron(a.map.T) @ K.basis
    rel = image(free_contra_map(C, g, M.dim))
    q = Quotient.of(rel)
    free = free_contramodule(C, M.dim)
    pi = q.proj @ free.pi @ q.section.kron(Mat.identity(F, C.dim))
    return Contramodule(C, pi), rel


def _left_coaction_ops(N: RightComodule, left: LeftComodule | None) -> tuple[Mat, ...]:
    if left is None:
        left = as_left(N)
    if left.coalgebra != N.coalgebra or left.dim != N.dim:
        raise MismatchError("left coaction does not match the comodule")
    return left.operators()


@dataclass(frozen=True, eq=False)
class Contratensor:
    comodule: RightComodule
    quotient: Quotient
    left: Contramodule
    right: RightComodule


def contratensor_data(M: Contramodule, N: RightComodule, left: LeftComodule | None = None) -> Contratensor:
    """``M boxtimes_C N``: coequalizer of ``Hom(C, M) (x) N`` into ``M (x) N``.

    ``N`` must be a bicomodule: pass its left coaction, or use a cocommutative
    ``C`` where the flipped right coaction serves.
    """
    C = M.coalgebra
    if N.coalgebra != C:
        raise MismatchError("contratensor over different coalgebras")
    F = M.field
    m, n, d = M.dim, N.dim, C.dim
    S = _left_coaction_ops(N, left)
    In, Ic = Mat.identity(F, n), Mat.identity(F, d)
    f = M.pi.kron(In)
    # h (x) n -> h(n_{-1}) (x) n_0 with h = m_k (x) c^i
    cols = []
    for i, j in product(range(d), range(n)):
        cols.append(S[i].column_values(j))
    lam = Mat.from_columns(F, cols, n) if cols else Mat.zeros(F, n, 0)
    g = Mat.identity(F, m).kron(lam)
    q = Quotient.of(image(f - g))
    rho_amb = Mat.identity(F, m).kron(N.rho)
    rho = q.proj.kron(Ic) @ rho_amb @ q.section
    return Contratensor(RightComodule(C, rho), q, M, N)


def contratensor(M: Contramodule, N: RightComodule, left: LeftComodule | None = None) -> RightComodule:
    return contratensor_data(M, N, left).comodule


def contratensor_balanced(M: Contramodule, N: RightComodule, left: LeftComodule | None = None) -> Quotient:
    """``M (x)_{C*} N`` computed from the dual-algebra actions, as a quotient of ``M (x) N``.

    ``N`` is a right ``C*``-module through its left coaction and ``M`` a left
    one through its contraction; the relations are ``m f (x) n - m (x) n f``.
    """
    F = M.field
    S = _left_coaction_ops(N, left)
    Nmod = Module(dual_algebra(N.coalgebra), S, "right", N.dim)
    Mmod = contramodule_to_module(M)
    q = balanced_tensor(Nmod, Mmod)  # quotient of N (x) M
    flip = swap_matrix(F, M.dim, N.dim)  # M (x) N -> N (x) M
    return Quotient.of(q.sub.map(flip.T))


@dataclass(frozen=True, eq=False)
class HomComoduleContra:
    contramodule: Contramodule
    space: Subspace  # inside Hom(N, P) = P (x) N*
    left: RightComodule
    right: RightComodule


def hom_comodule_contra_data(N: RightComodule, P: RightComodule, left: LeftComodule | None = None) -> HomComoduleContra:
    """``Hom_C(N, P)`` with ``pi(phi)(n) = sum phi(n_{-1})(n_0)``."""
    C = N.coalgebra
    if P.coalgebra != C:
        raise MismatchError("hom over different coalgebras")
    F = N.field
    S = _left_coaction_ops(N, left)
    homs = hom_comodules(N, P)
    n, p = N.dim, P.dim
    vecs = [Mat(F, p * n, 1, [[x] for r in h.data for x in r]) for h in homs]
    H = Subspace.span(F, p * n, vecs) if vecs else Subspace.zero(F, p * n)
    Pc = coordinate_map(H)
    Ip = Mat.identity(F, p)
    ops = tuple(Pc @ Ip.kron(Si.T) @ H.basis for Si in S)
    return HomComoduleContra(Contramodule.from_operators(C, ops, H.dim), H, N, P)


def hom_comodule_contra(N: RightComodule, P: RightComodule, left: LeftComodule | None = None) -> Contramodule:
    return hom_comodule_contra_data(N, P, left).contramodule


def contraextension_adjunction(a: CoalgebraMorphism):
    """``contraextend -| contrarestrict`` along ``a: C -> D``."""
    from .adjunction import Adjunction

    ident = lambda M: Mat.identity(M.field, M.dim)  # noqa: E731
    return Adjunction(
        name="contraextend -| contrarestrict",
        left=lambda X: contraextend(a, X),
        right=lambda Y: contrarestrict(a, Y),
        left_mor=lambda f, X, X2: contraextend_data(a, X).induced(f, contraextend_data(a, X2)),
        right_mor=lambda g, Y, Y2: g,
        unit=lambda X: contraextend_data(a, X).unit(),
        counit=lambda Y: contraextend_data(a, contrarestrict(a, Y)).counit_into(Y),
        hom_src=hom_contra,
        hom_tgt=hom_contra,
        id_src=ident,
        id_tgt=ident,
    )
