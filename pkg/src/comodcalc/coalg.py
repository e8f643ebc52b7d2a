"""Finite-dimensional coalgebras, comodules and the comodule functor calculus.

Conventions (all i-major):

* ``delta`` is ``d^2 x d``: column ``j`` holds the coordinates of ``Delta(c_j)``.
* a right comodule has ``rho: M -> M (x) C`` (``m d x m``), a left one
  ``rho: M -> C (x) M`` (``d m x m``).
* the dual algebra ``C*`` has ``mult = delta^T`` and ``unit = eps^T``, i.e.
  ``(f * g)(c) = sum f(c_1) g(c_2)``.
* a right comodule is a left ``C*``-module via ``f . m = sum m_0 f(m_1)``; the
  operator of the dual basis element ``c^i`` is ``(id (x) c^i) rho``.  A left
  comodule is likewise a right ``C*``-module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algmod import Algebra, AlgebraMorphism, BaseChange, Module, extend_data, is_injective, is_projective, regular_module
from .exactla import (
    ExactField,
    Mat,
    Quotient,
    Subspace,
    coordinate_map,
    equalizer,
    intertwiners,
    invariant_closure,
    quotient_operators,
    restrict_operators,
    swap_matrix,
)
from .report import CheckReport, DimensionError, MismatchError, Violation, compare_maps

__all__ = [
    "Coalgebra",
    "CoalgebraMorphism",
    "RightComodule",
    "LeftComodule",
    "Coinduction",
    "Cohom",
    "check_coalgebra",
    "check_coalgebra_morphism",
    "check_comodule",
    "dual_algebra",
    "dual_morphism",
    "comodule_to_module",
    "module_to_comodule",
    "regular_right",
    "regular_left",
    "as_left",
    "cotensor",
    "cotensor_unit_map",
    "corestrict",
    "coinduce",
    "coinduce_data",
    "coinduce_via_dual",
    "cohom",
    "cohom_data",
    "hom_comodules",
    "generated_subcomodule",
    "is_coflat",
    "is_sigma_injective",
    "is_quasi_finite",
    "grouplike",
    "divided_power",
    "matrix_coalgebra",
    "trivial_coalgebra",
    "inclusion_dp",
    "counit_morphism",
    "grouplike_map",
    "point_morphism",
    "check_comodule_morphism",
    "zero_comodule",
    "direct_sum_comodules",
    "QUASI_FINITE_NOTE",
    "coinduction_adjunction",
    "cohom_adjunction",
]


@dataclass(frozen=True, eq=False)
class Coalgebra:
    field: ExactField
    dim: int
    delta: Mat
    eps: Mat
    name: str = ""

    def __post_init__(self):
        d = self.dim
        if self.delta.shape != (d * d, d) or self.eps.shape != (1, d):
            raise DimensionError(f"coalgebra of dim {d} needs delta {d*d}x{d} and eps 1x{d}")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Coalgebra) and self.field == other.field
                and self.delta == other.delta and self.eps == other.eps)

    def __hash__(self) -> int:
        return hash((self.delta, self.eps))

    def __repr__(self) -> str:
        return f"Coalgebra({self.name or '?'}, dim={self.dim}, {self.field})"

    def is_cocommutative(self) -> bool:
        return swap_matrix(self.field, self.dim, self.dim) @ self.delta == self.delta

    def dual(self) -> Algebra:
        return dual_algebra(self)

    @property
    def flipped_delta_dual(self) -> Mat:
        """``X: C* (x) C* -> C*`` with ``X(g (x) f) = f * g`` in coordinates.

        This is the matrix of ``h -> h o Delta`` from ``Hom(C (x) C, V)`` to
        ``Hom(C, V)`` once ``Hom(C, Hom(C, V)) = V (x) C* (x) C*`` is written
        with the outer argument last.
        """
        return (swap_matrix(self.field, self.dim, self.dim) @ self.delta).T


@dataclass(frozen=True, eq=False)
class CoalgebraMorphism:
    source: Coalgebra
    target: Coalgebra
    map: Mat
    name: str = ""

    def __post_init__(self):
        if self.map.shape != (self.target.dim, self.source.dim):
            raise DimensionError("coalgebra morphism has the wrong shape")

    @classmethod
    def identity(cls, C: Coalgebra) -> "CoalgebraMorphism":
        return cls(C, C, Mat.identity(C.field, C.dim), "id")

    def compose(self, first: "CoalgebraMorphism") -> "CoalgebraMorphism":
        """``self`` after ``first``."""
        if first.target != self.source:
            raise MismatchError("coalgebra morphisms are not composable")
        return CoalgebraMorphism(first.source, self.target, self.map @ first.map,
                                 f"{self.name}.{first.name}" if self.name and first.name else "")


class _Comodule:
    coalgebra: Coalgebra
    rho: Mat

    @property
    def field(self) -> ExactField:
        return self.coalgebra.field

    @property
    def base(self) -> Coalgebra:
        return self.coalgebra

    @property
    def dim(self) -> int:
        return self.rho.cols


@dataclass(frozen=True, eq=False)
class RightComodule(_Comodule):
    coalgebra: Coalgebra
    rho: Mat

    def __post_init__(self):
        m = self.rho.cols
        if self.rho.rows != m * self.coalgebra.dim:
            raise DimensionError("right coaction must be (dim M * dim C) x dim M")

    def operators(self) -> tuple[Mat, ...]:
        """``(id (x) c^i) rho`` for each dual basis element: the left ``C*``-action."""
        d, m = self.coalgebra.dim, self.dim
        return tuple(self.rho.select_rows([k * d + i for k in range(m)]) for i in range(d))

    @classmethod
    def from_operators(cls, C: Coalgebra, ops: Sequence[Mat], dim: int) -> "RightComodule":
        d = C.dim
        rows = [None] * (dim * d)
        for i, T in enumerate(ops):
            for k in range(dim):
                rows[k * d + i] = T.data[k]
        return cls(C, Mat(C.field, dim * d, dim, rows))

    def with_operators(self, ops: Sequence[Mat], dim: int) -> "RightComodule":
        return RightComodule.from_operators(self.coalgebra, ops, dim)

    def submodule(self, sub: Subspace) -> "RightComodule":
        return self.with_operators(restrict_operators(sub, self.operators()), sub.dim)

    def quotient(self, q: Quotient) -> "RightComodule":
        return self.with_operators(quotient_operators(q, self.operators()), q.dim)


@dataclass(frozen=True, eq=False)
class LeftComodule(_Comodule):
    coalgebra: Coalgebra
    rho: Mat

    def __post_init__(self):
        m = self.rho.cols
        if self.rho.rows != m * self.coalgebra.dim:
            raise DimensionError("left coaction must be (dim C * dim M) x dim M")

    def operators(self) -> tuple[Mat, ...]:
        """``(c^i (x) id) rho``: the right ``C*``-action."""
        m = self.dim
        return tuple(self.rho.select_rows([i * m + k for k in range(m)]) for i in range(self.coalgebra.dim))

    @classmethod
    def from_operators(cls, C: Coalgebra, ops: Sequence[Mat], dim: int) -> "LeftComodule":
        rows = []
        for T in ops:
            rows.extend(T.data)
        return cls(C, Mat(C.field, dim * C.dim, dim, rows))

    def with_operators(self, ops: Sequence[Mat], dim: int) -> "LeftComodule":
        return LeftComodule.from_operators(self.coalgebra, ops, dim)


def _first_failure(law: str, lhs: Mat, rhs: Mat) -> list[Violation]:
    return compare_maps(law, lhs, rhs)


def check_coalgebra(C: Coalgebra) -> CheckReport:
    F, d = C.field, C.dim
    I = Mat.identity(F, d)
    D = C.delta
    v = _first_failure("coassociativity", D.kron(I) @ D, I.kron(D) @ D)
    v += _first_failure("left counit", C.eps.kron(I) @ D, I)
    v += _first_failure("right counit", I.kron(C.eps) @ D, I)
    return CheckReport(f"coalgebra {C.name}", tuple(v))


def check_coalgebra_morphism(a: CoalgebraMorphism) -> CheckReport:
    S, T = a.source, a.target
    v = _first_failure("comultiplicativity", a.map.kron(a.map) @ S.delta, T.delta @ a.map)
    v += _first_failure("counit preserved", T.eps @ a.map, S.eps)
    return CheckReport(f"coalgebra morphism {a.name}", tuple(v))


def check_comodule(M: RightComodule | LeftComodule) -> CheckReport:
    C, F = M.coalgebra, M.field
    Ic, Im = Mat.identity(F, C.dim), Mat.identity(F, M.dim)
    r = M.rho
    if isinstance(M, RightComodule):
        v = _first_failure("coassociativity", r.kron(Ic) @ r, Im.kron(C.delta) @ r)
        v += _first_failure("counit", Im.kron(C.eps) @ r, Im)
        return CheckReport("right comodule", tuple(v))
    v = _first_failure("coassociativity", C.delta.kron(Im) @ r, Ic.kron(r) @ r)
    v += _first_failure("counit", C.eps.kron(Im) @ r, Im)
    return CheckReport("left comodule", tuple(v))


def check_comodule_morphism(f: Mat, M: RightComodule, N: RightComodule) -> CheckReport:
    Ic = Mat.identity(f.field, M.coalgebra.dim)
    v = _first_failure("colinearity", N.rho @ f, f.kron(Ic) @ M.rho)
    return CheckReport("comodule morphism", tuple(v))


# dual bridge ---------------------------------------------------------------

def dual_algebra(C: Coalgebra) -> Algebra:
    return Algebra(C.field, C.dim, C.delta.T, C.eps.T, f"{C.name}*" if C.name else "")


def dual_morphism(a: CoalgebraMorphism) -> AlgebraMorphism:
    """``a*: D* -> C*`` for ``a: C -> D``."""
    return AlgebraMorphism(dual_algebra(a.target), dual_algebra(a.source), a.map.T, f"{a.name}*")


def comodule_to_module(M: RightComodule | LeftComodule) -> Module:
    A = dual_algebra(M.coalgebra)
    side = "left" if isinstance(M, RightComodule) else "right"
    return Module(A, M.operators(), side, M.dim)


def module_to_comodule(N: Module, C: Coalgebra | None = None) -> RightComodule | LeftComodule:
    """Inverse of :func:`comodule_to_module`; defined for every finite-dimensional module."""
    if C is None:
        A = N.algebra
        C = Coalgebra(A.field, A.dim, A.mult.T, A.unit.T)
    elif dual_algebra(C) != N.algebra:
        raise MismatchError("module is not over the dual of the given coalgebra")
    if N.side == "left":
        return RightComodule.from_operators(C, N.ops, N.dim)
    return LeftComodule.from_operators(C, N.ops, N.dim)


def regular_right(C: Coalgebra) -> RightComodule:
    return RightComodule(C, C.delta)


def regular_left(C: Coalgebra) -> LeftComodule:
    return LeftComodule(C, C.delta)


def as_left(M: RightComodule) -> LeftComodule:
    """The flipped coaction; a left comodule when ``C`` is cocommutative."""
    if not M.coalgebra.is_cocommutative():
        raise MismatchError("flipping sides needs a cocommutative coalgebra")
    return LeftComodule(M.coalgebra, swap_matrix(M.field, M.dim, M.coalgebra.dim) @ M.rho)


def zero_comodule(C: Coalgebra) -> RightComodule:
    return RightComodule(C, Mat.zeros(C.field, 0, 0))


def direct_sum_comodules(M: RightComodule, N: RightComodule) -> RightComodule:
    if M.coalgebra != N.coalgebra:
        raise MismatchError("direct sum over different coalgebras")
    ops = [Mat.block_diag(M.field, [a, b]) for a, b in zip(M.operators(), N.operators())]
    return RightComodule.from_operators(M.coalgebra, ops, M.dim + N.dim)


# cotensor and the change-of-coalgebra functors --------------------------------

def cotensor(M: RightComodule, N: LeftComodule) -> Subspace:
    """``M box_C N``: equalizer of ``rho (x) id`` and ``id (x) rho`` inside ``M (x) N``."""
    if M.coalgebra != N.coalgebra:
        raise MismatchError("cotensor over different coalgebras")
    F = M.field
    Im, In = Mat.identity(F, M.dim), Mat.identity(F, N.dim)
    return equalizer(M.rho.kron(In), Im.kron(N.rho))


def cotensor_unit_map(M: RightComodule) -> Mat:
    """``rho: M -> M box_C C`` written in the basis of the cotensor subspace."""
    S = cotensor(M, regular_left(M.coalgebra))
    return coordinate_map(S) @ M.rho


def corestrict(a: CoalgebraMorphism, M: RightComodule | LeftComodule) -> RightComodule | LeftComodule:
    if M.coalgebra != a.source:
        raise MismatchError("corestrict: comodule is not over the source coalgebra")
    F = M.field
    Im = Mat.identity(F, M.dim)
    if isinstance(M, RightComodule):
        return RightComodule(a.target, Im.kron(a.map) @ M.rho)
    return LeftComodule(a.target, a.map.kron(Im) @ M.rho)


@dataclass(frozen=True, eq=False)
class Coinduction:
    """``N box_D C`` with its embedding into ``N (x) C``."""

    comodule: RightComodule
    space: Subspace
    source: RightComodule
    morphism: CoalgebraMorphism

    def counit(self) -> Mat:
        """``n (x) c -> n eps(c)``, the counit of corestriction -| coinduction."""
        F = self.source.field
        return Mat.identity(F, self.source.dim).kron(self.morphism.source.eps) @ self.space.basis

    def induced(self, f: Mat, other: "Coinduction") -> Mat:
        C = self.morphism.source
        return coordinate_map(other.space) @ f.kron(Mat.identity(f.field, C.dim)) @ self.space.basis

    def unit_from(self, M: RightComodule) -> Mat:
        """``rho_M: M -> (a* M) box_D C`` when ``self`` is the coinduction of ``a* M``."""
        return coordinate_map(self.space) @ M.rho


def coinduce_data(a: CoalgebraMorphism, N: RightComodule) -> Coinduction:
    if N.coalgebra != a.target:
        raise MismatchError("coinduce: comodule is not over the target coalgebra")
    C = a.source
    F = N.field
    Ic, In = Mat.identity(F, C.dim), Mat.identity(F, N.dim)
    C_left = LeftComodule(a.target, a.map.kron(Ic) @ C.delta)
    S = cotensor(N, C_left)
    P = coordinate_map(S)
    rho = P.kron(Ic) @ In.kron(C.delta) @ S.basis
    return Coinduction(RightComodule(C, rho), S, N, a)


def coinduce(a: CoalgebraMorphism, N: RightComodule) -> RightComodule:
    """Coinduction ``N box_D C`` along ``a: C -> D``."""
    return coinduce_data(a, N).comodule


def coinduce_via_dual(a: CoalgebraMorphism, N: RightComodule) -> tuple[Module, Subspace]:
    """``Hom_{D*}(C*, N)`` as a left ``C*``-module.

    ``C*`` is a left ``D*``-module through ``a*`` (left multiplication) and the
    ``C*``-action is ``(f h)(g) = h(g f)``.  Returns the module and the
    subspace of ``Hom(C*, N) = N (x) C`` it occupies.
    """
    if N.coalgebra != a.target:
        raise MismatchError("coinduce: comodule is not over the target coalgebra")
    F = N.field
    Cs = dual_algebra(a.source)
    astar = dual_morphism(a)
    Nmod = comodule_to_module(N)
    n, c = N.dim, a.source.dim
    In, Ic = Mat.identity(F, n), Mat.identity(F, c)
    blocks = []
    for i in range(a.target.dim):
        L = Cs.left_mul(astar.map.col(i))
        blocks.append(In.kron(L.T) - Nmod.ops[i].kron(Ic))
    from .exactla import stacked_kernel  # local import keeps the public surface small
    H = Subspace.span(F, n * c, stacked_kernel(F, n * c, blocks))
    P = coordinate_map(H)
    ops = tuple(P @ In.kron(Cs.basis_right_mul(i).T) @ H.basis for i in range(c))
    return Module(Cs, ops, "left", H.dim), H


@dataclass(frozen=True, eq=False)
class Cohom:
    """``a^! N = C* (x)_{D*} N`` through the dual bridge, with its presentation."""

    comodule: RightComodule
    change: BaseChange
    source: RightComodule
    morphism: CoalgebraMorphism

    @property
    def quotient(self) -> Quotient:
        return self.change.quotient

    def unit(self) -> Mat:
        """``n -> [1 (x) n]``, the unit of cohom -| corestriction."""
        return self.change.unit()

    def induced(self, f: Mat, other: "Cohom") -> Mat:
        return self.change.induced(f, other.change)

    def counit_into(self, W: RightComodule) -> Mat:
        """``[f (x) w] -> f . w`` when ``self`` is the cohom of ``a* W``."""
        ops = W.operators()
        F = W.field
        c = self.morphism.source.dim
        cols = []
        for j, i in product(range(W.dim), range(c)):
            cols.append(ops[i].column_values(j))
        act = Mat.from_columns(F, cols, W.dim) if cols else Mat.zeros(F, W.dim, 0)
        return act @ self.quotient.section


def cohom_data(a: CoalgebraMorphism, N: RightComodule) -> Cohom:
    if N.coalgebra != a.target:
        raise MismatchError("cohom: comodule is not over the target coalgebra")
    change = extend_data(dual_morphism(a), comodule_to_module(N))
    como = RightComodule.from_operators(a.source, change.module.ops, change.module.dim)
    return Cohom(como, change, N, a)


def cohom(a: CoalgebraMorphism, N: RightComodule) -> RightComodule:
    """Left adjoint of corestriction, ``C* (x)_{D*} N`` read back as a ``C``-comodule."""
    return cohom_data(a, N).comodule


def hom_comodules(M: RightComodule | LeftComodule, N: RightComodule | LeftComodule) -> list[Mat]:
    if M.coalgebra != N.coalgebra:
        raise MismatchError("hom over different coalgebras")
    return intertwiners(M.field, M.operators(), N.operators(), M.dim, N.dim)


def generated_subcomodule(M: RightComodule, vectors: Mat) -> tuple[RightComodule, Subspace]:
    if vectors.rows != M.dim:
        raise DimensionError("vectors outside the comodule")
    V = invariant_closure(M.field, M.dim, M.operators(), vectors)
    return M.submodule(V), V


# predicates ------------------------------------------------------------------

def _as_left_D_comodule(a: CoalgebraMorphism) -> LeftComodule:
    C = a.source
    return LeftComodule(a.target, a.map.kron(Mat.identity(C.field, C.dim)) @ C.delta)


def _as_right_D_comodule(a: CoalgebraMorphism) -> RightComodule:
    C = a.source
    return RightComodule(a.target, Mat.identity(C.field, C.dim).kron(a.map) @ C.delta)


def is_coflat(a: CoalgebraMorphism, side: str = "left") -> bool:
    """Coinduction along ``a`` is exact iff ``C`` is injective as a left ``D``-comodule.

    ``side="right"`` tests ``C`` as a right ``D``-comodule instead (the
    hypothesis under which contraextension is exact).
    """
    if side == "left":
        return is_injective(comodule_to_module(_as_left_D_comodule(a)))
    return is_injective(comodule_to_module(_as_right_D_comodule(a)))


def is_sigma_injective(a: CoalgebraMorphism) -> bool:
    """``C*`` projective as a right ``D*``-module, i.e. ``a^!`` is exact."""
    Cs = dual_algebra(a.source)
    astar = dual_morphism(a)
    ops = tuple(Cs.right_mul(astar.map.col(i)) for i in range(a.target.dim))
    return is_projective(Module(astar.source, ops, "right", Cs.dim))


def is_quasi_finite(a: CoalgebraMorphism) -> bool:
    """Always true: every finite-dimensional ``C`` has finite-dimensional cohoms."""
    return True


QUASI_FINITE_NOTE = "finite-dimensional coalgebras are quasi-finite over any target"


# standard coalgebras -------------------------------------------------------------

def _from_coproduct(F: ExactField, d: int, coprod, eps: Sequence, name: str) -> Coalgebra:
    """``coprod(k)`` yields ``(i, j, coeff)`` triples of ``Delta(c_k)``."""
    cols = []
    for k in range(d):
        v = [0] * (d * d)
        for i, j, c in coprod(k):
            v[i * d + j] += c
        cols.append(v)
    return Coalgebra(F, d, Mat.from_columns(F, cols, d * d), Mat.from_rows(F, [list(eps)]), name)


def grouplike(F: ExactField, n: int) -> Coalgebra:
    """``KG`` on ``n`` grouplike points: ``Delta g = g (x) g``, ``eps g = 1``."""
    return _from_coproduct(F, n, lambda k: [(k, k, 1)], [1] * n, f"KG{n}")


def divided_power(F: ExactField, n: int) -> Coalgebra:
    """``DP(n)``: ``Delta c_k = sum_{i+j=k} c_i (x) c_j``, ``eps c_k = [k = 0]``."""
    return _from_coproduct(F, n, lambda k: [(i, k - i, 1) for i in range(k + 1)],
                           [1] + [0] * (n - 1), f"DP{n}")


def matrix_coalgebra(F: ExactField, n: int) -> Coalgebra:
    """``MC(n)``: ``Delta e_ab = sum_k e_ak (x) e_kb``, ``eps e_ab = [a = b]``."""
    def coprod(idx):
        a, b = divmod(idx, n)
        return [(a * n + k, k * n + b, 1) for k in range(n)]
    return _from_coproduct(F, n * n, coprod, [1 if a == b else 0 for a in range(n) for b in range(n)], f"MC{n}")


def trivial_coalgebra(F: ExactField) -> Coalgebra:
    return _from_coproduct(F, 1, lambda k: [(0, 0, 1)], [1], "K")


def counit_morphism(C: Coalgebra) -> CoalgebraMorphism:
    return CoalgebraMorphism(C, trivial_coalgebra(C.field), C.eps, f"eps_{C.name}")


def inclusion_dp(F: ExactField, m: int, n: int) -> CoalgebraMorphism:
    """``DP(m) -> DP(n)``, ``c_k -> c_k`` for ``m <= n``."""
    if m > n:
        raise ValueError("the inclusion needs m <= n")
    M = Mat.from_columns(F, [[1 if i == k else 0 for i in range(n)] for k in range(m)], n)
    return CoalgebraMorphism(divided_power(F, m), divided_power(F, n), M, f"DP{m}->DP{n}")


def grouplike_map(F: ExactField, f: Sequence[int], n_target: int) -> CoalgebraMorphism:
    """Linearisation of a map of finite sets, ``g -> f(g)``."""
    n = len(f)
    M = Mat.from_columns(F, [[1 if i == f[k] else 0 for i in range(n_target)] for k in range(n)], n_target)
    return CoalgebraMorphism(grouplike(F, n), grouplike(F, n_target), M, f"KG{n}->KG{n_target}")


def point_morphism(C: Coalgebra, g: Sequence) -> CoalgebraMorphism:
    """``K -> C`` sending ``1`` to the grouplike element ``g``."""
    F = C.field
    return CoalgebraMorphism(trivial_coalgebra(F), C, Mat.column(F, list(g)), "point")


# adjunction certificates ------------------------------------------------------

def _ident(M) -> Mat:
    return Mat.identity(M.field, M.dim)


def coinduction_adjunction(a: CoalgebraMorphism):
    """``corestrict -| coinduce`` along ``a: C -> D``."""
    from .adjunction import Adjunction

    return Adjunction(
        name="corestrict -| coinduce",
        left=lambda X: corestrict(a, X),
        right=lambda Y: coinduce(a, Y),
        left_mor=lambda f, X, X2: f,
        right_mor=lambda g, Y, Y2: coinduce_data(a, Y).induced(g, coinduce_data(a, Y2)),
        unit=lambda X: coinduce_data(a, corestrict(a, X)).unit_from(X),
        counit=lambda Y: coinduce_data(a, Y).counit(),
        hom_src=hom_comodules,
        hom_tgt=hom_comodules,
        id_src=_ident,
        id_tgt=_ident,
    )


def cohom_adjunction(a: CoalgebraMorphism):
    """``cohom -| corestrict`` along ``a: C -> D``."""
    from .adjunction import Adjunction

    return Adjunction(
        name="cohom -| corestrict",
        left=lambda X: cohom(a, X),
        right=lambda Y: corestrict(a, Y),
        left_mor=lambda f, X, X2: cohom_data(a, X).induced(f, cohom_data(a, X2)),
        right_mor=lambda g, Y, Y2: g,
        unit=lambda X: cohom_data(a, X).unit(),
        counit=lambda Y: cohom_data(a, corestrict(a, Y)).counit_into(Y),
        hom_src=hom_comodules,
        hom_tgt=hom_comodules,
        id_src=_ident,
        id_tgt=_ident,
    )
