"""Finite-dimensional algebras, their modules, and base change along algebra maps.

An algebra is stored as ``mult: A (x) A -> A`` (a ``d x d^2`` matrix) and
``unit: K -> A``.  A module is stored as the list of operators by which the
basis elements of the algebra act, together with a side:

* right module: ``ops[i] = (m -> m . a_i)``, so ``R(ab) = R(b) R(a)``;
* left module: ``ops[i] = (m -> a_i . m)``, so ``L(ab) = L(a) L(b)``.

A left ``A``-module is literally a right ``A^op``-module with the same
operators, and every construction below is written once for right modules.
For both sides the base-change ambient spaces are ordered ``M (x) B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .exactla import (
    ExactField,
    Mat,
    Quotient,
    Subspace,
    coordinate_map,
    image,
    intertwiners,
    invariant_closure,
    quotient_operators,
    restrict_operators,
    solve,
    stacked_kernel,
    swap_matrix,
)
from .report import CheckReport, DimensionError, MismatchError, Violation, compare_maps

__all__ = [
    "Algebra",
    "AlgebraMorphism",
    "Module",
    "BaseChange",
    "Coextension",
    "FPAlgebraAction",
    "restrict",
    "extend",
    "extend_data",
    "coextend",
    "coextend_data",
    "hom_modules",
    "is_projective",
    "is_injective",
    "projectivity_certificate",
    "regular_module",
    "free_module",
    "dual_module",
    "balanced_tensor",
    "fp_submodule_generated",
    "fp_quotient",
    "check_algebra",
    "check_algebra_morphism",
    "check_module",
    "truncated_polynomial_algebra",
    "product_algebra",
    "matrix_algebra",
    "trivial_algebra",
    "algebra_unit_morphism",
    "polynomial_quotient_morphism",
    "module_from_matrix_of_generator",
    "zero_module",
    "direct_sum_modules",
    "fp_submodule",
    "extension_adjunction",
    "coextension_adjunction",
]


@dataclass(frozen=True, eq=False)
class Algebra:
    field: ExactField
    dim: int
    mult: Mat
    unit: Mat
    name: str = ""

    def __post_init__(self):
        d = self.dim
        if self.mult.shape != (d, d * d) or self.unit.shape != (d, 1):
            raise DimensionError(f"algebra of dim {d} needs mult {d}x{d*d} and unit {d}x1")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Algebra) and self.field == other.field
                and self.mult == other.mult and self.unit == other.unit)

    def __hash__(self) -> int:
        return hash((self.mult, self.unit))

    def __repr__(self) -> str:
        return f"Algebra({self.name or '?'}, dim={self.dim}, {self.field})"

    def times(self, a: Mat, b: Mat) -> Mat:
        return self.mult @ a.kron(b)

    def left_mul(self, a: Mat) -> Mat:
        """Matrix of ``b -> a b``."""
        return self.mult @ a.kron(Mat.identity(self.field, self.dim))

    def right_mul(self, a: Mat) -> Mat:
        """Matrix of ``b -> b a``."""
        return self.mult @ Mat.identity(self.field, self.dim).kron(a)

    def basis_left_mul(self, i: int) -> Mat:
        d = self.dim
        return self.mult.select_cols([i * d + j for j in range(d)])

    def basis_right_mul(self, i: int) -> Mat:
        d = self.dim
        return self.mult.select_cols([j * d + i for j in range(d)])

    def opposite(self) -> "Algebra":
        return Algebra(self.field, self.dim, self.mult @ swap_matrix(self.field, self.dim, self.dim),
                       self.unit, (self.name + "^op") if self.name else "")

    def is_commutative(self) -> bool:
        return self.opposite().mult == self.mult

    def basis_vector(self, i: int) -> Mat:
        return Mat.unit(self.field, self.dim, i)


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: Algebra
    target: Algebra
    map: Mat
    name: str = ""

    def __post_init__(self):
        if self.map.shape != (self.target.dim, self.source.dim):
            raise DimensionError("algebra morphism has the wrong shape")

    @classmethod
    def identity(cls, A: Algebra) -> "AlgebraMorphism":
        return cls(A, A, Mat.identity(A.field, A.dim), "id")

    def compose(self, first: "AlgebraMorphism") -> "AlgebraMorphism":
        """``self`` after ``first``."""
        if first.target != self.source:
            raise MismatchError("algebra morphisms are not composable")
        return AlgebraMorphism(first.source, self.target, self.map @ first.map)

    def opposite(self) -> "AlgebraMorphism":
        return AlgebraMorphism(self.source.opposite(), self.target.opposite(), self.map, self.name)


def check_algebra(A: Algebra) -> CheckReport:
    F, d = A.field, A.dim
    I = Mat.identity(F, d)
    v = compare_maps("associativity", A.mult @ A.mult.kron(I), A.mult @ I.kron(A.mult))
    v += compare_maps("left unit", A.mult @ A.unit.kron(I), I)
    v += compare_maps("right unit", A.mult @ I.kron(A.unit), I)
    return CheckReport(f"algebra {A.name}", tuple(v))


def check_algebra_morphism(f: AlgebraMorphism) -> CheckReport:
    S, T = f.source, f.target
    v = compare_maps("multiplicativity", f.map @ S.mult, T.mult @ f.map.kron(f.map))
    v += compare_maps("unitality", f.map @ S.unit, T.unit)
    return CheckReport(f"algebra morphism {f.name}", tuple(v))


@dataclass(frozen=True, eq=False)
class Module:
    """Finite-dimensional module given by the action operators of the basis of ``algebra``."""

    algebra: Algebra
    ops: tuple[Mat, ...]
    side: str = "right"
    dim_hint: int | None = None

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if len(self.ops) != self.algebra.dim:
            raise DimensionError("one operator per basis element of the algebra is required")
        d = self.dim
        for T in self.ops:
            if T.shape != (d, d):
                raise DimensionError("module operators must be square of the module dimension")

    @property
    def dim(self) -> int:
        if self.ops:
            return self.ops[0].rows
        return self.dim_hint or 0

    @property
    def field(self) -> ExactField:
        return self.algebra.field

    @property
    def base(self) -> Algebra:
        return self.algebra

    def operators(self) -> tuple[Mat, ...]:
        return self.ops

    def with_operators(self, ops: Sequence[Mat], dim: int | None = None) -> "Module":
        return Module(self.algebra, tuple(ops), self.side, dim)

    @property
    def action(self) -> Mat:
        """``M (x) A -> M`` for right modules, ``A (x) M -> M`` for left ones."""
        d, m = self.algebra.dim, self.dim
        F = self.field
        cols = []
        if self.side == "right":
            for j, i in product(range(m), range(d)):
                cols.append(self.ops[i].column_values(j))
        else:
            for i, j in product(range(d), range(m)):
                cols.append(self.ops[i].column_values(j))
        return Mat.from_columns(F, cols, m) if cols else Mat.zeros(F, m, 0)

    @classmethod
    def from_action(cls, algebra: Algebra, action: Mat, side: str = "right") -> "Module":
        d = algebra.dim
        if action.cols % d:
            raise DimensionError("action has the wrong width")
        m = action.cols // d
        if action.rows != m:
            raise DimensionError("action has the wrong height")
        if side == "right":
            ops = [action.select_cols([j * d + i for j in range(m)]) for i in range(d)]
        else:
            ops = [action.select_cols([i * m + j for j in range(m)]) for i in range(d)]
        return cls(algebra, tuple(ops), side, m)

    def as_right(self) -> "Module":
        """The same operators viewed as a right module (over ``A^op`` for left modules)."""
        if self.side == "right":
            return self
        return Module(self.algebra.opposite(), self.ops, "right", self.dim)

    def act(self, a: Mat) -> Mat:
        """Operator of a general algebra element ``a``."""
        F = self.field
        out = Mat.zeros(F, self.dim, self.dim)
        for i, T in enumerate(self.ops):
            if a[i, 0] != 0:
                out = out + T.scale(a[i, 0])
        return out

    def submodule(self, sub: Subspace) -> "Module":
        return self.with_operators(restrict_operators(sub, self.ops), sub.dim)

    def quotient(self, q: Quotient) -> "Module":
        return self.with_operators(quotient_operators(q, self.ops), q.dim)

    def generated(self, vectors: Mat) -> Subspace:
        return invariant_closure(self.field, self.dim, self.ops, vectors)


def check_module(M: Module) -> CheckReport:
    A, F, m = M.algebra, M.field, M.dim
    v: list[Violation] = []
    # unit acts as identity
    v += compare_maps("unit acts trivially", M.act(A.unit), Mat.identity(F, m))
    for i, j in product(range(A.dim), repeat=2):
        prod = A.times(A.basis_vector(i), A.basis_vector(j))
        lhs = M.act(prod)
        rhs = M.ops[j] @ M.ops[i] if M.side == "right" else M.ops[i] @ M.ops[j]
        bad = compare_maps(f"associativity (a{i}, a{j})", lhs, rhs)
        if bad:
            v += bad
    return CheckReport(f"{M.side} module", tuple(v))


def _require_same(a: Algebra, b: Algebra, what: str) -> None:
    if a != b:
        raise MismatchError(f"{what}: algebra mismatch")


def regular_module(A: Algebra, side: str = "right") -> Module:
    if side == "right":
        ops = tuple(A.basis_right_mul(i) for i in range(A.dim))
    else:
        ops = tuple(A.basis_left_mul(i) for i in range(A.dim))
    return Module(A, ops, side, A.dim)


def free_module(A: Algebra, rank: int, side: str = "right") -> Module:
    reg = regular_module(A, side)
    return reg.with_operators([Mat.block_diag(A.field, [T] * rank) for T in reg.ops], A.dim * rank)


def zero_module(A: Algebra, side: str = "right") -> Module:
    z = Mat.zeros(A.field, 0, 0)
    return Module(A, tuple(z for _ in range(A.dim)), side, 0)


def dual_module(M: Module) -> Module:
    """``M*`` with ``(a f)(m) = f(m a)``; sides swap."""
    return Module(M.algebra, tuple(T.T for T in M.ops), "left" if M.side == "right" else "right", M.dim)


def direct_sum_modules(M: Module, N: Module) -> Module:
    _require_same(M.algebra, N.algebra, "direct sum")
    if M.side != N.side:
        raise MismatchError("direct sum of modules on different sides")
    F = M.field
    return M.with_operators([Mat.block_diag(F, [a, b]) for a, b in zip(M.ops, N.ops)], M.dim + N.dim)


# functors ------------------------------------------------------------------

def restrict(alpha: AlgebraMorphism, M: Module) -> Module:
    """Restriction of scalars along ``alpha: A -> B`` of a ``B``-module."""
    if M.algebra != alpha.target:
        raise MismatchError("restrict: module is not over the target algebra")
    F = M.field
    ops = []
    for i in range(alpha.source.dim):
        T = Mat.zeros(F, M.dim, M.dim)
        for k in range(alpha.target.dim):
            c = alpha.map[k, i]
            if c != 0:
                T = T + M.ops[k].scale(c)
        ops.append(T)
    return Module(alpha.source, tuple(ops), M.side, M.dim)


@dataclass(frozen=True, eq=False)
class BaseChange:
    """``M (x)_A B`` as a quotient of ``M (x) B`` together with the resulting module."""

    module: Module
    quotient: Quotient
    source: Module
    morphism: AlgebraMorphism

    def unit(self) -> Mat:
        """``m -> [m (x) 1]``, the unit of extension -| restriction."""
        F = self.source.field
        return self.quotient.proj @ Mat.identity(F, self.source.dim).kron(self.morphism.target.unit)

    def induced(self, f: Mat, other: "BaseChange") -> Mat:
        """Extension of a module map ``f: self.source -> other.source``."""
        B = self.morphism.target
        return other.quotient.proj @ f.kron(Mat.identity(f.field, B.dim)) @ self.quotient.section


def extend_data(alpha: AlgebraMorphism, M: Module) -> BaseChange:
    if M.algebra != alpha.source:
        raise MismatchError("extend: module is not over the source algebra")
    side = M.side
    a = alpha if side == "right" else alpha.opposite()
    R = M.as_right()
    A, B = a.source, a.target
    F = M.field
    m = R.dim
    IB, Im = Mat.identity(F, B.dim), Mat.identity(F, m)
    # M (x) A (x) B -> M (x) B: act then tensor, versus map then multiply
    f = R.action.kron(IB)
    g = Im.kron(B.mult @ a.map.kron(IB))
    q = Quotient.of(image(f - g))
    ops = tuple(q.proj @ Im.kron(B.basis_right_mul(i)) @ q.section for i in range(B.dim))
    right = Module(B, ops, "right", q.dim)
    module = right if side == "right" else Module(alpha.target, ops, "left", q.dim)
    return BaseChange(module, q, M, alpha)


def extend(alpha: AlgebraMorphism, M: Module) -> Module:
    """Extension of scalars ``M (x)_A B`` (``B (x)_A M`` for left modules)."""
    return extend_data(alpha, M).module


@dataclass(frozen=True, eq=False)
class Coextension:
    """``Hom_A(B, N)`` as a subspace of ``Hom(B, N) = N (x) B*`` (row-major vec)."""

    module: Module
    space: Subspace
    source: Module
    morphism: AlgebraMorphism

    def counit(self) -> Mat:
        """``f -> f(1)``, the counit of restriction -| coextension."""
        B = self.morphism.target
        F = self.source.field
        ev = Mat.identity(F, self.source.dim).kron(B.unit.T)
        return ev @ self.space.basis

    def induced(self, f: Mat, other: "Coextension") -> Mat:
        """``h -> f o h`` for a module map ``f: self.source -> other.source``."""
        B = self.morphism.target
        return coordinate_map(other.space) @ f.kron(Mat.identity(f.field, B.dim)) @ self.space.basis


def coextend_data(alpha: AlgebraMorphism, N: Module) -> Coextension:
    if N.algebra != alpha.source:
        raise MismatchError("coextend: module is not over the source algebra")
    side = N.side
    a = alpha if side == "right" else alpha.opposite()
    R = N.as_right()
    A, B = a.source, a.target
    F = N.field
    n, dB = R.dim, B.dim
    In, IB = Mat.identity(F, n), Mat.identity(F, dB)
    blocks = []
    for i in range(A.dim):
        r = B.right_mul(a.map.col(i))
        blocks.append(In.kron(r.T) - R.ops[i].kron(IB))
    H = stacked_kernel(F, n * dB, blocks)
    space = Subspace.span(F, n * dB, H)
    P = coordinate_map(space)
    ops = tuple(P @ In.kron(B.basis_left_mul(l).T) @ space.basis for l in range(dB))
    module = Module(alpha.target, ops, side, space.dim)
    return Coextension(module, space, N, alpha)


def coextend(alpha: AlgebraMorphism, N: Module) -> Module:
    """Coextension ``Hom_A(B, N)`` with ``(f b)(b') = f(b b')``."""
    return coextend_data(alpha, N).module


def hom_modules(M: Module, N: Module) -> list[Mat]:
    _require_same(M.algebra, N.algebra, "hom")
    if M.side != N.side:
        raise MismatchError("hom between modules on different sides")
    return intertwiners(M.field, M.ops, N.ops, M.dim, N.dim)


def _generators(M: Module) -> list[Mat]:
    """Greedy small generating set: basis vectors not yet in the generated submodule."""
    F = M.field
    gens: list[Mat] = []
    V = Subspace.zero(F, M.dim)
    for j in range(M.dim):
        e = Mat.unit(F, M.dim, j)
        if not V.contains(e):
            gens.append(e)
            V = invariant_closure(F, M.dim, M.ops, Subspace.span(F, M.dim, [V.basis, e]))
        if V.dim == M.dim:
            break
    return gens


def projectivity_certificate(M: Module) -> Mat | None:
    """A section ``s: M -> A^k`` of the free cover, or None when there is none."""
    R = M.as_right()
    A, F = R.algebra, R.field
    if R.dim == 0:
        return Mat.zeros(F, 0, 0)
    gens = _generators(R)
    k = len(gens)
    cover = free_module(A, k, "right")
    # p: A^k -> M, (a_1..a_k) -> sum g_j a_j
    cols = []
    for j in range(k):
        for i in range(A.dim):
            cols.append((R.ops[i] @ gens[j]).flat())
    p = Mat.from_columns(F, cols, R.dim)
    homs = hom_modules(R, cover)
    if not homs:
        return None
    system = Mat.hstack(F, R.dim * R.dim, [_vec(p @ h) for h in homs])
    target = _vec(Mat.identity(F, R.dim))
    t = solve(system, target)
    if t is None:
        return None
    s = Mat.zeros(F, cover.dim, R.dim)
    for c, h in zip(t.flat(), homs):
        if c != 0:
            s = s + h.scale(c)
    return s


def _vec(F: Mat) -> Mat:
    return Mat(F.field, F.rows * F.cols, 1, [[x] for r in F.data for x in r])


def is_projective(M: Module) -> bool:
    """Projective iff the free cover splits (found by a linear solve)."""
    return projectivity_certificate(M) is not None


def is_injective(M: Module) -> bool:
    """Injective iff the dual module is projective (over the opposite algebra)."""
    return is_projective(dual_module(M))


def balanced_tensor(M: Module, N: Module) -> Quotient:
    """``M (x)_A N`` for a right module ``M`` and a left module ``N``, as a quotient of ``M (x) N``."""
    _require_same(M.algebra, N.algebra, "balanced tensor")
    if M.side != "right" or N.side != "left":
        raise MismatchError("balanced tensor needs a right and a left module")
    F = M.field
    Im, In = Mat.identity(F, M.dim), Mat.identity(F, N.dim)
    rels = [T.kron(In) - Im.kron(S) for T, S in zip(M.ops, N.ops)]
    if not rels:
        return Quotient.of(Subspace.zero(F, M.dim * N.dim))
    return Quotient.of(image(Mat.hstack(F, M.dim * N.dim, rels)))


# presented algebras acting on finite-dimensional spaces ----------------------

Word = tuple[int, ...]
Relation = tuple[tuple[object, Word], ...]


@dataclass(frozen=True, eq=False)
class FPAlgebraAction:
    """Action of ``K<x_1..x_g>/(relations)`` on ``K^dim`` by generator matrices.

    A word ``(i1, ..., ik)`` stands for ``x_i1 x_i2 ... x_ik`` and acts by the
    matrix product ``G[i1] @ ... @ G[ik]``.
    """

    field: ExactField
    generator_count: int
    generators: tuple[Mat, ...]
    relations: tuple[Relation, ...] = ()
    dim_hint: int | None = None

    def __post_init__(self):
        if len(self.generators) != self.generator_count:
            raise DimensionError("one matrix per generator is required")
        for G in self.generators:
            if G.shape != (self.dim, self.dim):
                raise DimensionError("generator matrices must be square")

    @property
    def dim(self) -> int:
        return self.generators[0].rows if self.generators else (self.dim_hint or 0)

    def word(self, w: Word) -> Mat:
        out = Mat.identity(self.field, self.dim)
        for i in w:
            out = out @ self.generators[i]
        return out

    def evaluate(self, rel: Relation) -> Mat:
        F = self.field
        out = Mat.zeros(F, self.dim, self.dim)
        for coeff, w in rel:
            out = out + self.word(w).scale(coeff)
        return out

    def check(self) -> CheckReport:
        vs: list[Violation] = []
        for k, rel in enumerate(self.relations):
            vs += compare_maps(f"relation {k}", self.evaluate(rel), Mat.zeros(self.field, self.dim, self.dim))
        return CheckReport("presented action", tuple(vs))

    def operators(self) -> tuple[Mat, ...]:
        return self.generators

    def with_generators(self, gens: Sequence[Mat], dim: int) -> "FPAlgebraAction":
        return FPAlgebraAction(self.field, self.generator_count, tuple(gens), self.relations, dim)


def fp_submodule_generated(data: FPAlgebraAction, vectors: Mat) -> Subspace:
    if vectors.rows != data.dim:
        raise DimensionError("vectors outside the module")
    return invariant_closure(data.field, data.dim, data.generators, vectors)


def fp_quotient(data: FPAlgebraAction, sub: Subspace) -> FPAlgebraAction:
    q = Quotient.of(sub)
    return data.with_generators(quotient_operators(q, data.generators), q.dim)


def fp_submodule(data: FPAlgebraAction, sub: Subspace) -> FPAlgebraAction:
    return data.with_generators(restrict_operators(sub, data.generators), sub.dim)


# standard algebras -----------------------------------------------------------

def _algebra_from_table(F: ExactField, d: int, table, unit: Sequence, name: str) -> Algebra:
    """``table(i, j)`` returns the coordinate list of ``e_i e_j``."""
    cols = [table(i, j) for i, j in product(range(d), repeat=2)]
    mult = Mat.from_columns(F, cols, d)
    return Algebra(F, d, mult, Mat.column(F, unit), name)


def truncated_polynomial_algebra(F: ExactField, n: int) -> Algebra:
    """``K[x]/(x^n)`` in the basis ``1, x, ..., x^(n-1)``."""
    def table(i, j):
        v = [0] * n
        if i + j < n:
            v[i + j] = 1
        return v
    return _algebra_from_table(F, n, table, [1] + [0] * (n - 1), f"K[x]/(x^{n})")


def product_algebra(F: ExactField, n: int) -> Algebra:
    """``K^n`` with componentwise multiplication."""
    def table(i, j):
        v = [0] * n
        if i == j:
            v[i] = 1
        return v
    return _algebra_from_table(F, n, table, [1] * n, f"K^{n}")


def matrix_algebra(F: ExactField, n: int) -> Algebra:
    """``M_n(K)`` with basis ``E_ab`` at index ``a n + b``."""
    d = n * n

    def table(i, j):
        a, b = divmod(i, n)
        c, e = divmod(j, n)
        v = [0] * d
        if b == c:
            v[a * n + e] = 1
        return v
    return _algebra_from_table(F, d, table, [1 if a == b else 0 for a in range(n) for b in range(n)], f"M_{n}")


def trivial_algebra(F: ExactField) -> Algebra:
    return _algebra_from_table(F, 1, lambda i, j: [1], [1], "K")


def algebra_unit_morphism(A: Algebra) -> AlgebraMorphism:
    return AlgebraMorphism(trivial_algebra(A.field), A, A.unit, "unit")


def polynomial_quotient_morphism(F: ExactField, n: int, m: int) -> AlgebraMorphism:
    """``K[x]/(x^n) -> K[x]/(x^m)`` for ``m <= n``, ``x -> x``."""
    if m > n:
        raise ValueError("the quotient map needs m <= n")
    src, tgt = truncated_polynomial_algebra(F, n), truncated_polynomial_algebra(F, m)
    M = Mat.from_columns(F, [[1 if (i == j and j < m) else 0 for i in range(m)] for j in range(n)], m)
    return AlgebraMorphism(src, tgt, M, f"K[x]/x^{n}->K[x]/x^{m}")


def module_from_matrix_of_generator(A: Algebra, X: Mat, side: str = "left") -> Module:
    """Module over ``K[x]/(x^n)`` in which ``x`` acts by ``X`` (``x^k`` by ``X^k``)."""
    F = A.field
    ops = []
    P = Mat.identity(F, X.rows)
    for _ in range(A.dim):
        ops.append(P)
        P = P @ X
    return Module(A, tuple(ops), side, X.rows)


# adjunction certificates ------------------------------------------------------

def _action_columns(M: Module, n_alg: int) -> Mat:
    """``m (x) a -> m . a`` on the ambient ``M (x) A`` (works for either side)."""
    F = M.field
    cols = [M.ops[l].column_values(j) for j in range(M.dim) for l in range(n_alg)]
    return Mat.from_columns(F, cols, M.dim) if cols else Mat.zeros(F, M.dim, 0)


def extension_adjunction(alpha: AlgebraMorphism):
    """``extend -| restrict`` along ``alpha``."""
    from .adjunction import Adjunction

    B = alpha.target

    def counit(Y: Module) -> Mat:
        bc = extend_data(alpha, restrict(alpha, Y))
        return _action_columns(Y, B.dim) @ bc.quotient.section

    return Adjunction(
        name="extend -| restrict",
        left=lambda X: extend(alpha, X),
        right=lambda Y: restrict(alpha, Y),
        left_mor=lambda f, X, X2: extend_data(alpha, X).induced(f, extend_data(alpha, X2)),
        right_mor=lambda g, Y, Y2: g,
        unit=lambda X: extend_data(alpha, X).unit(),
        counit=counit,
        hom_src=hom_modules,
        hom_tgt=hom_modules,
        id_src=lambda X: Mat.identity(X.field, X.dim),
        id_tgt=lambda Y: Mat.identity(Y.field, Y.dim),
    )


def coextension_adjunction(alpha: AlgebraMorphism):
    """``restrict -| coextend`` along ``alpha``."""
    from .adjunction import Adjunction

    B = alpha.target

    def unit(X: Module) -> Mat:
        co = coextend_data(alpha, restrict(alpha, X))
        # x -> (b -> x . b), written in Hom(B, X) = X (x) B*
        raw = Mat(X.field, X.dim * B.dim, X.dim,
                  [[X.ops[l][k, j] for j in range(X.dim)] for k in range(X.dim) for l in range(B.dim)])
        return coordinate_map(co.space) @ raw

    return Adjunction(
        name="restrict -| coextend",
        left=lambda X: restrict(alpha, X),
        right=lambda Y: coextend(alpha, Y),
        left_mor=lambda f, X, X2: f,
        right_mor=lambda g, Y, Y2: coextend_data(alpha, Y).induced(g, coextend_data(alpha, Y2)),
        unit=unit,
        counit=lambda Y: coextend_data(alpha, Y).counit(),
        hom_src=hom_modules,
        hom_tgt=hom_modules,
        id_src=lambda X: Mat.identity(X.field, X.dim),
        id_tgt=lambda Y: Mat.identity(Y.field, Y.dim),
    )
