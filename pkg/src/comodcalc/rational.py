"""Rational pairings, rationalization and the comodule/module bridges.

A pairing ``phi: C (x) A -> K`` is stored as ``theta: A -> C*`` with
``theta[i, j] = phi(c_i (x) a_j)``.  For an algebra given by generators and
relations only the images of the generators are stored; the value on a word
is the convolution product of the letters.

The rational part of an ``A``-module ``N`` is computed as the greatest fixed
point of ``V -> {v in V : I v = 0 and a v in V}`` with ``I`` the image of
``ker theta`` in ``End(N)``.  For presented algebras the image of ``A`` in
``End(N) x C*`` is finite dimensional and found by closing ``(1, eps)`` under
the generator pairs, which yields ``I`` without ever touching ``ker theta``
itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .algmod import (
    Algebra,
    AlgebraMorphism,
    FPAlgebraAction,
    Module,
    Relation,
    Word,
    check_algebra_morphism,
)
from .coalg import (
    Coalgebra,
    CoalgebraMorphism,
    RightComodule,
    check_comodule,
    cohom_data,
    comodule_to_module,
    corestrict,
    dual_algebra,
    module_to_comodule,
)
from .contra import (
    Contramodule,
    contraextend_data,
    contramodule_to_module,
    contrarestrict,
    contratensor_data,
    hom_comodule_contra_data,
    check_contra_morphism,
)
from .exactla import (
    Mat,
    Quotient,
    Subspace,
    coordinate_map,
    image,
    invariant_closure,
    kernel,
    restrict_operators,
    quotient_operators,
    solve,
    stacked_kernel,
)
from .report import CheckReport, DimensionError, MismatchError, PreconditionError, UnsupportedInputError, Violation
from .repcat.objects import RepObject, RepMorphism, check_object, subobject
from .repcat.reps import AlgebraRep, CoalgebraRep, dual_rep

__all__ = [
    "PresentedAlgebra",
    "RationalPairing",
    "RepPairing",
    "Rationalization",
    "check_pairing",
    "check_rep_pairing",
    "evaluation_pairing",
    "rationalize",
    "is_rational",
    "torsion_witness",
    "rationalize_rep",
    "factors_through",
    "comodule_module_bridge",
    "module_comodule_bridge",
    "contra_to_cis_module",
    "finite_dual",
    "comparison_certificates",
]


@dataclass(frozen=True)
class PresentedAlgebra:
    """``K<x_0..x_{g-1}> / (relations)``; possibly infinite dimensional."""

    field: Any
    generator_count: int
    relations: tuple = ()
    name: str = ""

    def action(self, generators: Sequence[Mat]) -> FPAlgebraAction:
        return FPAlgebraAction(self.field, self.generator_count, tuple(generators), tuple(self.relations))


@dataclass(frozen=True, eq=False)
class RationalPairing:
    coalgebra: Coalgebra
    algebra: Algebra | PresentedAlgebra
    theta: Mat
    words: Mapping[Word, Mat] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        C, A = self.coalgebra, self.algebra
        cols = A.dim if isinstance(A, Algebra) else A.generator_count
        if self.theta.shape != (C.dim, cols):
            raise DimensionError(f"theta must be {C.dim}x{cols}, got {self.theta.shape}")
        if A.field != C.field:
            raise MismatchError("coalgebra and algebra over different fields")

    @classmethod
    def from_phi(cls, C: Coalgebra, A: Algebra, phi: Mat, name: str = "") -> "RationalPairing":
        """From the row ``phi(c_i (x) a_j)`` at index ``i * dim A + j``."""
        if phi.shape != (1, C.dim * A.dim):
            raise DimensionError("phi must be a 1 x (dim C * dim A) row")
        theta = Mat(C.field, C.dim, A.dim, [[phi[0, i * A.dim + j] for j in range(A.dim)] for i in range(C.dim)])
        return cls(C, A, theta, {}, name)

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def presented(self) -> bool:
        return isinstance(self.algebra, PresentedAlgebra)

    @property
    def dual(self) -> Algebra:
        return dual_algebra(self.coalgebra)

    def phi(self) -> Mat:
        C = self.coalgebra
        t = self.theta
        return Mat(self.field, 1, C.dim * t.cols, [[t[i, j] for i in range(C.dim) for j in range(t.cols)]])

    def word_value(self, w: Word) -> Mat:
        """``theta`` of a word in the generators, as a convolution product."""
        Cs = self.dual
        out = self.coalgebra.eps.T
        for i in w:
            out = Cs.times(out, self.theta.col(i))
        return out

    def algebra_images(self) -> Subspace:
        """``theta(A)`` inside ``C*``."""
        F, d = self.field, self.coalgebra.dim
        if not self.presented:
            return image(self.theta)
        Cs = self.dual
        ops = [Cs.right_mul(self.theta.col(k)) for k in range(self.theta.cols)]
        return invariant_closure(F, d, ops, self.coalgebra.eps.T)


def evaluation_pairing(C: Coalgebra) -> RationalPairing:
    """``(C, C*, evaluation)``."""
    return RationalPairing(C, dual_algebra(C), Mat.identity(C.field, C.dim), {}, f"ev_{C.name}")


def check_pairing(p: RationalPairing) -> CheckReport:
    v: list[Violation] = []
    C = p.coalgebra
    # (i) C -> A* injective, i.e. theta(A) is all of C*
    S = p.algebra_images()
    if S.dim < C.dim:
        c = kernel(S.basis.T).basis.col(0)
        v.append(Violation("injectivity", c.column_values(0)))
    # (ii) theta an algebra morphism
    if not p.presented:
        r = check_algebra_morphism(AlgebraMorphism(p.algebra, p.dual, p.theta))
        v.extend(Violation(f"algebra morphism: {w.law}", w.witness, w.defect) for w in r.violations)
    else:
        for k, rel in enumerate(p.algebra.relations):
            val = Mat.zeros(p.field, C.dim, 1)
            for coeff, w in rel:
                val = val + p.word_value(w).scale(p.field(coeff))
            if not val.is_zero():
                v.append(Violation(f"relation {k}", val.column_values(0)))
        for w, val in sorted(p.words.items()):
            if val != p.word_value(w):
                v.append(Violation(f"word {list(w)}", tuple(w), (val - p.word_value(w)).column_values(0)))
    return CheckReport(f"pairing {p.name}".strip(), tuple(v))


# rationalization -----------------------------------------------------------------

def _module_data(p: RationalPairing, N) -> tuple[int, list[Mat], list[tuple[Mat, Mat]]]:
    """(dim, generator operators, spanning pairs (End-part, C*-part) of the image of A)."""
    F = p.field
    if p.presented:
        if not isinstance(N, FPAlgebraAction):
            raise MismatchError("a presented pairing needs presented module data")
        if N.generator_count != p.algebra.generator_count:
            raise MismatchError("module and algebra have different generator counts")
        rep = N.check()
        if not rep.ok:
            raise MismatchError("action data inconsistent with relations: " + rep.violations[0].law)
        n, d = N.dim, p.coalgebra.dim
        gens = list(N.generators)
        Cs = p.dual
        ops = []
        for k, G in enumerate(gens):
            left = Mat.identity(F, n).kron(G.T)  # vec X -> vec (X G)
            ops.append(Mat.block_diag(F, [left, Cs.right_mul(p.theta.col(k))]))
        start = Mat.vstack(F, 1, [_vec(Mat.identity(F, n)),
                                   p.coalgebra.eps.T])
        W = invariant_closure(F, n * n + d, ops, start)
        pairs = []
        for j in range(W.dim):
            col = W.basis.column_values(j)
            X = Mat(F, n, n, [[col[r * n + c] for c in range(n)] for r in range(n)])
            pairs.append((X, Mat.column(F, col[n * n:])))
        return n, gens, pairs
    if not isinstance(N, Module):
        raise MismatchError("a finite-dimensional pairing needs a module")
    if N.algebra != p.algebra:
        raise MismatchError("module is not over the pairing's algebra")
    if N.side != "left" and not p.algebra.is_commutative():
        raise MismatchError("rationalization needs a left module")
    ops = list(N.ops)
    return N.dim, ops, [(ops[j], p.theta.col(j)) for j in range(p.algebra.dim)]


def _vec(X: Mat) -> Mat:
    return Mat(X.field, X.rows * X.cols, 1, [[v] for v in X.flat()])


def _annihilator_ops(p: RationalPairing, pairs: list[tuple[Mat, Mat]], n: int) -> list[Mat]:
    """End-parts of the combinations whose C*-part vanishes."""
    F = p.field
    if not pairs:
        return []
    T = Mat.hstack(F, p.coalgebra.dim, [f for _, f in pairs])
    K = kernel(T).basis
    out = []
    for j in range(K.cols):
        X = Mat.zeros(F, n, n)
        for i, (E, _) in enumerate(pairs):
            c = K[i, j]
            if c != 0:
                X = X + E.scale(c)
        if not X.is_zero():
            out.append(X)
    return out


@dataclass(frozen=True, eq=False)
class Rationalization:
    subspace: Subspace
    comodule: RightComodule
    iterations: int

    @property
    def dim(self) -> int:
        return self.subspace.dim


def rationalize(p: RationalPairing, N) -> Rationalization:
    """The largest rational submodule of ``N`` and its coaction."""
    if not check_pairing(p).ok:
        raise PreconditionError("not a rational pairing")
    F = p.field
    n, gens, pairs = _module_data(p, N)
    ann = _annihilator_ops(p, pairs, n)
    V = Subspace.whole(F, n)
    steps = 0
    while True:
        steps += 1
        blocks = list(ann) + [Quotient.of(V).proj @ G for G in gens]
        W = Subspace.span(F, n, V.basis @ stacked_kernel(F, V.dim, [B @ V.basis for B in blocks])) \
            if V.dim else V
        if W == V:
            break
        V = W
    # coaction: the dual basis element e_i of C* acts through any a with theta(a) = e_i
    d = p.coalgebra.dim
    T = Mat.hstack(F, d, [f for _, f in pairs]) if pairs else Mat.zeros(F, d, 0)
    ops = []
    for i in range(d):
        coeffs = solve(T, Mat.unit(F, d, i))
        X = Mat.zeros(F, n, n)
        for k, (E, _) in enumerate(pairs):
            c = coeffs[k, 0]
            if c != 0:
                X = X + E.scale(c)
        ops.append(X)
    rops = restrict_operators(V, ops)
    como = RightComodule.from_operators(p.coalgebra, rops, V.dim)
    return Rationalization(V, como, steps)


def is_rational(p: RationalPairing, N) -> bool:
    n = N.dim
    return rationalize(p, N).dim == n


def _quotient_data(N, q: Quotient):
    if isinstance(N, FPAlgebraAction):
        return N.with_generators(quotient_operators(q, N.generators), q.dim)
    return N.quotient(q)


def _sub_data(N, S: Subspace):
    if isinstance(N, FPAlgebraAction):
        return N.with_generators(restrict_operators(S, N.generators), S.dim)
    return N.submodule(S)


def torsion_witness(p: RationalPairing, N) -> dict:
    """``R(N)``, ``N / R(N)`` and ``R(N / R(N))`` with the vanishing verdict."""
    R = rationalize(p, N)
    q = Quotient.of(R.subspace)
    Q = _quotient_data(N, q)
    RQ = rationalize(p, Q)
    return {
        "dim_N": N.dim,
        "dim_R": R.dim,
        "dim_quotient": q.dim,
        "dim_R_quotient": RQ.dim,
        "quotient_rational_part_vanishes": RQ.dim == 0,
        "rational": R,
        "quotient": Q,
        "quotient_rational": RQ,
    }


# pairings over representations -----------------------------------------------

@dataclass(frozen=True, eq=False)
class RepPairing:
    """Pairings ``phi_x`` between ``C_x`` and ``A_x`` with ``A`` a rep of the opposite poset."""

    crep: CoalgebraRep
    arep: AlgebraRep
    pairings: Mapping[Any, RationalPairing]

    def __post_init__(self):
        if self.arep.poset != self.crep.poset.opposite():
            raise MismatchError("the algebra representation must live on the opposite poset")
        for x in self.crep.poset.elements:
            p = self.pairings[x]
            if p.coalgebra != self.crep.fibers[x] or p.algebra != self.arep.fibers[x]:
                raise MismatchError(f"pairing at {x!r} does not match the fibers")


def check_rep_pairing(P: RepPairing) -> CheckReport:
    parts = []
    for x in P.crep.poset.elements:
        r = check_pairing(P.pairings[x])
        parts.append(CheckReport("pairing", tuple(Violation(f"fiber {x}: {w.law}", w.witness, w.defect)
                                                  for w in r.violations)))
    v = []
    for x, y in P.crep.poset.covers:
        ca = P.crep.morphism(x, y).map  # C_x -> C_y
        aa = P.arep.morphism(y, x).map  # A_y -> A_x
        lhs = P.pairings[x].theta @ aa
        rhs = ca.T @ P.pairings[y].theta
        if lhs != rhs:
            diff = lhs - rhs
            j = next(j for j in range(diff.cols) if any(t != 0 for t in diff.column_values(j)))
            v.append(Violation(f"compatibility {x}->{y}", (j,), diff.column_values(j)))
    parts.append(CheckReport("compatibility", tuple(v)))
    return parts[0].merged(*parts[1:], subject="rep pairing")


def rationalize_rep(P: RepPairing, N: RepObject) -> tuple[RepObject, RepMorphism, dict]:
    """``R_y = {n in N_y : every structure map out of y lands in the rational part}``."""
    if N.flavor != "trans-module" or N.rep.poset != P.arep.poset:
        raise MismatchError("rationalize_rep takes a trans-module over the algebra representation")
    poset = N.poset
    rats = {x: rationalize(P.pairings[x], N.fibers[x]).subspace for x in poset.elements}
    subs = {}
    for y in poset.elements:
        S = Subspace.whole(N.field, N.dim(y))
        for x in poset.down_set(y):
            S = S & rats[x].preimage(N.plain(x, y))
        subs[y] = S
    sub, inc = subobject(N, subs)
    return sub, inc, subs


def factors_through(f: RepMorphism, subs: Mapping[Any, Subspace]) -> bool:
    return all(image(f[x]) <= subs[x] for x in f.source.poset.elements)


# bridges ------------------------------------------------------------------------

def _flip_maps(obj: RepObject) -> dict:
    return {(y, x): m for (x, y), m in obj.maps.items()}


def comodule_module_bridge(obj: RepObject, arep: AlgebraRep | None = None) -> RepObject:
    """cis-comodules to trans-modules over ``C*`` and trans-comodules to cis-modules."""
    target = {"cis-comodule": "trans-module", "trans-comodule": "cis-module"}
    if obj.flavor not in target:
        raise MismatchError("the bridge takes a cis- or trans-comodule")
    arep = arep or dual_rep(obj.rep)
    fibers = {x: comodule_to_module(obj.fibers[x]) for x in obj.poset.elements}
    return RepObject(target[obj.flavor], arep, fibers, _flip_maps(obj))


def module_comodule_bridge(obj: RepObject, crep: CoalgebraRep) -> RepObject:
    """Inverse of :func:`comodule_module_bridge` (every module over a finite ``C*`` is rational)."""
    target = {"trans-module": "cis-comodule", "cis-module": "trans-comodule"}
    if obj.flavor not in target:
        raise MismatchError("the bridge takes a trans- or cis-module")
    fibers = {}
    for x in obj.poset.elements:
        M = obj.fibers[x]
        if M.side != "left":
            raise MismatchError("rational modules are left modules")
        fibers[x] = module_to_comodule(M, crep.fibers[x])
    return RepObject(target[obj.flavor], crep, fibers, _flip_maps(obj))


def contra_to_cis_module(M: RepObject, arep: AlgebraRep | None = None) -> RepObject:
    """Trans-contramodules to cis-modules over ``C*`` through the fiberwise contraction action."""
    if M.flavor != "trans-contramodule":
        raise MismatchError("contra_to_cis_module takes a trans-contramodule")
    arep = arep or dual_rep(M.rep)
    fibers = {x: contramodule_to_module(M.fibers[x]) for x in M.poset.elements}
    return RepObject("cis-module", arep, fibers, _flip_maps(M))


def finite_dual(A) -> Coalgebra:
    """``A*`` with comultiplication and counit dual to multiplication and unit."""
    if isinstance(A, PresentedAlgebra):
        raise UnsupportedInputError("finite dual of a presented (possibly infinite-dimensional) algebra")
    return Coalgebra(A.field, A.dim, A.mult.T, A.unit.T, f"{A.name}o" if A.name else "")


# comparison isomorphisms -----------------------------------------------------

def _act_columns(ops: Sequence[Mat], p: Mat, n_base: int, rows: int) -> Mat:
    F = p.field
    cols = [(ops[l] @ p).column_values(j) for j in range(p.cols) for l in range(n_base)]
    return Mat.from_columns(F, cols, rows) if cols else Mat.zeros(F, rows, 0)


def comparison_certificates(a: CoalgebraMorphism, M: Contramodule, N: RightComodule, P: RightComodule) -> dict:
    """Both comparison maps for ``a: C -> D`` with ``C``, ``D`` cocommutative.

    (a) ``a^!(M boxtimes_D N) -> (a^. M) boxtimes_C (a^! N)``, the mate of
        ``[m (x) n] -> [u(m) (x) v(n)]`` with ``u``, ``v`` the units;
    (b) ``Hom_D(N, a* P) -> a_. Hom_C(a^! N, P)``, ``g -> ([f (x) n] -> f . g(n))``.
    """
    C, D = a.source, a.target
    if not (C.is_cocommutative() and D.is_cocommutative()):
        raise PreconditionError("both coalgebras must be cocommutative")
    if M.coalgebra != D or N.coalgebra != D or P.coalgebra != C:
        raise MismatchError("M, N must be over the target and P over the source")
    F = C.field
    # (a)
    inner = contratensor_data(M, N)
    lhs = cohom_data(a, inner.comodule)
    ceM = contraextend_data(a, M)
    chN = cohom_data(a, N)
    rhs = contratensor_data(ceM.contramodule, chN.comodule)
    phi_amb = rhs.quotient.proj @ ceM.unit().kron(chN.unit())
    well_defined = (phi_amb @ inner.quotient.sub.basis).is_zero() if inner.quotient.sub.dim else True
    phi = phi_amb @ inner.quotient.section
    cmp_a = _act_columns(rhs.comodule.operators(), phi, C.dim, rhs.comodule.dim) @ lhs.quotient.section
    a_iso = cmp_a.rows == cmp_a.cols and cmp_a.is_invertible()
    a_colinear = all(cmp_a @ X == Y @ cmp_a for X, Y in zip(lhs.comodule.operators(), rhs.comodule.operators()))
    # (b)
    L = hom_comodule_contra_data(N, corestrict(a, P))
    R0 = hom_comodule_contra_data(chN.comodule, P)
    R = contrarestrict(a, R0.contramodule)
    n, p, k = N.dim, P.dim, chN.comodule.dim
    cols = []
    for j in range(L.space.dim):
        g = Mat(F, p, n, [[L.space.basis[r * n + c, j] for c in range(n)] for r in range(p)])
        ghat = _act_columns(P.operators(), g, C.dim, p) @ chN.quotient.section
        cols.append(list(ghat.flat()))
    raw = Mat.from_columns(F, cols, p * k) if cols else Mat.zeros(F, p * k, 0)
    lands = all(R0.space.contains(raw.col(j)) for j in range(raw.cols))
    cmp_b = coordinate_map(R0.space) @ raw if lands else None
    b_iso = bool(cmp_b is not None and cmp_b.rows == cmp_b.cols and cmp_b.is_invertible())
    b_morphism = bool(cmp_b is not None and check_contra_morphism(cmp_b, L.contramodule, R).ok)
    return {
        "a": {
            "dim_lhs": lhs.comodule.dim,
            "dim_rhs": rhs.comodule.dim,
            "well_defined": bool(well_defined),
            "colinear": bool(a_colinear),
            "iso": bool(a_iso),
        },
        "b": {
            "dim_lhs": L.contramodule.dim,
            "dim_rhs": R.dim,
            "lands_in_hom": bool(lands),
            "contramodule_morphism": b_morphism,
            "iso": b_iso,
        },
        "status": "pass" if (well_defined and a_iso and a_colinear and lands and b_iso and b_morphism) else "fail",
    }
