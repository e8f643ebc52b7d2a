"""Objects over a poset representation, in five flavors.

Every flavor stores, for each relation ``x < y``, a plain linear map between
fibers:

=====================  ============  ========================================
flavor                 plain map     it must be a morphism of
=====================  ============  ========================================
``cis-comodule``       M_x -> M_y    ``corestrict(a, M_x) -> M_y`` over C_y
``trans-comodule``     M_y -> M_x    ``M_y -> corestrict(a, M_x)`` over C_y
``trans-contramodule`` M_y -> M_x    ``M_y -> contrarestrict(a, M_x)`` over C_y
``cis-module``         M_x -> M_y    ``M_x -> restrict(a, M_y)`` over A_x
``trans-module``       M_y -> M_x    ``restrict(a, M_y) -> M_x`` over A_x
=====================  ============  ========================================

where ``a`` is the arrow ``x -> y`` of the representation.  The structure maps
of the textbook definitions (``M_x -> a_* M_y``, ``a^! M_y -> M_x`` and so on)
are the mates of these plain maps; :mod:`.cartesian` builds them on demand.
With plain maps the cocycle law is ordinary functoriality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from ..algmod import Module, check_module, restrict
from ..coalg import RightComodule, check_comodule, corestrict
from ..contra import Contramodule, check_contramodule, contrarestrict
from ..exactla import (
    Mat,
    Quotient,
    Subspace,
    coordinate_map,
    image,
    invariant_closure,
    is_invariant,
    kernel,
    stacked_kernel,
)
from ..report import CheckReport, DimensionError, MismatchError, Violation, compare_maps
from .reps import AlgebraRep, CoalgebraRep

__all__ = [
    "FLAVORS",
    "FORWARD",
    "RepObject",
    "RepMorphism",
    "check_object",
    "check_morphism",
    "hom_rep",
    "fiber_hom",
    "subobject",
    "quotient_object",
    "is_subobject",
    "kernel_rep",
    "cokernel_rep",
    "image_rep",
    "generated_subobject",
    "closure",
    "zero_object",
    "direct_sum_rep",
    "identity_morphism",
    "zero_morphism",
]

FLAVORS = ("cis-comodule", "trans-comodule", "trans-contramodule", "cis-module", "trans-module")
FORWARD = frozenset({"cis-comodule", "cis-module"})
_FIBER_TYPE = {
    "cis-comodule": RightComodule,
    "trans-comodule": RightComodule,
    "trans-contramodule": Contramodule,
    "cis-module": Module,
    "trans-module": Module,
}


def _is_module_flavor(flavor: str) -> bool:
    return flavor.endswith("-module") and "comodule" not in flavor and "contra" not in flavor


@dataclass(frozen=True, eq=False)
class RepObject:
    flavor: str
    rep: CoalgebraRep | AlgebraRep
    fibers: Mapping[Any, Any]
    maps: Mapping[tuple, Mat]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        want = AlgebraRep if _is_module_flavor(self.flavor) else CoalgebraRep
        if not isinstance(self.rep, want):
            raise MismatchError(f"{self.flavor} objects live over a {want.__name__}")
        P = self.rep.poset
        for x in P.elements:
            if x not in self.fibers:
                raise MismatchError(f"object has no fiber at {x!r}")
            if not isinstance(self.fibers[x], _FIBER_TYPE[self.flavor]):
                raise MismatchError(f"fiber at {x!r} has the wrong kind for {self.flavor}")
            if self.fibers[x].base != self.rep.fibers[x]:
                raise MismatchError(f"fiber at {x!r} is not over the representation's fiber")
        for (x, y), m in self.maps.items():
            if not P.lt(x, y):
                raise MismatchError(f"structure map on {x!r}, {y!r} which is not a strict relation")
            s, t = (x, y) if self.forward else (y, x)
            if m.shape != (self.fibers[t].dim, self.fibers[s].dim):
                raise DimensionError(f"structure map on {x!r} < {y!r} has shape {m.shape}")
        for c in P.covers:
            if c not in self.maps:
                raise MismatchError(f"missing structure map on the covering pair {c[0]!r} < {c[1]!r}")

    @property
    def forward(self) -> bool:
        return self.flavor in FORWARD

    @property
    def poset(self):
        return self.rep.poset

    @property
    def field(self):
        return self.rep.field

    def dim(self, x) -> int:
        return self.fibers[x].dim

    @property
    def total_dim(self) -> int:
        return sum(self.fibers[x].dim for x in self.poset.elements)

    def dims(self) -> dict:
        return {x: self.fibers[x].dim for x in self.poset.elements}

    def plain(self, x, y) -> Mat:
        """Plain map attached to ``x <= y``: ``M_x -> M_y`` (cis) or ``M_y -> M_x`` (trans)."""
        key = (x, y)
        if key not in self._cache:
            if x == y:
                out = Mat.identity(self.field, self.fibers[x].dim)
            else:
                path = self.poset.chain_between(x, y)
                out = _chain(self, path)
            self._cache[key] = out
        return self._cache[key]

    def frame(self, x, y) -> tuple[Any, Any]:
        """The fiber objects between which ``plain(x, y)`` must be a morphism."""
        a = self.rep.morphism(x, y)
        Mx, My = self.fibers[x], self.fibers[y]
        f = self.flavor
        if f == "cis-comodule":
            return corestrict(a, Mx), My
        if f == "trans-comodule":
            return My, corestrict(a, Mx)
        if f == "trans-contramodule":
            return My, contrarestrict(a, Mx)
        if f == "cis-module":
            return Mx, restrict(a, My)
        return restrict(a, My), Mx

    def with_data(self, fibers: Mapping, maps: Mapping, name: str = "") -> "RepObject":
        return RepObject(self.flavor, self.rep, dict(fibers), dict(maps), name)


def _chain(M: RepObject, path: list) -> Mat:
    out = M.maps[(path[0], path[1])]
    for a, b in zip(path[1:], path[2:]):
        step = M.maps[(a, b)]
        out = step @ out if M.forward else out @ step
    return out


def _intertwines(f: Mat, src, tgt) -> bool:
    return all(f @ X == Y @ f for X, Y in zip(src.operators(), tgt.operators()))


def _fiber_report(flavor: str, F) -> CheckReport:
    if flavor in ("cis-comodule", "trans-comodule"):
        return check_comodule(F)
    if flavor == "trans-contramodule":
        return check_contramodule(F)
    return check_module(F)


def check_object(M: RepObject) -> CheckReport:
    """Fiber axioms, structure maps being fiber morphisms, and the cocycle law."""
    parts = []
    for x in M.poset.elements:
        r = _fiber_report(M.flavor, M.fibers[x])
        parts.append(CheckReport("fiber", tuple(Violation(f"fiber {x}: {v.law}", v.witness, v.defect)
                                               for v in r.violations)))
    v: list[Violation] = []
    for (x, y) in sorted(M.maps, key=lambda p: (M.poset.index(p[0]), M.poset.index(p[1]))):
        src, tgt = M.frame(x, y)
        f = M.maps[(x, y)]
        for i, (X, Y) in enumerate(zip(src.operators(), tgt.operators())):
            bad = compare_maps(f"structure map {x}->{y} (operator {i})", f @ X, Y @ f)
            if bad:
                v.extend(bad)
                break
    for x, y in M.poset.comparable_pairs():
        ref = M.plain(x, y)
        for path in M.poset.chains(x, y):
            bad = compare_maps(f"cocycle along {'<'.join(map(str, path))}", _chain(M, path), ref)
            v.extend(bad[:1])
        if (x, y) in M.maps and (x, y) not in M.poset.covers:
            v.extend(compare_maps(f"cocycle on {x}<{y}", M.maps[(x, y)], ref)[:1])
    parts.append(CheckReport("structure", tuple(v)))
    return parts[0].merged(*parts[1:], subject=f"{M.flavor} object {M.name}".strip()) if parts else CheckReport("object")


# morphisms ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RepMorphism:
    source: RepObject
    target: RepObject
    components: Mapping[Any, Mat]

    def __post_init__(self):
        for x in self.source.poset.elements:
            c = self.components[x]
            if c.shape != (self.target.dim(x), self.source.dim(x)):
                raise DimensionError(f"component at {x!r} has shape {c.shape}")

    def __getitem__(self, x) -> Mat:
        return self.components[x]

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """``self`` after ``other``."""
        return RepMorphism(other.source, self.target,
                           {x: self.components[x] @ other.components[x] for x in self.source.poset.elements})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMorphism):
            return NotImplemented
        return all(self.components[x] == other.components[x] for x in self.source.poset.elements)

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           {x: self.components[x] + other.components[x] for x in self.source.poset.elements})

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           {x: self.components[x].scale(c) for x in self.source.poset.elements})

    def flatten(self) -> Mat:
        F = self.source.field
        vals = [v for x in self.source.poset.elements for v in self.components[x].flat()]
        return Mat(F, len(vals), 1, [[v] for v in vals])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components.values())

    def is_iso(self) -> bool:
        return all(c.rows == c.cols and c.is_invertible() for c in self.components.values())


def identity_morphism(M: RepObject) -> RepMorphism:
    return RepMorphism(M, M, {x: Mat.identity(M.field, M.dim(x)) for x in M.poset.elements})


def zero_morphism(M: RepObject, N: RepObject) -> RepMorphism:
    return RepMorphism(M, N, {x: Mat.zeros(M.field, N.dim(x), M.dim(x)) for x in M.poset.elements})


def _same_frame(M: RepObject, N: RepObject) -> None:
    if M.flavor != N.flavor:
        raise MismatchError("objects of different flavors")
    if M.rep is not N.rep and (M.rep.poset != N.rep.poset
                               or any(M.rep.fibers[x] != N.rep.fibers[x] for x in M.poset.elements)):
        raise MismatchError("objects over different representations")


def check_morphism(eta: RepMorphism) -> CheckReport:
    M, N = eta.source, eta.target
    _same_frame(M, N)
    v: list[Violation] = []
    for x in M.poset.elements:
        e = eta.components[x]
        for i, (X, Y) in enumerate(zip(M.fibers[x].operators(), N.fibers[x].operators())):
            bad = compare_maps(f"component {x} (operator {i})", e @ X, Y @ e)
            if bad:
                v.extend(bad)
                break
    for x, y in M.poset.covers:
        if M.forward:
            bad = compare_maps(f"square {x}->{y}", eta[y] @ M.plain(x, y), N.plain(x, y) @ eta[x])
        else:
            bad = compare_maps(f"square {y}->{x}", eta[x] @ M.plain(x, y), N.plain(x, y) @ eta[y])
        v.extend(bad)
    return CheckReport("morphism", tuple(v))


def fiber_hom(X, Y) -> list[Mat]:
    """Morphisms between two fiber objects of the same kind over the same base."""
    if X.base != Y.base:
        raise MismatchError("hom over different bases")
    from ..exactla import intertwiners

    return intertwiners(X.field, X.operators(), Y.operators(), X.dim, Y.dim)


def hom_rep(M: RepObject, N: RepObject) -> list[RepMorphism]:
    """Basis of morphisms ``M -> N``: fiberwise intertwiners whose squares commute."""
    _same_frame(M, N)
    F = M.field
    els = M.poset.elements
    sizes = [N.dim(x) * M.dim(x) for x in els]
    offsets = {}
    total = 0
    for x, s in zip(els, sizes):
        offsets[x] = total
        total += s

    def place(pieces: dict, rows: int) -> Mat:
        blocks = []
        for x, s in zip(els, sizes):
            blocks.append(pieces.get(x, Mat.zeros(F, rows, s)))
        return Mat.hstack(F, rows, blocks)

    eqs = []
    for x in els:
        m, n = M.dim(x), N.dim(x)
        Im, In = Mat.identity(F, m), Mat.identity(F, n)
        for X, Y in zip(M.fibers[x].operators(), N.fibers[x].operators()):
            E = In.kron(X.T) - Y.kron(Im)
            if E.rows:
                eqs.append(place({x: E}, E.rows))
    for x, y in M.poset.covers:
        pM, pN = M.plain(x, y), N.plain(x, y)
        if M.forward:
            # eta_y pM - pN eta_x = 0
            A = Mat.identity(F, N.dim(y)).kron(pM.T)
            B = pN.kron(Mat.identity(F, M.dim(x)))
            if A.rows:
                eqs.append(place({y: A, x: -B}, A.rows))
        else:
            # eta_x pM - pN eta_y = 0
            A = Mat.identity(F, N.dim(x)).kron(pM.T)
            B = pN.kron(Mat.identity(F, M.dim(y)))
            if A.rows:
                eqs.append(place({x: A, y: -B}, A.rows))
    K = stacked_kernel(F, total, eqs)
    out = []
    for j in range(K.cols):
        col = K.column_values(j)
        comps = {}
        for x in els:
            o = offsets[x]
            n, m = N.dim(x), M.dim(x)
            comps[x] = Mat(F, n, m, [[col[o + r * m + c] for c in range(m)] for r in range(n)])
        out.append(RepMorphism(M, N, comps))
    return out


# subobjects, quotients, kernels ------------------------------------------------

def is_subobject(M: RepObject, subs: Mapping[Any, Subspace]) -> bool:
    for x in M.poset.elements:
        if not is_invariant(subs[x], M.fibers[x].operators()):
            return False
    for x, y in M.poset.covers:
        s, t = (x, y) if M.forward else (y, x)
        if not subs[s].map(M.plain(x, y)) <= subs[t]:
            return False
    return True


def subobject(M: RepObject, subs: Mapping[Any, Subspace]) -> tuple[RepObject, RepMorphism]:
    """The subobject with the given fibers, and its inclusion."""
    if not is_subobject(M, subs):
        raise MismatchError("the subspaces do not form a subobject")
    fibers = {x: M.fibers[x].submodule(subs[x]) for x in M.poset.elements}
    maps = {}
    for (x, y) in M.poset.covers:
        s, t = (x, y) if M.forward else (y, x)
        maps[(x, y)] = coordinate_map(subs[t]) @ M.plain(x, y) @ subs[s].basis
    S = M.with_data(fibers, maps)
    return S, RepMorphism(S, M, {x: subs[x].basis for x in M.poset.elements})


def quotient_object(M: RepObject, subs: Mapping[Any, Subspace]) -> tuple[RepObject, RepMorphism]:
    """``M / N`` for a subobject with fibers ``subs``, and the projection."""
    if not is_subobject(M, subs):
        raise MismatchError("the subspaces do not form a subobject")
    qs = {x: Quotient.of(subs[x]) for x in M.poset.elements}
    fibers = {x: M.fibers[x].quotient(qs[x]) for x in M.poset.elements}
    maps = {}
    for (x, y) in M.poset.covers:
        s, t = (x, y) if M.forward else (y, x)
        maps[(x, y)] = qs[t].proj @ M.plain(x, y) @ qs[s].section
    Q = M.with_data(fibers, maps)
    return Q, RepMorphism(M, Q, {x: qs[x].proj for x in M.poset.elements})


def kernel_rep(eta: RepMorphism) -> tuple[RepObject, RepMorphism]:
    """Fiberwise kernel with its inclusion."""
    return subobject(eta.source, {x: kernel(eta[x]) for x in eta.source.poset.elements})


def image_rep(eta: RepMorphism) -> tuple[RepObject, RepMorphism]:
    return subobject(eta.target, {x: image(eta[x]) for x in eta.source.poset.elements})


def cokernel_rep(eta: RepMorphism) -> tuple[RepObject, RepMorphism]:
    """Fiberwise cokernel with its projection."""
    return quotient_object(eta.target, {x: image(eta[x]) for x in eta.source.poset.elements})


def closure(M: RepObject, seeds: Mapping[Any, Subspace]) -> dict:
    """Smallest subobject fibers containing the given subspaces (fixed point)."""
    F = M.field
    subs = {z: seeds.get(z, Subspace.zero(F, M.dim(z))) for z in M.poset.elements}
    order = M.poset.topological_order()
    if not M.forward:
        order = order[::-1]
    changed = True
    while changed:
        changed = False
        for z in order:
            closed = invariant_closure(F, M.dim(z), M.fibers[z].operators(), subs[z])
            if closed.dim != subs[z].dim:
                subs[z] = closed
                changed = True
            for a, b in M.poset.covers:
                s, t = (a, b) if M.forward else (b, a)
                if s != z:
                    continue
                pushed = subs[t] + subs[s].map(M.plain(a, b))
                if pushed.dim != subs[t].dim:
                    subs[t] = pushed
                    changed = True
    return subs


def generated_subobject(M: RepObject, x, vectors: Mat) -> dict:
    """Fibers of the smallest subobject whose fiber at ``x`` contains ``vectors``.

    Closure under the fiber structure and the plain structure maps, iterated
    to a fixed point.
    """
    M.poset.index(x)
    if vectors.rows != M.dim(x):
        raise DimensionError("vectors do not live in the fiber")
    return closure(M, {x: Subspace.span(M.field, M.dim(x), vectors)})


def zero_object(flavor: str, rep) -> RepObject:
    from .functors import zero_fiber

    F = rep.field
    fibers = {x: zero_fiber(flavor, rep.fibers[x]) for x in rep.poset.elements}
    return RepObject(flavor, rep, fibers, {c: Mat.zeros(F, 0, 0) for c in rep.poset.covers})


def direct_sum_rep(M: RepObject, N: RepObject) -> RepObject:
    _same_frame(M, N)
    F = M.field
    fibers = {}
    for x in M.poset.elements:
        A, B = M.fibers[x], N.fibers[x]
        ops = [Mat.block_diag(F, [X, Y]) for X, Y in zip(A.operators(), B.operators())]
        fibers[x] = A.with_operators(ops, A.dim + B.dim)
    maps = {c: Mat.block_diag(F, [M.plain(*c), N.plain(*c)]) for c in M.poset.covers}
    return M.with_data(fibers, maps)
