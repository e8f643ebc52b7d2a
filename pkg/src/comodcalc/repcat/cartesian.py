"""Cartesian objects: structure maps whose mates are isomorphisms.

Mates per flavor, for ``x < y`` with arrow ``a``:

* cis-comodule: ``M_x -> a_* M_y``, ``m -> (p (x) id) rho(m)``;
* trans-comodule: ``a^! M_y -> M_x``, ``[m (x) f] -> f . p(m)``;
* trans-contramodule: ``a^. M_y -> M_x``, ``[h] -> pi(p o h)``;
* cis-module: ``M_x (x)_{A_x} A_y -> M_y``, ``[m (x) b] -> p(m) b``;
* trans-module: ``M_y -> Hom_{A_x}(A_y, M_x)``, ``m -> (b -> p(m b))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..algmod import Module, coextend_data, extend_data, is_projective
from ..coalg import cohom_data, coinduce_data, is_coflat, is_sigma_injective
from ..contra import contraextend_data
from ..exactla import Mat, Subspace, coordinate_map
from ..report import DimensionError, PreconditionError, UnsupportedInputError
from .objects import RepObject, closure, generated_subobject, is_subobject

__all__ = [
    "mate",
    "ArrowReport",
    "CartesianReport",
    "is_cartesian",
    "hypothesis_flags",
    "cartesian_hull",
    "HULL_FLAVORS",
]

HYPOTHESIS_NAME = {
    "cis-comodule": "left coflat",
    "trans-comodule": "sigma-injective",
    "trans-contramodule": "right coflat",
    "cis-module": "flat",
    "trans-module": "fg-projective",
}

HULL_FLAVORS = ("cis-comodule", "trans-module")


def _act(M, p: Mat, n_base: int) -> Mat:
    F = M.field
    ops = M.operators()
    cols = [(ops[l] @ p).column_values(j) for j in range(p.cols) for l in range(n_base)]
    return Mat.from_columns(F, cols, M.dim) if cols else Mat.zeros(F, M.dim, 0)


def _raw_mate(M: RepObject, x, y) -> tuple[Mat, Any]:
    """Mate into the ambient ``M_t (x) B`` for the left exact flavors, plus the construction data."""
    F = M.field
    p = M.plain(x, y)
    a = M.rep.morphism(x, y)
    if M.flavor == "cis-comodule":
        d = coinduce_data(a, M.fibers[y])
        C = M.rep.fibers[x]
        return p.kron(Mat.identity(F, C.dim)) @ M.fibers[x].rho, d
    if M.flavor == "trans-module":
        d = coextend_data(a, M.fibers[x])
        A = M.rep.fibers[y]
        ops = M.fibers[y].operators()
        raw = Mat(F, M.dim(x) * A.dim, M.dim(y),
                  [[(p @ ops[l])[k, j] for j in range(M.dim(y))]
                   for k in range(M.dim(x)) for l in range(A.dim)])
        return raw, d
    raise UnsupportedInputError(f"no ambient mate for {M.flavor}")


def mate(M: RepObject, x, y) -> Mat:
    """The structure map of ``x <= y`` in its canonical (mate) form."""
    F = M.field
    p = M.plain(x, y)
    a = M.rep.morphism(x, y)
    f = M.flavor
    if f in ("cis-comodule", "trans-module"):
        raw, d = _raw_mate(M, x, y)
        return coordinate_map(d.space) @ raw
    if f == "trans-comodule":
        d = cohom_data(a, M.fibers[y])
        return _act(M.fibers[x], p, M.rep.fibers[x].dim) @ d.quotient.section
    if f == "trans-contramodule":
        d = contraextend_data(a, M.fibers[y])
        C = M.rep.fibers[x]
        return M.fibers[x].pi @ p.kron(Mat.identity(F, C.dim)) @ d.quotient.section
    d = extend_data(a, M.fibers[x])
    return _act(M.fibers[y], p, M.rep.fibers[y].dim) @ d.quotient.section


def _hypothesis(M: RepObject, x, y) -> bool:
    a = M.rep.morphism(x, y)
    f = M.flavor
    if f == "cis-comodule":
        return is_coflat(a, "left")
    if f == "trans-comodule":
        return is_sigma_injective(a)
    if f == "trans-contramodule":
        return is_coflat(a, "right")
    A, B = a.source, a.target
    if f == "cis-module":
        ops = tuple(B.left_mul(a.map.col(i)) for i in range(A.dim))
        return is_projective(Module(A, ops, "left", B.dim))
    ops = tuple(B.right_mul(a.map.col(i)) for i in range(A.dim))
    return is_projective(Module(A, ops, "right", B.dim))


def hypothesis_flags(M: RepObject) -> dict:
    """Per covering pair, whether the flavor's exactness hypothesis holds."""
    return {(x, y): _hypothesis(M, x, y) for x, y in M.poset.covers}


@dataclass(frozen=True)
class ArrowReport:
    pair: tuple
    source_dim: int
    target_dim: int
    rank: int

    @property
    def iso(self) -> bool:
        return self.source_dim == self.target_dim == self.rank


@dataclass(frozen=True)
class CartesianReport:
    flavor: str
    hypothesis: str
    arrows: tuple[ArrowReport, ...]
    hypotheses: dict = field(default_factory=dict)

    @property
    def cartesian(self) -> bool:
        return all(a.iso for a in self.arrows)

    def __bool__(self) -> bool:
        return self.cartesian

    def as_dict(self) -> dict:
        return {
            "flavor": self.flavor,
            "cartesian": self.cartesian,
            "hypothesis": self.hypothesis,
            "arrows": [
                {"pair": list(a.pair), "source_dim": a.source_dim, "target_dim": a.target_dim,
                 "rank": a.rank, "iso": a.iso,
                 "hypothesis_holds": self.hypotheses.get(a.pair)}
                for a in self.arrows
            ],
        }


def is_cartesian(M: RepObject, with_hypotheses: bool = True) -> CartesianReport:
    """Rank check of every mate over all strict relations ``x < y``."""
    arrows = []
    for x, y in M.poset.comparable_pairs():
        m = mate(M, x, y)
        arrows.append(ArrowReport((x, y), m.cols, m.rows, m.rank))
    hyps = hypothesis_flags(M) if with_hypotheses else {}
    return CartesianReport(M.flavor, HYPOTHESIS_NAME[M.flavor], tuple(arrows), hyps)


def _left_components(v: Mat, rows: int, cols: int) -> list[Mat]:
    """Columns of the ``rows x cols`` reshape of ``v``, i.e. ``(id (x) f)(v)`` for all ``f``."""
    F = v.field
    return [Mat(F, rows, 1, [[v[r * cols + l, 0]] for r in range(rows)]) for l in range(cols)]


def cartesian_hull(M: RepObject, x, vectors: Mat) -> dict:
    """Smallest cartesian subobject whose fiber at ``x`` contains ``vectors``.

    Alternates the generated-subobject closure with, for each ``s < t``,
    enlarging ``N_t`` so that the mate of ``N_s`` lands in the transported
    ``N_t`` and enlarging ``N_s`` to the full preimage of it.  Each step is
    forced on any cartesian subobject containing the seed, so the fixed point
    is the minimum.  Supported for the flavors whose transport functor is left
    exact (coinduction, coextension), where intersections are preserved.
    """
    if M.flavor not in HULL_FLAVORS:
        raise UnsupportedInputError(f"cartesian hull is implemented for {', '.join(HULL_FLAVORS)}")
    if vectors.rows != M.dim(x):
        raise DimensionError("vectors do not live in the fiber")
    if not is_cartesian(M, with_hypotheses=False):
        raise PreconditionError("cartesian_hull needs a cartesian object")
    F = M.field
    subs = generated_subobject(M, x, vectors)
    pairs = M.poset.comparable_pairs()
    while True:
        changed = False
        for a, b in pairs:
            raw, _ = _raw_mate(M, a, b)
            # mate goes from the fiber s into M_t (x) B
            s, t = (a, b) if M.flavor == "cis-comodule" else (b, a)
            dt = M.dim(t)
            nb = raw.rows // dt if dt else 0
            if nb == 0:
                continue
            img = raw @ subs[s].basis
            comps = [c for j in range(img.cols) for c in _left_components(img.col(j), dt, nb)]
            W = subs[t] + Subspace.span(F, dt, comps) if comps else subs[t]
            if W.dim != subs[t].dim:
                subs[t] = W
                changed = True
            WB = Subspace.span(F, dt * nb, [w.kron(Mat.unit(F, nb, l)) for w in subs[t].basis.columns()
                                             for l in range(nb)]) if subs[t].dim else Subspace.zero(F, dt * nb)
            pre = WB.preimage(raw)
            if not pre <= subs[s]:
                subs[s] = subs[s] + pre
                changed = True
        if not changed:
            break
        subs = closure(M, subs)
    assert is_subobject(M, subs)
    return subs
