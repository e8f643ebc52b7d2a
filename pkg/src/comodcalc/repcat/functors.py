"""The adjoint triples ``ex_x -| ev_x -| coe_x`` for each flavor.

``ex_x(V)`` and ``coe_x(N)`` have ``V`` (resp. ``N``) itself as fiber at
``x``, so the unit of ``ex -| ev`` and the counit of ``ev -| coe`` are
identities.

=====================  ==========================  ==========================
flavor                 ex_x(V) at y                coe_x(N) at y
=====================  ==========================  ==========================
``cis-comodule``       corestrict, y >= x          coinduce, y <= x
``trans-comodule``     cohom, y <= x               corestrict, y >= x
``trans-contramodule`` contraextend, y <= x        contrarestrict, y >= x
``cis-module``         extend, y >= x              restrict, y <= x
``trans-module``       restrict, y <= x            coextend, y >= x
=====================  ==========================  ==========================
"""

from __future__ import annotations

from typing import Any

from ..adjunction import Adjunction
from ..algmod import (
    Module,
    coextend_data,
    extend_data,
    regular_module,
    restrict,
)
from ..coalg import (
    RightComodule,
    cohom_data,
    coinduce_data,
    corestrict,
    dual_algebra,
    module_to_comodule,
)
from ..contra import Contramodule, contraextend_data, contrarestrict, free_contramodule
from ..exactla import Mat, coordinate_map, image
from ..report import MismatchError
from .objects import (
    FORWARD,
    RepMorphism,
    RepObject,
    fiber_hom,
    hom_rep,
    identity_morphism,
    subobject,
)

__all__ = [
    "zero_fiber",
    "ex",
    "ev",
    "coe",
    "ex_map",
    "coe_map",
    "ex_counit",
    "coe_unit",
    "ex_ev_adjunction",
    "ev_coe_adjunction",
    "adjunct_from_ex",
    "generated_subobject_formula",
    "projective_generator_family",
    "generator_certificate",
]


def zero_fiber(flavor: str, base) -> Any:
    F = base.field
    ops = [Mat.zeros(F, 0, 0)] * base.dim
    if flavor in ("cis-comodule", "trans-comodule"):
        return RightComodule.from_operators(base, ops, 0)
    if flavor == "trans-contramodule":
        return Contramodule.from_operators(base, ops, 0)
    return Module(base, tuple(ops), "right", 0)


def _lives_up(flavor: str, functor: str) -> bool:
    """Whether ``ex`` (or ``coe``) of this flavor is supported on the up-set."""
    up_ex = flavor in ("cis-comodule", "cis-module")
    return up_ex if functor == "ex" else not up_ex


def _action_columns(M, p: Mat, n_base: int) -> Mat:
    """``v (x) b -> b . p(v)`` on ``V (x) B`` for a fiber ``M`` with operators indexed by ``B``."""
    F = M.field
    ops = M.operators()
    cols = [(ops[l] @ p).column_values(j) for j in range(p.cols) for l in range(n_base)]
    return Mat.from_columns(F, cols, M.dim) if cols else Mat.zeros(F, M.dim, 0)


class _Built:
    """Fibers plus per-fiber construction data of an ex/coe object."""

    def __init__(self, obj: RepObject, data: dict):
        self.obj = obj
        self.data = data


def _ex_build(flavor: str, rep, x, V) -> _Built:
    P = rep.poset
    F = rep.field
    support = P.up_set(x) if _lives_up(flavor, "ex") else P.down_set(x)
    fibers, data = {}, {}
    for y in P.elements:
        if y == x:
            fibers[y] = V
        elif y not in support:
            fibers[y] = zero_fiber(flavor, rep.fibers[y])
        elif flavor == "cis-comodule":
            fibers[y] = corestrict(rep.morphism(x, y), V)
        elif flavor == "cis-module":
            d = extend_data(rep.morphism(x, y), V)
            fibers[y], data[y] = d.module, d
        elif flavor == "trans-comodule":
            d = cohom_data(rep.morphism(y, x), V)
            fibers[y], data[y] = d.comodule, d
        elif flavor == "trans-contramodule":
            d = contraextend_data(rep.morphism(y, x), V)
            fibers[y], data[y] = d.contramodule, d
        else:  # trans-module
            fibers[y] = restrict(rep.morphism(y, x), V)
    maps = {}
    for a, b in P.covers:
        s, t = (a, b) if flavor in FORWARD else (b, a)
        ds, dt = fibers[s].dim, fibers[t].dim
        if s not in support or t not in support:
            maps[(a, b)] = Mat.zeros(F, dt, ds)
        elif flavor in ("cis-comodule", "trans-module"):
            maps[(a, b)] = Mat.identity(F, V.dim)
        elif s == x:
            maps[(a, b)] = data[t].unit()
        else:
            # ambient V (x) B_s -> V (x) B_t through the arrow between the bases
            if flavor == "cis-module":
                step = rep.morphism(s, t).map
            else:
                step = rep.morphism(t, s).map.T
            q_s, q_t = data[s].quotient, data[t].quotient
            maps[(a, b)] = q_t.proj @ Mat.identity(F, V.dim).kron(step) @ q_s.section
    return _Built(RepObject(flavor, rep, fibers, maps), data)


def ex(flavor: str, rep, x, V) -> RepObject:
    """Left adjoint of ``ev_x``."""
    if V.base != rep.fiber(x):
        raise MismatchError("ex: fiber object is not over the representation's fiber at x")
    return _ex_build(flavor, rep, x, V).obj


def ev(M: RepObject, x) -> Any:
    return M.fibers[x]


def _coe_build(flavor: str, rep, x, N) -> _Built:
    P = rep.poset
    F = rep.field
    support = P.up_set(x) if _lives_up(flavor, "coe") else P.down_set(x)
    fibers, data = {}, {}
    for y in P.elements:
        if y == x:
            fibers[y] = N
        elif y not in support:
            fibers[y] = zero_fiber(flavor, rep.fibers[y])
        elif flavor == "cis-comodule":
            d = coinduce_data(rep.morphism(y, x), N)
            fibers[y], data[y] = d.comodule, d
        elif flavor == "cis-module":
            fibers[y] = restrict(rep.morphism(y, x), N)
        elif flavor == "trans-comodule":
            fibers[y] = corestrict(rep.morphism(x, y), N)
        elif flavor == "trans-contramodule":
            fibers[y] = contrarestrict(rep.morphism(x, y), N)
        else:  # trans-module
            d = coextend_data(rep.morphism(x, y), N)
            fibers[y], data[y] = d.module, d
    maps = {}
    for a, b in P.covers:
        s, t = (a, b) if flavor in FORWARD else (b, a)
        ds, dt = fibers[s].dim, fibers[t].dim
        if s not in support or t not in support:
            maps[(a, b)] = Mat.zeros(F, dt, ds)
        elif flavor in ("cis-module", "trans-comodule", "trans-contramodule"):
            maps[(a, b)] = Mat.identity(F, N.dim)
        elif t == x:
            maps[(a, b)] = data[s].counit()
        elif flavor == "cis-comodule":
            # N box C_s -> N box C_t through id (x) arrow
            step = rep.morphism(s, t).map
            maps[(a, b)] = coordinate_map(data[t].space) @ Mat.identity(F, N.dim).kron(step) @ data[s].space.basis
        else:
            # trans-module: Hom(A_s, N) -> Hom(A_t, N), f -> f o arrow(t -> s)
            step = rep.morphism(t, s).map.T
            maps[(a, b)] = coordinate_map(data[t].space) @ Mat.identity(F, N.dim).kron(step) @ data[s].space.basis
    return _Built(RepObject(flavor, rep, fibers, maps), data)


def coe(flavor: str, rep, x, N) -> RepObject:
    """Right adjoint of ``ev_x``."""
    if N.base != rep.fiber(x):
        raise MismatchError("coe: fiber object is not over the representation's fiber at x")
    return _coe_build(flavor, rep, x, N).obj


def ex_map(flavor: str, rep, x, f: Mat, V, V2) -> RepMorphism:
    """``ex_x`` on a fiber morphism ``f: V -> V2``."""
    b1, b2 = _ex_build(flavor, rep, x, V), _ex_build(flavor, rep, x, V2)
    support = set(rep.poset.up_set(x) if _lives_up(flavor, "ex") else rep.poset.down_set(x))
    comps = {}
    for y in rep.poset.elements:
        if y not in support:
            comps[y] = Mat.zeros(rep.field, b2.obj.dim(y), b1.obj.dim(y))
        elif y == x or y not in b1.data:
            comps[y] = f
        else:
            comps[y] = b1.data[y].induced(f, b2.data[y])
    return RepMorphism(b1.obj, b2.obj, comps)


def coe_map(flavor: str, rep, x, g: Mat, N, N2) -> RepMorphism:
    """``coe_x`` on a fiber morphism ``g: N -> N2``."""
    b1, b2 = _coe_build(flavor, rep, x, N), _coe_build(flavor, rep, x, N2)
    support = set(rep.poset.up_set(x) if _lives_up(flavor, "coe") else rep.poset.down_set(x))
    comps = {}
    for y in rep.poset.elements:
        if y not in support:
            comps[y] = Mat.zeros(rep.field, b2.obj.dim(y), b1.obj.dim(y))
        elif y == x or y not in b1.data:
            comps[y] = g
        else:
            comps[y] = b1.data[y].induced(g, b2.data[y])
    return RepMorphism(b1.obj, b2.obj, comps)


def ex_counit(M: RepObject, x) -> RepMorphism:
    """``ex_x(M_x) -> M``: the plain maps out of ``x``, rewritten through mates."""
    flavor, rep = M.flavor, M.rep
    built = _ex_build(flavor, rep, x, M.fibers[x])
    E = built.obj
    F = M.field
    comps = {}
    for y in rep.poset.elements:
        if E.dim(y) == 0 and y != x:
            comps[y] = Mat.zeros(F, M.dim(y), 0)
            continue
        if flavor in FORWARD:
            p = M.plain(x, y) if rep.poset.le(x, y) else None
        else:
            p = M.plain(y, x) if rep.poset.le(y, x) else None
        if p is None:
            comps[y] = Mat.zeros(F, M.dim(y), E.dim(y))
        elif y == x or flavor in ("cis-comodule", "trans-module"):
            comps[y] = p
        elif flavor == "trans-contramodule":
            q = built.data[y].quotient
            C = rep.fibers[y]
            comps[y] = M.fibers[y].pi @ p.kron(Mat.identity(F, C.dim)) @ q.section
        else:
            # cis-module: [v (x) a] -> p(v) a ; trans-comodule: [v (x) f] -> f . p(v)
            q = built.data[y].quotient
            comps[y] = _action_columns(M.fibers[y], p, rep.fibers[y].dim) @ q.section
    return RepMorphism(E, M, comps)


def coe_unit(M: RepObject, x) -> RepMorphism:
    """``M -> coe_x(M_x)``."""
    flavor, rep = M.flavor, M.rep
    built = _coe_build(flavor, rep, x, M.fibers[x])
    Cx = built.obj
    F = M.field
    comps = {}
    for y in rep.poset.elements:
        if Cx.dim(y) == 0 and y != x:
            comps[y] = Mat.zeros(F, 0, M.dim(y))
            continue
        if flavor in FORWARD:
            p = M.plain(y, x) if rep.poset.le(y, x) else None
        else:
            p = M.plain(x, y) if rep.poset.le(x, y) else None
        if p is None:
            comps[y] = Mat.zeros(F, Cx.dim(y), M.dim(y))
        elif y == x or flavor not in ("cis-comodule", "trans-module"):
            comps[y] = p
        elif flavor == "cis-comodule":
            # m -> (p (x) id) rho(m) inside M_x box C_y
            C = rep.fibers[y]
            comps[y] = coordinate_map(built.data[y].space) @ p.kron(Mat.identity(F, C.dim)) @ M.fibers[y].rho
        else:
            # trans-module: m -> (a -> p(m a)) in Hom(A_y, M_x) = M_x (x) A_y*
            A = rep.fibers[y]
            ops = M.fibers[y].operators()
            raw = Mat(F, M.dim(x) * A.dim, M.dim(y),
                      [[(p @ ops[l])[k, j] for j in range(M.dim(y))]
                       for k in range(M.dim(x)) for l in range(A.dim)])
            comps[y] = coordinate_map(built.data[y].space) @ raw
    return RepMorphism(M, Cx, comps)


# adjunction certificates ---------------------------------------------------------

def _ident_fiber(V) -> Mat:
    return Mat.identity(V.field, V.dim)


def ex_ev_adjunction(flavor: str, rep, x) -> Adjunction:
    return Adjunction(
        name=f"ex -| ev ({flavor}, at {x})",
        left=lambda V: ex(flavor, rep, x, V),
        right=lambda M: ev(M, x),
        left_mor=lambda f, V, V2: ex_map(flavor, rep, x, f, V, V2),
        right_mor=lambda g, M, M2: g[x],
        unit=lambda V: Mat.identity(V.field, V.dim),
        counit=lambda M: ex_counit(M, x),
        hom_src=fiber_hom,
        hom_tgt=hom_rep,
        id_src=_ident_fiber,
        id_tgt=identity_morphism,
    )


def ev_coe_adjunction(flavor: str, rep, x) -> Adjunction:
    return Adjunction(
        name=f"ev -| coe ({flavor}, at {x})",
        left=lambda M: ev(M, x),
        right=lambda N: coe(flavor, rep, x, N),
        left_mor=lambda f, M, M2: f[x],
        right_mor=lambda g, N, N2: coe_map(flavor, rep, x, g, N, N2),
        unit=lambda M: coe_unit(M, x),
        counit=lambda N: Mat.identity(N.field, N.dim),
        hom_src=hom_rep,
        hom_tgt=fiber_hom,
        id_src=identity_morphism,
        id_tgt=_ident_fiber,
    )


def adjunct_from_ex(M: RepObject, x, h: Mat, V) -> RepMorphism:
    """The morphism ``ex_x(V) -> M`` corresponding to ``h: V -> M_x``."""
    return ex_counit(M, x) @ ex_map(M.flavor, M.rep, x, h, V, M.fibers[x])


def generated_subobject_formula(M: RepObject, x, vectors: Mat) -> dict:
    """Generated subobject as the image of ``ex_x(V) -> M`` for ``V`` generated by ``vectors``.

    Independent of the closure iteration in :func:`generated_subobject`: only
    the fiber at ``x`` is closed, everything else comes from the adjunct.
    """
    from ..exactla import invariant_closure

    Mx = M.fibers[x]
    W = invariant_closure(M.field, Mx.dim, Mx.operators(), vectors)
    V = Mx.submodule(W)
    eta = adjunct_from_ex(M, x, W.basis, V)
    return {y: image(eta[y]) for y in M.poset.elements}


def projective_generator_family(rep, flavor: str) -> list[tuple[Any, RepObject]]:
    """``ex_x`` of the free rank-one fiber object at each element, as ``(x, object)``."""
    out = []
    for x in rep.poset.elements:
        B = rep.fibers[x]
        if flavor in ("cis-comodule", "trans-comodule"):
            V = module_to_comodule(regular_module(dual_algebra(B), "left"), B)
        elif flavor == "trans-contramodule":
            V = free_contramodule(B, 1)
        else:
            V = regular_module(B, "right")
        out.append((x, ex(flavor, rep, x, V)))
    return out


def generator_certificate(family: list[tuple[Any, RepObject]], N: RepObject, inclusion: RepMorphism) -> dict | None:
    """For a proper mono ``N -> M``, a family member and map into ``M`` not factoring through ``N``.

    Returns None when every map from the family factors (which would refute
    the generator property, or mean the inclusion is onto).
    """
    M = inclusion.target
    for x, G in family:
        for g in hom_rep(G, M):
            for y in M.poset.elements:
                img = image(g[y])
                if not img <= image(inclusion[y]):
                    return {"element": x, "fiber": y, "morphism": g}
    return None
