"""The built-in instance corpus.

Each entry is a function returning the canonical JSON tree of one instance
document.  The same trees are shipped as ``corpus/<name>.json`` (regenerated
by ``scripts/build_corpus.py``) and are what ``comodcalc validate`` runs on.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Callable

from .algmod import (
    AlgebraMorphism,
    module_from_matrix_of_generator,
    polynomial_quotient_morphism,
    regular_module,
    truncated_polynomial_algebra,
)
from .codec import InstanceDocument, encode_document, parse, parse_data, serialize
from .coalg import (
    CoalgebraMorphism,
    counit_morphism,
    divided_power,
    dual_algebra,
    grouplike,
    inclusion_dp,
    matrix_coalgebra,
    regular_left,
    regular_right,
    trivial_coalgebra,
)
from .contra import free_contramodule
from .exactla import GF, QQ, ExactField, Mat
from .rational import PresentedAlgebra, RationalPairing, RepPairing, evaluation_pairing
from .repcat.functors import coe, ex
from .repcat.objects import RepObject, zero_object
from .repcat.poset import FinitePoset, chain
from .repcat.reps import AlgebraRep, CoalgebraRep

__all__ = ["CORPUS", "build", "load", "corpus_names", "shipped_text", "standard_coalgebras"]


def standard_coalgebras(F: ExactField) -> dict:
    """``KG`` for ``|G| = 1, 2, 3``, ``DP(n)`` for ``n <= 4``, ``MC(2)`` and ``K``."""
    out = {f"KG{n}": grouplike(F, n) for n in (1, 2, 3)}
    out.update({f"DP{n}": divided_power(F, n) for n in (1, 2, 3, 4)})
    out["MC2"] = matrix_coalgebra(F, 2)
    out["K"] = trivial_coalgebra(F)
    return out


def _minimal_gf5() -> dict:
    F = GF(5)
    return encode_document(F, coalgebras={"K": trivial_coalgebra(F)})


def _coalgebras(F: ExactField) -> dict:
    cs = standard_coalgebras(F)
    morphisms = {f"eps_{n}": counit_morphism(C) for n, C in cs.items() if n != "K"}
    for m, n in ((1, 2), (2, 3), (3, 4)):
        morphisms[f"dp{m}_dp{n}"] = inclusion_dp(F, m, n)
    objects = {}
    for n, C in cs.items():
        objects[f"R_{n}"] = regular_right(C)
        objects[f"L_{n}"] = regular_left(C)
        objects[f"T_{n}"] = free_contramodule(C, 1)
    return encode_document(F, coalgebras=cs, morphisms=morphisms, objects=objects)


def _kg_chain() -> dict:
    """Chain ``0 < 1`` carrying ``KG2 -> K``; ``M`` is cartesian, ``Z`` is not."""
    F = GF(2)
    G, K = grouplike(F, 2), trivial_coalgebra(F)
    e = counit_morphism(G)
    P = chain(2)
    rep = CoalgebraRep(P, {0: G, 1: K}, {(0, 1): e}, "kgk")
    M = RepObject("cis-comodule", rep, {0: regular_right(G), 1: regular_right(K)}, {(0, 1): G.eps}, "M")
    Z = zero_object("cis-comodule", rep)
    Z = RepObject("cis-comodule", rep, {0: Z.fibers[0], 1: regular_right(K)}, {(0, 1): Mat.zeros(F, 1, 0)}, "Z")
    objects = {"M": M, "Z": Z,
               "E_trans": ex("trans-comodule", rep, 1, regular_right(K)),
               "E_contra": ex("trans-contramodule", rep, 1, free_contramodule(K, 1))}
    return encode_document(F, coalgebras={"KG2": G, "K": K}, morphisms={"eps": e}, posets={"chain2": P},
                           representations={"kgk": rep}, objects=objects)


def _dp_chain() -> dict:
    """``DP(2) -> DP(3)`` on a chain with ``ex``/``coe`` objects of every coalgebra flavor."""
    F = GF(3)
    a = inclusion_dp(F, 2, 3)
    P = chain(2)
    rep = CoalgebraRep(P, {0: a.source, 1: a.target}, {(0, 1): a}, "dp")
    objects = {}
    for x in (0, 1):
        C = rep.fibers[x]
        for fl, V in (("cis-comodule", regular_right(C)), ("trans-comodule", regular_right(C)),
                      ("trans-contramodule", free_contramodule(C, 1))):
            short = fl.split("-")[0] + ("_contra" if "contra" in fl else "")
            objects[f"ex_{short}_{x}"] = ex(fl, rep, x, V)
            objects[f"coe_{short}_{x}"] = coe(fl, rep, x, V)
    objects["R_DP2"] = regular_right(a.source)
    objects["R_DP3"] = regular_right(a.target)
    objects["L_DP3"] = regular_left(a.target)
    objects["T_DP2"] = free_contramodule(a.source, 1)
    objects["T_DP3"] = free_contramodule(a.target, 1)
    return encode_document(F, coalgebras={"DP2": a.source, "DP3": a.target}, morphisms={"incl": a},
                           posets={"chain2": P}, representations={"dp": rep}, objects=objects)


def _kx_chain() -> dict:
    """Algebra chain ``K[x]/x^3 -> K[x]/x^2 -> K`` with module objects of both flavors."""
    F = GF(3)
    A3, A2 = truncated_polynomial_algebra(F, 3), truncated_polynomial_algebra(F, 2)
    A1 = truncated_polynomial_algebra(F, 1)
    q32, q21 = polynomial_quotient_morphism(F, 3, 2), polynomial_quotient_morphism(F, 2, 1)
    P = chain(3)
    rep = AlgebraRep(P, {0: A3, 1: A2, 2: A1}, {(0, 1): q32, (1, 2): q21}, "kx")
    objects = {}
    for x in (0, 1, 2):
        A = rep.fibers[x]
        for fl in ("cis-module", "trans-module"):
            short = fl.split("-")[0]
            objects[f"ex_{short}_{x}"] = ex(fl, rep, x, regular_module(A, "right"))
            objects[f"coe_{short}_{x}"] = coe(fl, rep, x, regular_module(A, "right"))
    J = Mat.from_rows(F, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    objects["jordan3"] = module_from_matrix_of_generator(A3, J, "right")
    for n, A in (("A3", A3), ("A2", A2), ("A1", A1)):
        objects[f"R_{n}"] = regular_module(A, "right")
    return encode_document(F, algebras={"A3": A3, "A2": A2, "A1": A1}, morphisms={"q32": q32, "q21": q21},
                           posets={"chain3": P}, representations={"kx": rep}, objects=objects)


def _rational() -> dict:
    """``DP(2)`` paired with ``K[x]``, plus an evaluation pairing ``KG2 x KG2*``."""
    F = QQ
    C = divided_power(F, 2)
    KX = PresentedAlgebra(F, 1, (), "K[x]")
    p = RationalPairing(C, KX, Mat.from_rows(F, [[0], [1]]), name="dp2_kx")
    J3 = Mat.from_rows(F, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    G = grouplike(F, 2)
    ev = evaluation_pairing(G)
    A = dual_algebra(G)
    N = regular_module(A, "left")
    half = Mat.from_rows(F, [["1/2", "3/7"], [0, "-2/3"]])
    return encode_document(
        F, coalgebras={"DP2": C, "KG2": G}, algebras={"K[x]": KX, "KG2*": A},
        objects={"jordan3": KX.action([J3]), "id2": KX.action([Mat.identity(F, 2)]),
                 "shift_q": KX.action([half]), "regular_KG2*": N},
        pairings={"dp2_kx": p, "eval_KG2": ev})


def _rational_rep() -> dict:
    """A rep pairing over a chain with a trans-module whose rational part is proper."""
    F = GF(3)
    C = divided_power(F, 2)
    A = truncated_polynomial_algebra(F, 3)
    Pc = chain(2)
    crep = CoalgebraRep(Pc, {0: C, 1: C}, {(0, 1): CoalgebraMorphism.identity(C)}, "crep")
    Pa = Pc.opposite()
    arep = AlgebraRep(Pa, {0: A, 1: A}, {(1, 0): AlgebraMorphism.identity(A)}, "arep")
    th = Mat.from_rows(F, [[1, 0, 0], [0, 1, 0]])
    p = RationalPairing(C, A, th, name="dp2_a3")
    RP = RepPairing(crep, arep, {0: p, 1: p})
    J = Mat.from_rows(F, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    N0 = module_from_matrix_of_generator(A, J, "left")
    N1 = module_from_matrix_of_generator(A, Mat.zeros(F, 1, 1), "left")
    N = RepObject("trans-module", arep, {0: N0, 1: N1}, {(1, 0): Mat.from_rows(F, [[0, 0, 1]])}, "N")
    return encode_document(
        F, coalgebras={"DP2": C}, algebras={"A3": A},
        morphisms={"id_DP2": crep.arrows[(0, 1)], "id_A3": arep.arrows[(1, 0)]},
        posets={"chain2": Pc, "chain2op": Pa}, representations={"crep": crep, "arep": arep},
        objects={"N": N, "jordan3": N0}, pairings={"dp2_a3": p, "rep": RP})


def _fg() -> dict:
    """Cocommutative chain ``DP(2) -> DP(3)`` with a cartesian trans-comodule ``N``."""
    F = GF(3)
    a = inclusion_dp(F, 2, 3)
    P = chain(2)
    rep = CoalgebraRep(P, {0: a.source, 1: a.target}, {(0, 1): a}, "dp")
    objects = {"N": ex("trans-comodule", rep, 1, regular_right(a.target))}
    for x in (0, 1):
        C = rep.fibers[x]
        objects[f"M_ex{x}"] = ex("trans-contramodule", rep, x, free_contramodule(C, 1))
        objects[f"M_coe{x}"] = coe("trans-contramodule", rep, x, free_contramodule(C, 1))
        objects[f"P_ex{x}"] = ex("trans-comodule", rep, x, regular_right(C))
        objects[f"P_coe{x}"] = coe("trans-comodule", rep, x, regular_right(C))
    return encode_document(F, coalgebras={"DP2": a.source, "DP3": a.target}, morphisms={"incl": a},
                           posets={"chain2": P}, representations={"dp": rep}, objects=objects)


def _v_poset() -> dict:
    """Poset ``0 < 2 > 1`` carrying ``KG2 -> K <- DP2`` (a non-chain shape)."""
    F = GF(2)
    P = FinitePoset.from_relations([0, 1, 2], [(0, 2), (1, 2)])
    G, D, K = grouplike(F, 2), divided_power(F, 2), trivial_coalgebra(F)
    e0, e1 = counit_morphism(G), counit_morphism(D)
    rep = CoalgebraRep(P, {0: G, 1: D, 2: K}, {(0, 2): e0, (1, 2): e1}, "vee")
    objects = {}
    for fl in ("cis-comodule", "trans-comodule"):
        for x in (0, 1, 2):
            objects[f"ex_{fl.split('-')[0]}_{x}"] = ex(fl, rep, x, regular_right(rep.fibers[x]))
    return encode_document(F, coalgebras={"KG2": G, "DP2": D, "K": K}, morphisms={"eps_KG2": e0, "eps_DP2": e1},
                           posets={"vee": P}, representations={"vee": rep}, objects=objects)


CORPUS: dict[str, Callable[[], dict]] = {
    "minimal_gf5": _minimal_gf5,
    "coalgebras_gf2": lambda: _coalgebras(GF(2)),
    "coalgebras_gf5": lambda: _coalgebras(GF(5)),
    "coalgebras_q": lambda: _coalgebras(QQ),
    "kg_chain": _kg_chain,
    "dp_chain": _dp_chain,
    "kx_chain": _kx_chain,
    "vee": _v_poset,
    "rational": _rational,
    "rational_rep": _rational_rep,
    "fg": _fg,
}


def corpus_names() -> list[str]:
    return sorted(CORPUS)


def build(name: str) -> dict:
    """Canonical tree of a corpus entry (built from Python, then normalized by the codec)."""
    return parse_data(CORPUS[name]()).canonical


def shipped_text(name: str) -> str:
    return resources.files("comodcalc").joinpath("corpus", f"{name}.json").read_text(encoding="utf-8")


def load(name: str) -> InstanceDocument:
    """The shipped file, falling back to building it when running from a bare checkout."""
    try:
        return parse(shipped_text(name))
    except FileNotFoundError:
        return parse_data(build(name))


def render(name: str) -> str:
    return serialize(parse_data(build(name)))
