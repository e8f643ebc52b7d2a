"""Every applicable CLI invocation for a shipped corpus document, built by type matching."""

from __future__ import annotations

from comodcalc.algmod import Algebra, AlgebraMorphism, Module
from comodcalc.coalg import CoalgebraMorphism, LeftComodule, RightComodule
from comodcalc.contra import Contramodule
from comodcalc.rational import RationalPairing, RepPairing
from comodcalc.repcat import HULL_FLAVORS, is_cartesian
from comodcalc.repcat.objects import RepObject
from comodcalc.algmod import FPAlgebraAction


def _of(doc, types):
    return sorted(n for n, o in doc.objects.items() if isinstance(o, types))


def command_matrix(doc) -> list[list[str]]:
    """Argument lists without ``--input``/``--output``."""
    out = [["validate"]]
    kinds = {"coalgebra": bool(doc.coalgebras), "comodule": bool(_of(doc, (RightComodule, LeftComodule))),
             "contramodule": bool(_of(doc, (Contramodule,))), "representation": bool(doc.representations),
             "object": bool(_of(doc, (RepObject,))), "pairing": bool(doc.pairings)}
    out += [["check", k] for k, present in kinds.items() if present]
    rights, lefts, contras = _of(doc, (RightComodule,)), _of(doc, (LeftComodule,)), _of(doc, (Contramodule,))
    modules = _of(doc, (Module,))
    for m, a in sorted(doc.morphisms.items()):
        if isinstance(a, CoalgebraMorphism):
            out += [["check", "coflat", "--morphism", m, "--side", s] for s in ("left", "right")]
            out.append(["check", "sigma-injective", "--morphism", m])
            src = [n for n in rights if doc.objects[n].base == a.source]
            tgt = [n for n in rights if doc.objects[n].base == a.target]
            csrc = [n for n in contras if doc.objects[n].base == a.source]
            ctgt = [n for n in contras if doc.objects[n].base == a.target]
            for n in tgt:
                out.append(["compute", "coinduce", "--morphism", m, "--object", n])
                out.append(["compute", "cohom", "--morphism", m, "--object", n])
            for n in ctgt:
                out.append(["compute", "contraextend", "--morphism", m, "--object", n])
            out += [["adjunction", "corestrict-coinduce", "--morphism", m, "--left", x, "--right", y]
                    for x in src for y in tgt]
            out += [["adjunction", "cohom-corestrict", "--morphism", m, "--left", y, "--right", x]
                    for x in src for y in tgt]
            out += [["adjunction", "contraextend-contrarestrict", "--morphism", m, "--left", y, "--right", x]
                    for x in csrc for y in ctgt]
        elif isinstance(a, AlgebraMorphism):
            src = [n for n in modules if doc.objects[n].base == a.source and doc.objects[n].side == "right"]
            tgt = [n for n in modules if doc.objects[n].base == a.target and doc.objects[n].side == "right"]
            out += [["adjunction", "extend-restrict", "--morphism", m, "--left", x, "--right", y]
                    for x in src for y in tgt]
            out += [["adjunction", "restrict-coextend", "--morphism", m, "--left", y, "--right", x]
                    for x in src for y in tgt]
    for c in sorted(doc.coalgebras):
        C = doc.coalgebras[c]
        for r in (n for n in rights if doc.objects[n].base == C):
            out += [["compute", "cotensor", "--left", r, "--right", l] for l in lefts if doc.objects[l].base == C]
        for t in (n for n in contras if doc.objects[n].base == C):
            out += [["compute", "contratensor", "--left", t, "--right", r]
                    for r in rights if doc.objects[r].base == C]
    for a in sorted(doc.algebras):
        if isinstance(doc.algebras[a], Algebra):
            out.append(["compute", "finite-dual", "--algebra", a])
    fibers = _of(doc, (RightComodule, Contramodule, Module))
    for name in _of(doc, (RepObject,)):
        M = doc.objects[name]
        out.append(["check", "cartesian", "--object", name])
        cart = is_cartesian(M, with_hypotheses=False).cartesian
        for x in M.poset.elements:
            out.append(["generators", "--object", name, "--at", str(x)])
            if M.flavor in HULL_FLAVORS and cart:
                out.append(["hull", "--object", name, "--at", str(x)])
            for v in fibers:
                V = doc.objects[v]
                if V.base == M.rep.fibers[x] and type(V) is type(M.fibers[x]):
                    out.append(["adjunction", "ex-ev", "--left", v, "--right", name, "--at", str(x)])
                    out.append(["adjunction", "ev-coe", "--left", name, "--right", v, "--at", str(x)])
    for p, P in sorted(doc.pairings.items()):
        for n, N in sorted(doc.objects.items()):
            if isinstance(P, RepPairing) and isinstance(N, RepObject) and N.flavor == "trans-module":
                out.append(["rationalize", "--pairing", p, "--module", n])
            elif isinstance(P, RationalPairing):
                if isinstance(N, FPAlgebraAction) and not isinstance(P.algebra, Algebra):
                    out.append(["rationalize", "--pairing", p, "--module", n])
                elif isinstance(N, Module) and N.algebra == P.algebra:
                    out.append(["rationalize", "--pairing", p, "--module", n])
    if "N" in doc.objects and any(k.startswith("M_") for k in doc.objects):
        Ms = sorted(k for k in doc.objects if k.startswith("M_"))
        Ps = sorted(k for k in doc.objects if k.startswith("P_"))
        out += [["adjunction", "FG", "--object", "N", "--left", m, "--right", p] for m in Ms for p in Ps]
    return out
