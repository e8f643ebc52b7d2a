"""Command-line front end: ``comodcalc <command> --input FILE ...``.

Exit codes: 0 when every check passes, 1 when some check fails (or the input
is outside what the library computes), 2 for usage and parse errors.
Reports go to standard output; ``--output json`` is the machine form and the
text form is rendered from it, so both carry the same content.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import algmod, coalg, contra, rational
from .adjunction import AdjunctionCertificate
from .algmod import Algebra, AlgebraMorphism, FPAlgebraAction, Module
from .codec import InstanceDocument, ParseError, parse
from .coalg import Coalgebra, CoalgebraMorphism, LeftComodule, RightComodule
from .contra import Contramodule
from .exactla import Mat, Subspace
from .rational import PresentedAlgebra, RationalPairing, RepPairing
from .repcat import (
    ex_ev_adjunction,
    ev_coe_adjunction,
    cartesian_hull,
    check_object,
    check_poset,
    check_representation,
    contra_comodule_adjunction,
    generated_subobject,
    generated_subobject_formula,
    is_cartesian,
    is_subobject,
    subobject,
)
from .repcat.objects import RepObject
from .repcat.reps import AlgebraRep, CoalgebraRep
from .report import CheckReport, DimensionError, MismatchError, PreconditionError, UnsupportedInputError

__all__ = ["main", "run", "UsageError"]

COMPUTE = ("cotensor", "coinduce", "cohom", "contraextend", "contratensor", "finite-dual")
CHECK = ("coalgebra", "comodule", "contramodule", "representation", "object", "cartesian", "coflat",
         "sigma-injective", "pairing")
ADJUNCTION = ("ex-ev", "ev-coe", "corestrict-coinduce", "cohom-corestrict", "contraextend-contrarestrict",
              "FG", "extend-restrict", "restrict-coextend")


class UsageError(ValueError):
    pass


# JSON helpers -------------------------------------------------------------------

def _mat(M: Mat) -> list:
    return M.to_lists(encode=True)


def _basis(S: Subspace) -> list:
    """Basis vectors as rows (each row one vector)."""
    return _mat(S.basis.T) if S.dim else []


def _vec(F, values: Sequence) -> list:
    return [F.encode(v) for v in values]


def _report_entry(name: str, rep: CheckReport, F) -> dict:
    out: dict[str, Any] = {"name": name, "status": "pass" if rep.ok else "fail"}
    if not rep.ok:
        out["violations"] = [{"law": v.law, "witness": _vec(F, v.witness), "defect": _vec(F, v.defect)}
                             for v in rep.violations]
    return out


def _status(checks: list[dict]) -> str:
    states = {c["status"] for c in checks}
    if "fail" in states:
        return "fail"
    if "unsupported" in states:
        return "unsupported"
    return "pass"


# argument resolution -----------------------------------------------------------

def _need(args, attr: str, flag: str) -> str:
    v = getattr(args, attr, None)
    if v is None:
        raise UsageError(f"{args.command} {args.sub or ''}".strip() + f" needs {flag}")
    return v


def _get(doc: InstanceDocument, section: str, name: str, types: tuple, what: str):
    table = getattr(doc, section)
    if name not in table:
        raise UsageError(f"no {what} named {name!r}")
    obj = table[name]
    if not isinstance(obj, types):
        raise UsageError(f"{name!r} is not a {what}")
    return obj


def _element(poset, label: str):
    for e in poset.elements:
        if str(e) == label:
            return e
    raise UsageError(f"{label!r} is not an element of the poset")


def _seed(F, raw: str | None, dim: int) -> Mat:
    """``--seed`` is a JSON list of vectors; default is the first basis vector."""
    if raw is None:
        if dim == 0:
            return Mat.zeros(F, 0, 0)
        return Mat.unit(F, dim, 0)
    try:
        vecs = json.loads(raw)
    except json.JSONDecodeError:
        raise UsageError("--seed must be a JSON list of vectors") from None
    if not isinstance(vecs, list) or any(not isinstance(v, list) or len(v) != dim for v in vecs):
        raise UsageError(f"--seed vectors must have length {dim}")
    try:
        cols = [[F.decode(x) for x in v] for v in vecs]
    except ValueError as e:
        raise UsageError(f"--seed: {e}") from None
    return Mat.from_columns(F, cols, dim) if cols else Mat.zeros(F, dim, 0)


# individual checks -----------------------------------------------------------------

def _check_item(section: str, obj) -> CheckReport | None:
    if section == "coalgebras":
        return coalg.check_coalgebra(obj)
    if section == "algebras":
        return None if isinstance(obj, PresentedAlgebra) else algmod.check_algebra(obj)
    if section == "morphisms":
        if isinstance(obj, CoalgebraMorphism):
            return coalg.check_coalgebra_morphism(obj)
        return algmod.check_algebra_morphism(obj)
    if section == "posets":
        return check_poset(obj)
    if section == "representations":
        return check_representation(obj)
    if section == "objects":
        if isinstance(obj, (RightComodule, LeftComodule)):
            return coalg.check_comodule(obj)
        if isinstance(obj, Contramodule):
            return contra.check_contramodule(obj)
        if isinstance(obj, Module):
            return algmod.check_module(obj)
        if isinstance(obj, FPAlgebraAction):
            return obj.check()
        return check_object(obj)
    if section == "pairings":
        if isinstance(obj, RepPairing):
            return rational.check_rep_pairing(obj)
        return rational.check_pairing(obj)
    raise AssertionError(section)  # pragma: no cover


SECTION_ORDER = ("coalgebras", "algebras", "morphisms", "posets", "representations", "objects", "pairings")


def cmd_validate(doc: InstanceDocument, args) -> dict:
    checks = []
    for section in SECTION_ORDER:
        for name in sorted(getattr(doc, section)):
            rep = _check_item(section, getattr(doc, section)[name])
            if rep is None:
                checks.append({"name": f"{section}.{name}", "status": "pass", "note": "presented; no finite checks"})
            else:
                checks.append(_report_entry(f"{section}.{name}", rep, doc.field))
    return {"checks": checks, "counts": {s: len(getattr(doc, s)) for s in SECTION_ORDER}}


CHECK_KINDS = {
    "coalgebra": ("coalgebras", (Coalgebra,)),
    "comodule": ("objects", (RightComodule, LeftComodule)),
    "contramodule": ("objects", (Contramodule,)),
    "representation": ("representations", (CoalgebraRep, AlgebraRep)),
    "object": ("objects", (RepObject,)),
    "pairing": ("pairings", (RationalPairing, RepPairing)),
}


def cmd_check(doc: InstanceDocument, args) -> dict:
    F = doc.field
    what = args.sub
    if what in CHECK_KINDS:
        section, types = CHECK_KINDS[what]
        name = args.pairing if what == "pairing" else args.object
        if name is not None:
            names = [name]
            _get(doc, section, name, types, what)
        else:
            names = sorted(n for n, o in getattr(doc, section).items() if isinstance(o, types))
        checks = [_report_entry(f"{section}.{n}", _check_item(section, getattr(doc, section)[n]), F) for n in names]
        return {"checks": checks}
    if what == "cartesian":
        name = _need(args, "object", "--object")
        M = _get(doc, "objects", name, (RepObject,), "representation object")
        rep = is_cartesian(M)
        d = rep.as_dict()
        d["arrows"] = [dict(a, pair=[str(p) for p in a["pair"]]) for a in d["arrows"]]
        return {"checks": [{"name": f"cartesian {name}", "status": "pass" if rep.cartesian else "fail"}],
                "cartesian": d}
    name = _need(args, "morphism", "--morphism")
    a = _get(doc, "morphisms", name, (CoalgebraMorphism,), "coalgebra morphism")
    if what == "coflat":
        side = args.side or "left"
        ok = coalg.is_coflat(a, side)
        return {"checks": [{"name": f"{side} coflat {name}", "status": "pass" if ok else "fail"}]}
    ok = coalg.is_sigma_injective(a)
    return {"checks": [{"name": f"sigma-injective {name}", "status": "pass" if ok else "fail"}]}


def _comodule_json(M, F) -> dict:
    return {"dim": M.dim, "rho": _mat(M.rho)}


def cmd_compute(doc: InstanceDocument, args) -> dict:
    F = doc.field
    what = args.sub
    if what == "cotensor":
        M = _get(doc, "objects", _need(args, "left", "--left"), (RightComodule,), "right comodule")
        N = _get(doc, "objects", _need(args, "right", "--right"), (LeftComodule,), "left comodule")
        S = coalg.cotensor(M, N)
        return {"checks": [], "result": {"dim": S.dim, "basis": _basis(S), "ambient_dim": S.ambient_dim}}
    if what == "finite-dual":
        name = args.algebra or _need(args, "object", "--algebra")
        A = _get(doc, "algebras", name, (Algebra, PresentedAlgebra), "algebra")
        C = rational.finite_dual(A)
        rep = coalg.check_coalgebra(C)
        return {"checks": [_report_entry("coalgebra axioms", rep, F)],
                "result": {"dim": C.dim, "delta": _mat(C.delta), "eps": _mat(C.eps)}}
    if what == "contratensor":
        M = _get(doc, "objects", _need(args, "left", "--left"), (Contramodule,), "contramodule")
        N = _get(doc, "objects", _need(args, "right", "--right"), (RightComodule,), "right comodule")
        if N.coalgebra == M.coalgebra and not N.coalgebra.is_cocommutative():
            # the document format has no bicomodules, so the left coaction must come from flipping
            raise UnsupportedInputError("contratensor of a one-sided comodule needs a cocommutative coalgebra")
        out = contra.contratensor(M, N)
        return {"checks": [_report_entry("comodule axioms", coalg.check_comodule(out), F)],
                "result": _comodule_json(out, F)}
    a = _get(doc, "morphisms", _need(args, "morphism", "--morphism"), (CoalgebraMorphism,), "coalgebra morphism")
    obj_name = _need(args, "object", "--object")
    if what == "contraextend":
        M = _get(doc, "objects", obj_name, (Contramodule,), "contramodule")
        out = contra.contraextend(a, M)
        return {"checks": [_report_entry("contramodule axioms", contra.check_contramodule(out), F)],
                "result": {"dim": out.dim, "pi": _mat(out.pi)}}
    N = _get(doc, "objects", obj_name, (RightComodule,), "right comodule")
    out = coalg.coinduce(a, N) if what == "coinduce" else coalg.cohom(a, N)
    return {"checks": [_report_entry("comodule axioms", coalg.check_comodule(out), F)],
            "result": _comodule_json(out, F)}


def _cert(c) -> dict:
    d = c.as_dict() if isinstance(c, AdjunctionCertificate) else dict(c)
    return {"name": d.pop("adjunction"), **d}


def cmd_adjunction(doc: InstanceDocument, args) -> dict:
    what = args.sub
    left = _need(args, "left", "--left")
    right = _need(args, "right", "--right")
    if what in ("ex-ev", "ev-coe"):
        if what == "ex-ev":
            M = _get(doc, "objects", right, (RepObject,), "representation object")
            V = _get(doc, "objects", left, (RightComodule, Contramodule, Module), "fiber object")
        else:
            M = _get(doc, "objects", left, (RepObject,), "representation object")
            V = _get(doc, "objects", right, (RightComodule, Contramodule, Module), "fiber object")
        x = _element(M.poset, _need(args, "at", "--at"))
        if V.base != M.rep.fibers[x]:
            raise UsageError(f"the fiber object is not over the fiber at {x}")
        adj = ex_ev_adjunction(M.flavor, M.rep, x) if what == "ex-ev" else ev_coe_adjunction(M.flavor, M.rep, x)
        cert = adj.certify(V, M) if what == "ex-ev" else adj.certify(M, V)
        c = _cert(cert)
        return {"checks": [c]}
    if what == "FG":
        N = _get(doc, "objects", _need(args, "object", "--object"), (RepObject,), "representation object")
        M = _get(doc, "objects", left, (RepObject,), "representation object")
        P = _get(doc, "objects", right, (RepObject,), "representation object")
        adj = contra_comodule_adjunction(N)
        return {"checks": [_cert(adj.certify(M, P))]}
    m = _get(doc, "morphisms", _need(args, "morphism", "--morphism"),
             (CoalgebraMorphism, AlgebraMorphism), "morphism")
    table = {
        "corestrict-coinduce": (coalg.coinduction_adjunction, CoalgebraMorphism),
        "cohom-corestrict": (coalg.cohom_adjunction, CoalgebraMorphism),
        "contraextend-contrarestrict": (contra.contraextension_adjunction, CoalgebraMorphism),
        "extend-restrict": (algmod.extension_adjunction, AlgebraMorphism),
        "restrict-coextend": (algmod.coextension_adjunction, AlgebraMorphism),
    }
    build, kind = table[what]
    if not isinstance(m, kind):
        raise UsageError(f"{what} needs a {'coalgebra' if kind is CoalgebraMorphism else 'algebra'} morphism")
    fiber_type = {CoalgebraMorphism: RightComodule, AlgebraMorphism: Module}[kind]
    if what == "contraextend-contrarestrict":
        fiber_type = Contramodule
    X = _get(doc, "objects", left, (fiber_type,), fiber_type.__name__)
    Y = _get(doc, "objects", right, (fiber_type,), fiber_type.__name__)
    return {"checks": [_cert(build(m).certify(X, Y))]}


def _subs_json(subs: dict, poset) -> dict:
    return {str(x): {"dim": subs[x].dim, "basis": _basis(subs[x])} for x in poset.elements}


def cmd_hull(doc: InstanceDocument, args) -> dict:
    M = _get(doc, "objects", _need(args, "object", "--object"), (RepObject,), "representation object")
    x = _element(M.poset, _need(args, "at", "--at"))
    seed = _seed(M.field, args.seed, M.dim(x))
    subs = cartesian_hull(M, x, seed)
    H, _ = subobject(M, subs)
    contains = Subspace.span(M.field, M.dim(x), seed) <= subs[x] if seed.cols else True
    checks = [
        {"name": "hull is a subobject", "status": "pass" if is_subobject(M, subs) else "fail"},
        {"name": "hull is cartesian", "status": "pass" if is_cartesian(H, with_hypotheses=False).cartesian else "fail"},
        {"name": "hull contains the seed", "status": "pass" if contains else "fail"},
    ]
    return {"checks": checks, "result": {"fibers": _subs_json(subs, M.poset), "total_dim": sum(s.dim for s in subs.values())}}


def cmd_generators(doc: InstanceDocument, args) -> dict:
    M = _get(doc, "objects", _need(args, "object", "--object"), (RepObject,), "representation object")
    x = _element(M.poset, _need(args, "at", "--at"))
    seed = _seed(M.field, args.seed, M.dim(x))
    a = generated_subobject(M, x, seed)
    b = generated_subobject_formula(M, x, seed)
    agree = all(a[z] == b[z] for z in M.poset.elements)
    return {"checks": [{"name": "closure agrees with the image of the adjunct", "status": "pass" if agree else "fail"}],
            "result": {"fibers": _subs_json(a, M.poset), "total_dim": sum(s.dim for s in a.values())}}


def cmd_rationalize(doc: InstanceDocument, args) -> dict:
    F = doc.field
    pname = _need(args, "pairing", "--pairing")
    p = _get(doc, "pairings", pname, (RationalPairing, RepPairing), "pairing")
    N = doc.objects.get(_need(args, "module", "--module"))
    if N is None:
        raise UsageError(f"no object named {args.module!r}")
    if isinstance(p, RepPairing):
        if not isinstance(N, RepObject):
            raise UsageError("a representation pairing needs a trans-module object")
        pc = rational.check_rep_pairing(p)
        if not pc.ok:
            return {"checks": [_report_entry("pairing", pc, F)]}
        S, inc, subs = rational.rationalize_rep(p, N)
        return {"checks": [_report_entry("pairing", pc, F),
                           _report_entry("rational part is a subobject", check_object(S), F)],
                "result": {"fibers": _subs_json(subs, N.poset), "total_dim": sum(s.dim for s in subs.values())}}
    if not isinstance(N, (Module, FPAlgebraAction)):
        raise UsageError("--module must name a module")
    pc = rational.check_pairing(p)
    if not pc.ok:
        return {"checks": [_report_entry("pairing", pc, F)]}
    w = rational.torsion_witness(p, N)
    R = w["rational"]
    return {
        "checks": [_report_entry("pairing", pc, F),
                   _report_entry("rational part is a comodule", coalg.check_comodule(R.comodule), F)],
        "result": {
            "dim_N": w["dim_N"],
            "dim_R": w["dim_R"],
            "basis_R": _basis(R.subspace),
            "rho_R": _mat(R.comodule.rho),
            "dim_quotient": w["dim_quotient"],
            "dim_R_quotient": w["dim_R_quotient"],
            "quotient_rational_part_vanishes": w["quotient_rational_part_vanishes"],
        },
    }


COMMANDS = {
    "validate": cmd_validate,
    "compute": cmd_compute,
    "check": cmd_check,
    "adjunction": cmd_adjunction,
    "hull": cmd_hull,
    "generators": cmd_generators,
    "rationalize": cmd_rationalize,
}


# parser / rendering --------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, metavar="FILE", help="instance document (JSON); '-' for stdin")
    p.add_argument("--output", choices=("json", "text"), default="text")
    for flag, help_ in (("--at", "poset element"), ("--object", "object name"), ("--pairing", "pairing name"),
                        ("--left", "left argument"), ("--right", "right argument"),
                        ("--morphism", "morphism name"), ("--module", "module name"),
                        ("--algebra", "algebra name"), ("--seed", "JSON list of seed vectors")):
        p.add_argument(flag, help=help_)
    p.add_argument("--side", choices=("left", "right"), help="coflatness side")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="comodcalc", description="Exact comodule/contramodule/module calculator.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("validate", "hull", "rationalize", "generators"):
        _common(subs.add_parser(name))
        subs.choices[name].set_defaults(sub=None)
    for name, choices in (("compute", COMPUTE), ("check", CHECK), ("adjunction", ADJUNCTION)):
        p = subs.add_parser(name)
        p.add_argument("sub", choices=choices)
        _common(p)
    return parser


def _echo(args) -> dict:
    out = {"command": args.command}
    if args.sub:
        out["sub"] = args.sub
    for k in ("input", "at", "object", "pairing", "left", "right", "morphism", "module", "algebra", "seed", "side"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = v
    return out


def render_text(report: dict) -> str:
    lines = []
    echo = report["command"]
    lines.append("command: " + " ".join([echo["command"]] + ([echo["sub"]] if "sub" in echo else [])
                                       + [f"--{k} {v}" for k, v in echo.items() if k not in ("command", "sub")]))
    lines.append(f"status: {report['status']}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    for c in report.get("checks", []):
        lines.append(f"[{c['status']}] {c['name']}")
        for k in sorted(c):
            if k not in ("name", "status"):
                lines.append(f"    {k}: {json.dumps(c[k], sort_keys=True)}")
    for key in sorted(report):
        if key in ("command", "status", "checks", "error"):
            continue
        lines.append(f"{key}: {json.dumps(report[key], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return render_text(report)


def run(argv: Sequence[str]) -> tuple[dict, int, str]:
    """Parse ``argv``, execute, return ``(report, exit code, output format)``."""
    fmt = "text"
    try:
        args = build_parser().parse_args(list(argv))
        fmt = args.output
        echo = _echo(args)
    except UsageError as e:
        return {"command": {"command": " ".join(argv)}, "status": "error", "error": f"usage: {e}"}, 2, fmt
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        return {"command": echo, "status": "error", "error": f"cannot read input: {e.strerror}"}, 2, fmt
    try:
        doc = parse(text)
    except ParseError as e:
        return {"command": echo, "status": "error", "error": f"parse error at {e.path}: {e.reason}"}, 2, fmt
    try:
        body = COMMANDS[args.command](doc, args)
    except UsageError as e:
        return {"command": echo, "status": "error", "error": f"usage: {e}"}, 2, fmt
    except (UnsupportedInputError, PreconditionError) as e:
        kind = "unsupported" if isinstance(e, UnsupportedInputError) else "precondition"
        body = {"checks": [{"name": kind, "status": "unsupported", "reason": str(e)}]}
    except (MismatchError, DimensionError) as e:
        return {"command": echo, "status": "error", "error": f"usage: {e}"}, 2, fmt
    report = {"command": echo, **body}
    report["status"] = _status(body.get("checks", []))
    return report, (0 if report["status"] == "pass" else 1), fmt


def main(argv: Sequence[str] | None = None) -> int:
    report, code, fmt = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(render(report, fmt))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
