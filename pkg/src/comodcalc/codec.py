"""JSON instance documents: parsing, canonical form and serialization.

Every parsed document keeps a canonical JSON tree (exact values re-encoded,
references resolved, zero-dimensional shapes explicit) next to the live
objects, so ``serialize(parse(text))`` is a fixed point of the codec.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .algmod import Algebra, AlgebraMorphism, FPAlgebraAction, Module
from .coalg import Coalgebra, CoalgebraMorphism, LeftComodule, RightComodule
from .contra import Contramodule
from .exactla import ExactField, Mat
from .rational import PresentedAlgebra, RationalPairing, RepPairing
from .repcat.objects import FLAVORS, RepObject
from .repcat.poset import FinitePoset
from .repcat.reps import AlgebraRep, CoalgebraRep

__all__ = ["ParseError", "InstanceDocument", "parse", "parse_data", "serialize", "encode_document"]

SECTIONS = ("coalgebras", "algebras", "morphisms", "posets", "representations", "objects", "pairings")
FIBER_FLAVORS = ("right-comodule", "left-comodule", "contramodule", "module")


class ParseError(ValueError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


@dataclass
class InstanceDocument:
    field: ExactField
    coalgebras: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    posets: dict = field(default_factory=dict)
    representations: dict = field(default_factory=dict)
    objects: dict = field(default_factory=dict)
    pairings: dict = field(default_factory=dict)
    canonical: dict = field(default_factory=dict)

    def lookup(self, section: str, name: str, path: str = "") -> Any:
        table = getattr(self, section)
        if name not in table:
            raise ParseError(path or f"{section}.{name}", f"no {section[:-1]} named {name!r}")
        return table[name]

    def find(self, name: str) -> tuple[str, Any]:
        """Any named item, searching the sections in order."""
        for s in SECTIONS:
            table = getattr(self, s)
            if name in table:
                return s, table[name]
        raise ParseError(name, "no item with this name")


# matrices ----------------------------------------------------------------------

def _decode_matrix(F: ExactField, data, path: str, rows: int | None = None, cols: int | None = None) -> Mat:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise ParseError(path, "a matrix must be an array of rows")
    r = len(data)
    widths = {len(row) for row in data}
    if len(widths) > 1:
        raise ParseError(path, "rows of different lengths")
    c = widths.pop() if widths else (cols if cols is not None else 0)
    if rows is not None and r != rows:
        if not (r == 0 and rows == 0):
            raise ParseError(path, f"shape mismatch: expected {rows} rows, got {r}")
    if cols is not None and r and c != cols:
        raise ParseError(path, f"shape mismatch: expected {cols} columns, got {c}")
    if r == 0:
        return Mat.zeros(F, rows or 0, cols or 0)
    try:
        vals = [[F.decode(v) for v in row] for row in data]
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(path, str(e)) from None
    return Mat(F, r, c, vals)


def _enc(M: Mat) -> list:
    return M.to_lists(encode=True)


def _need(d: Mapping, key: str, path: str):
    if not isinstance(d, Mapping):
        raise ParseError(path, "expected an object")
    if key not in d:
        raise ParseError(f"{path}.{key}", "missing field")
    return d[key]


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ParseError(path, "expected a nonnegative integer")
    return v


# field -----------------------------------------------------------------------------

def _parse_field(spec, path="field") -> tuple[ExactField, dict]:
    kind = _need(spec, "kind", path)
    if kind == "q":
        return ExactField(None), {"kind": "q"}
    if kind == "gf":
        p = _int(_need(spec, "p", path), f"{path}.p")
        try:
            F = ExactField(p)
        except ValueError:
            raise ParseError(f"{path}.p", f"{p} is not prime") from None
        return F, {"kind": "gf", "p": p}
    raise ParseError(f"{path}.kind", f"unknown field kind {kind!r}")


# element labels ---------------------------------------------------------------

def _label_map(P: FinitePoset) -> dict[str, Any]:
    return {str(e): e for e in P.elements}


def _pair_key(x, y) -> str:
    return f"{x}<{y}"


def _parse_pair(key: str, labels: Mapping[str, Any], path: str) -> tuple:
    parts = key.split("<")
    if len(parts) != 2 or parts[0] not in labels or parts[1] not in labels:
        raise ParseError(path, f"bad relation key {key!r} (expected 'x<y' with poset elements)")
    return labels[parts[0]], labels[parts[1]]


# fiber objects --------------------------------------------------------------------

def _parse_fiber(F, kind: str, base, spec, path: str):
    """Fiber object of the given kind over ``base`` (a coalgebra or algebra)."""
    if kind in ("right-comodule", "left-comodule"):
        rho = _need(spec, "rho", path)
        dim = spec.get("dim")
        if dim is None:
            dim = len(rho[0]) if rho else 0
        dim = _int(dim, f"{path}.dim")
        R = _decode_matrix(F, rho, f"{path}.rho", dim * base.dim, dim)
        obj = RightComodule(base, R) if kind == "right-comodule" else LeftComodule(base, R)
        return obj, {"dim": dim, "rho": _enc(R)}
    if kind == "contramodule":
        pi = _need(spec, "pi", path)
        dim = spec.get("dim")
        if dim is None:
            dim = len(pi)
        dim = _int(dim, f"{path}.dim")
        P = _decode_matrix(F, pi, f"{path}.pi", dim, dim * base.dim)
        return Contramodule(base, P), {"dim": dim, "pi": _enc(P)}
    if isinstance(base, PresentedAlgebra):
        gens = _need(spec, "generators", path)
        if not isinstance(gens, list) or len(gens) != base.generator_count:
            raise ParseError(f"{path}.generators", f"expected {base.generator_count} matrices")
        dim = spec.get("dim")
        if dim is None:
            dim = len(gens[0]) if gens else 0
        dim = _int(dim, f"{path}.dim")
        mats = [_decode_matrix(F, g, f"{path}.generators[{i}]", dim, dim) for i, g in enumerate(gens)]
        return FPAlgebraAction(F, base.generator_count, tuple(mats), tuple(base.relations), dim), \
            {"dim": dim, "generators": [_enc(m) for m in mats]}
    ops = _need(spec, "ops", path)
    side = spec.get("side", "right")
    if side not in ("left", "right"):
        raise ParseError(f"{path}.side", "side must be 'left' or 'right'")
    if not isinstance(ops, list) or len(ops) != base.dim:
        raise ParseError(f"{path}.ops", f"expected {base.dim} operator matrices")
    dim = spec.get("dim")
    if dim is None:
        dim = len(ops[0]) if ops else 0
    dim = _int(dim, f"{path}.dim")
    mats = [_decode_matrix(F, o, f"{path}.ops[{i}]", dim, dim) for i, o in enumerate(ops)]
    return Module(base, tuple(mats), side, dim), {"dim": dim, "side": side, "ops": [_enc(m) for m in mats]}


def _fiber_kind(flavor: str) -> str:
    if flavor in ("cis-comodule", "trans-comodule"):
        return "right-comodule"
    if flavor == "trans-contramodule":
        return "contramodule"
    return "module"


# parse ----------------------------------------------------------------------------

def parse(text: str) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("$", f"invalid JSON: {e.msg} at line {e.lineno}") from None
    return parse_data(data)


def parse_data(data) -> InstanceDocument:
    if not isinstance(data, dict):
        raise ParseError("$", "the document must be a JSON object")
    for k in data:
        if k != "field" and k not in SECTIONS:
            raise ParseError(k, "unknown top-level section")
    F, fcan = _parse_field(_need(data, "field", "$"))
    doc = InstanceDocument(F)
    can: dict = {"field": fcan}
    for s in SECTIONS:
        can[s] = {}
        if s in data and not isinstance(data[s], dict):
            raise ParseError(s, "expected an object keyed by name")

    for name, spec in data.get("coalgebras", {}).items():
        p = f"coalgebras.{name}"
        d = _int(_need(spec, "dim", p), f"{p}.dim")
        delta = _decode_matrix(F, _need(spec, "delta", p), f"{p}.delta", d * d, d)
        eps = _decode_matrix(F, _need(spec, "eps", p), f"{p}.eps", 1, d)
        doc.coalgebras[name] = Coalgebra(F, d, delta, eps, name)
        can["coalgebras"][name] = {"dim": d, "delta": _enc(delta), "eps": _enc(eps)}

    for name, spec in data.get("algebras", {}).items():
        p = f"algebras.{name}"
        if isinstance(spec, dict) and "generators" in spec:
            g = _int(spec["generators"], f"{p}.generators")
            rels = []
            for k, rel in enumerate(spec.get("relations", [])):
                terms = []
                for t, term in enumerate(rel):
                    tp = f"{p}.relations[{k}][{t}]"
                    if not isinstance(term, list) or len(term) != 2 or not isinstance(term[1], list):
                        raise ParseError(tp, "a term is [coefficient, [generator indices]]")
                    try:
                        c = F.decode(term[0])
                    except ValueError as e:
                        raise ParseError(tp, str(e)) from None
                    w = tuple(_int(i, tp) for i in term[1])
                    if any(i >= g for i in w):
                        raise ParseError(tp, "generator index out of range")
                    terms.append((c, w))
                rels.append(tuple(terms))
            doc.algebras[name] = PresentedAlgebra(F, g, tuple(rels), name)
            can["algebras"][name] = {"generators": g,
                                     "relations": [[[F.encode(c), list(w)] for c, w in r] for r in rels]}
            continue
        d = _int(_need(spec, "dim", p), f"{p}.dim")
        mult = _decode_matrix(F, _need(spec, "mult", p), f"{p}.mult", d, d * d)
        unit = _decode_matrix(F, _need(spec, "unit", p), f"{p}.unit", d, 1)
        doc.algebras[name] = Algebra(F, d, mult, unit, name)
        can["algebras"][name] = {"dim": d, "mult": _enc(mult), "unit": _enc(unit)}

    for name, spec in data.get("morphisms", {}).items():
        p = f"morphisms.{name}"
        kind = _need(spec, "kind", p)
        if kind not in ("coalgebra", "algebra"):
            raise ParseError(f"{p}.kind", f"unknown morphism kind {kind!r}")
        sec = "coalgebras" if kind == "coalgebra" else "algebras"
        src = doc.lookup(sec, _need(spec, "source", p), f"{p}.source")
        tgt = doc.lookup(sec, _need(spec, "target", p), f"{p}.target")
        if isinstance(src, PresentedAlgebra) or isinstance(tgt, PresentedAlgebra):
            raise ParseError(p, "morphisms between presented algebras are not supported")
        M = _decode_matrix(F, _need(spec, "matrix", p), f"{p}.matrix", tgt.dim, src.dim)
        cls = CoalgebraMorphism if kind == "coalgebra" else AlgebraMorphism
        doc.morphisms[name] = cls(src, tgt, M, name)
        can["morphisms"][name] = {"kind": kind, "source": spec["source"], "target": spec["target"],
                                  "matrix": _enc(M)}

    for name, spec in data.get("posets", {}).items():
        p = f"posets.{name}"
        els = _need(spec, "elements", p)
        if not isinstance(els, list) or any(not isinstance(e, (str, int)) or isinstance(e, bool) for e in els):
            raise ParseError(f"{p}.elements", "elements must be strings or integers")
        if any("<" in str(e) for e in els) or len({str(e) for e in els}) != len(els):
            raise ParseError(f"{p}.elements", "labels must be distinct and must not contain '<'")
        leq = _need(spec, "leq", p)
        if (not isinstance(leq, list) or len(leq) != len(els)
                or any(not isinstance(r, list) or len(r) != len(els) for r in leq)):
            raise ParseError(f"{p}.leq", "shape mismatch with the element list")
        P = FinitePoset(els, [[bool(v) for v in r] for r in leq])
        from .repcat.poset import check_poset
        rep = check_poset(P)
        if not rep.ok:
            raise ParseError(f"{p}.leq", f"not a partial order ({rep.violations[0].law})")
        doc.posets[name] = P
        can["posets"][name] = {"elements": list(els), "leq": [[int(bool(v)) for v in r] for r in leq]}

    for name, spec in data.get("representations", {}).items():
        p = f"representations.{name}"
        kind = _need(spec, "kind", p)
        if kind not in ("coalgebra", "algebra"):
            raise ParseError(f"{p}.kind", f"unknown representation kind {kind!r}")
        P = doc.lookup("posets", _need(spec, "poset", p), f"{p}.poset")
        labels = _label_map(P)
        sec = "coalgebras" if kind == "coalgebra" else "algebras"
        fib_spec = _need(spec, "fibers", p)
        fibers, fcan = {}, {}
        for key in labels:
            if key not in fib_spec:
                raise ParseError(f"{p}.fibers", f"missing fiber at {key}")
            fibers[labels[key]] = doc.lookup(sec, fib_spec[key], f"{p}.fibers.{key}")
            fcan[key] = fib_spec[key]
        arrows, acan = {}, {}
        for key, mname in _need(spec, "arrows", p).items():
            x, y = _parse_pair(key, labels, f"{p}.arrows.{key}")
            m = doc.lookup("morphisms", mname, f"{p}.arrows.{key}")
            arrows[(x, y)] = m
            acan[key] = mname
        cls = CoalgebraRep if kind == "coalgebra" else AlgebraRep
        try:
            doc.representations[name] = cls(P, fibers, arrows, name)
        except ValueError as e:
            raise ParseError(p, str(e)) from None
        can["representations"][name] = {"kind": kind, "poset": spec["poset"], "fibers": fcan, "arrows": acan}

    # fiber-level objects first so rep objects may reference them
    obj_specs = data.get("objects", {})
    for name, spec in obj_specs.items():
        p = f"objects.{name}"
        flavor = _need(spec, "flavor", p)
        if flavor in FIBER_FLAVORS:
            if flavor == "module":
                base = doc.lookup("algebras", _need(spec, "algebra", p), f"{p}.algebra")
                key = "algebra"
            else:
                base = doc.lookup("coalgebras", _need(spec, "coalgebra", p), f"{p}.coalgebra")
                key = "coalgebra"
            try:
                obj, c = _parse_fiber(F, flavor, base, spec, p)
            except ParseError:
                raise
            except ValueError as e:
                raise ParseError(p, str(e)) from None
            doc.objects[name] = obj
            can["objects"][name] = {"flavor": flavor, key: spec[key], **c}
        elif flavor not in FLAVORS:
            raise ParseError(f"{p}.flavor", f"unknown flavor {flavor!r}")
    for name, spec in obj_specs.items():
        p = f"objects.{name}"
        flavor = spec["flavor"]
        if flavor in FIBER_FLAVORS:
            continue
        rep = doc.lookup("representations", _need(spec, "rep", p), f"{p}.rep")
        labels = _label_map(rep.poset)
        kind = _fiber_kind(flavor)
        fib_spec = _need(spec, "fibers", p)
        fibers, fcan = {}, {}
        for key in labels:
            if key not in fib_spec:
                raise ParseError(f"{p}.fibers", f"missing fiber at {key}")
            fs = fib_spec[key]
            base = rep.fibers[labels[key]]
            if isinstance(fs, str):
                obj = doc.lookup("objects", fs, f"{p}.fibers.{key}")
                if getattr(obj, "base", None) != base:
                    raise ParseError(f"{p}.fibers.{key}", "referenced object is over a different base")
                _, c = _parse_fiber(F, kind, base, can["objects"][fs], f"{p}.fibers.{key}")
            else:
                obj, c = _parse_fiber(F, kind, base, fs, f"{p}.fibers.{key}")
            fibers[labels[key]] = obj
            fcan[key] = c
        maps, mcan = {}, {}
        fwd = flavor in ("cis-comodule", "cis-module")
        for key, mat in _need(spec, "structure", p).items():
            x, y = _parse_pair(key, labels, f"{p}.structure.{key}")
            s, t = (x, y) if fwd else (y, x)
            M = _decode_matrix(F, mat, f"{p}.structure.{key}", fibers[t].dim, fibers[s].dim)
            maps[(x, y)] = M
            mcan[key] = _enc(M)
        try:
            doc.objects[name] = RepObject(flavor, rep, fibers, maps, name)
        except ValueError as e:
            raise ParseError(p, str(e)) from None
        can["objects"][name] = {"flavor": flavor, "rep": spec["rep"], "fibers": fcan, "structure": mcan}

    for name, spec in data.get("pairings", {}).items():
        p = f"pairings.{name}"
        if isinstance(spec, dict) and spec.get("kind") == "rep":
            crep = doc.lookup("representations", _need(spec, "crep", p), f"{p}.crep")
            arep = doc.lookup("representations", _need(spec, "arep", p), f"{p}.arep")
            labels = _label_map(crep.poset)
            ps, pcan = {}, {}
            for key in labels:
                ref = _need(_need(spec, "pairings", p), key, f"{p}.pairings")
                ps[labels[key]] = doc.lookup("pairings", ref, f"{p}.pairings.{key}")
                pcan[key] = ref
            try:
                doc.pairings[name] = RepPairing(crep, arep, ps)
            except ValueError as e:
                raise ParseError(p, str(e)) from None
            can["pairings"][name] = {"kind": "rep", "crep": spec["crep"], "arep": spec["arep"], "pairings": pcan}
            continue
        C = doc.lookup("coalgebras", _need(spec, "coalgebra", p), f"{p}.coalgebra")
        A = doc.lookup("algebras", _need(spec, "algebra", p), f"{p}.algebra")
        cols = A.generator_count if isinstance(A, PresentedAlgebra) else A.dim
        if "theta" in spec:
            theta = _decode_matrix(F, spec["theta"], f"{p}.theta", C.dim, cols)
        elif "phi" in spec and not isinstance(A, PresentedAlgebra):
            phi = _decode_matrix(F, spec["phi"], f"{p}.phi", 1, C.dim * cols)
            theta = Mat(F, C.dim, cols, [[phi[0, i * cols + j] for j in range(cols)] for i in range(C.dim)])
        else:
            raise ParseError(p, "a pairing needs 'theta' (or 'phi' for a finite-dimensional algebra)")
        words, wcan = {}, {}
        for wkey, col in spec.get("words", {}).items():
            wp = f"{p}.words.{wkey}"
            try:
                w = tuple(int(t) for t in wkey.split(",")) if wkey else ()
            except ValueError:
                raise ParseError(wp, "word keys are comma-separated generator indices") from None
            words[w] = _decode_matrix(F, col, wp, C.dim, 1)
            wcan[",".join(map(str, w))] = _enc(words[w])
        doc.pairings[name] = RationalPairing(C, A, theta, words, name)
        entry = {"coalgebra": spec["coalgebra"], "algebra": spec["algebra"], "theta": _enc(theta)}
        if wcan:
            entry["words"] = wcan
        can["pairings"][name] = entry

    doc.canonical = can
    return doc


def serialize(doc: InstanceDocument) -> str:
    return json.dumps(doc.canonical, indent=2, sort_keys=True) + "\n"


# encoding live objects ---------------------------------------------------------------

def _name_of(table: Mapping[str, Any], obj, what: str) -> str:
    for k, v in table.items():
        if v is obj:
            return k
    for k, v in table.items():
        if type(v) is type(obj) and v == obj:
            return k
    raise KeyError(f"{what} {obj!r} is not registered in the document")


def _fiber_entry(F, kind: str, obj) -> dict:
    if kind in ("right-comodule", "left-comodule"):
        return {"dim": obj.dim, "rho": _enc(obj.rho)}
    if kind == "contramodule":
        return {"dim": obj.dim, "pi": _enc(obj.pi)}
    if isinstance(obj, FPAlgebraAction):
        return {"dim": obj.dim, "generators": [_enc(g) for g in obj.generators]}
    return {"dim": obj.dim, "side": obj.side, "ops": [_enc(m) for m in obj.ops]}


def encode_document(F: ExactField, coalgebras=None, algebras=None, morphisms=None, posets=None,
                    representations=None, objects=None, pairings=None) -> dict:
    """Canonical JSON tree for named live objects (references found by identity or equality)."""
    coalgebras = dict(coalgebras or {})
    algebras = dict(algebras or {})
    morphisms = dict(morphisms or {})
    posets = dict(posets or {})
    representations = dict(representations or {})
    objects = dict(objects or {})
    pairings = dict(pairings or {})
    out: dict = {"field": {"kind": "q"} if F.p is None else {"kind": "gf", "p": F.p}}
    out["coalgebras"] = {n: {"dim": C.dim, "delta": _enc(C.delta), "eps": _enc(C.eps)} for n, C in coalgebras.items()}
    out["algebras"] = {}
    for n, A in algebras.items():
        if isinstance(A, PresentedAlgebra):
            out["algebras"][n] = {"generators": A.generator_count,
                                  "relations": [[[F.encode(c), list(w)] for c, w in r] for r in A.relations]}
        else:
            out["algebras"][n] = {"dim": A.dim, "mult": _enc(A.mult), "unit": _enc(A.unit)}
    out["morphisms"] = {}
    for n, m in morphisms.items():
        if isinstance(m, CoalgebraMorphism):
            kind, table = "coalgebra", coalgebras
        else:
            kind, table = "algebra", algebras
        out["morphisms"][n] = {"kind": kind, "source": _name_of(table, m.source, "source"),
                               "target": _name_of(table, m.target, "target"), "matrix": _enc(m.map)}
    out["posets"] = {n: {"elements": list(P.elements), "leq": [[int(v) for v in r] for r in P.leq]}
                     for n, P in posets.items()}
    out["representations"] = {}
    for n, R in representations.items():
        co = isinstance(R, CoalgebraRep)
        table = coalgebras if co else algebras
        out["representations"][n] = {
            "kind": "coalgebra" if co else "algebra",
            "poset": _name_of(posets, R.poset, "poset"),
            "fibers": {str(x): _name_of(table, R.fibers[x], "fiber") for x in R.poset.elements},
            "arrows": {_pair_key(x, y): _name_of(morphisms, a, "arrow") for (x, y), a in R.arrows.items()},
        }
    out["objects"] = {}
    for n, o in objects.items():
        if isinstance(o, RepObject):
            kind = _fiber_kind(o.flavor)
            out["objects"][n] = {
                "flavor": o.flavor,
                "rep": _name_of(representations, o.rep, "representation"),
                "fibers": {str(x): _fiber_entry(F, kind, o.fibers[x]) for x in o.poset.elements},
                "structure": {_pair_key(x, y): _enc(m) for (x, y), m in o.maps.items()},
            }
        elif isinstance(o, (RightComodule, LeftComodule)):
            kind = "right-comodule" if isinstance(o, RightComodule) else "left-comodule"
            out["objects"][n] = {"flavor": kind, "coalgebra": _name_of(coalgebras, o.coalgebra, "coalgebra"),
                                 **_fiber_entry(F, kind, o)}
        elif isinstance(o, Contramodule):
            out["objects"][n] = {"flavor": "contramodule", "coalgebra": _name_of(coalgebras, o.coalgebra, "coalgebra"),
                                 **_fiber_entry(F, "contramodule", o)}
        elif isinstance(o, FPAlgebraAction):
            alg = next(k for k, v in algebras.items() if isinstance(v, PresentedAlgebra)
                       and v.generator_count == o.generator_count and tuple(v.relations) == tuple(o.relations))
            out["objects"][n] = {"flavor": "module", "algebra": alg, **_fiber_entry(F, "module", o)}
        else:
            out["objects"][n] = {"flavor": "module", "algebra": _name_of(algebras, o.algebra, "algebra"),
                                 **_fiber_entry(F, "module", o)}
    out["pairings"] = {}
    for n, p in pairings.items():
        if isinstance(p, RepPairing):
            out["pairings"][n] = {"kind": "rep", "crep": _name_of(representations, p.crep, "representation"),
                                  "arep": _name_of(representations, p.arep, "representation"),
                                  "pairings": {str(x): _name_of(pairings, q, "pairing")
                                               for x, q in p.pairings.items()}}
        else:
            e = {"coalgebra": _name_of(coalgebras, p.coalgebra, "coalgebra"),
                 "algebra": _name_of(algebras, p.algebra, "algebra"), "theta": _enc(p.theta)}
            if p.words:
                e["words"] = {",".join(map(str, w)): _enc(v) for w, v in sorted(p.words.items())}
            out["pairings"][n] = e
    return out
