"""Adjunction certificates over the instance families, summarized per family and field.

For each adjoint pair this reports how many triples were certified, how many
passed, and the distribution of hom dimensions (a pass on all-zero homs says
little, so the nonzero count is listed separately).
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from comodcalc.algmod import coextension_adjunction, extension_adjunction  # noqa: E402
from comodcalc.coalg import cohom_adjunction, coinduction_adjunction  # noqa: E402
from comodcalc.contra import contraextension_adjunction  # noqa: E402
from comodcalc.exactla import GF, QQ  # noqa: E402
from comodcalc.repcat import ev_coe_adjunction, ex_ev_adjunction  # noqa: E402
from instances import (  # noqa: E402
    FLAVORS, adjunction_triples, algebra_triples, contra_triples, ex_ev_triples,
)


@dataclass
class CertificateSweep:
    fields: list[str] = field(default_factory=lambda: ["2", "3", "q"])
    fiber_max_total: int = 12
    rep_max_total: int = 8
    flavors: list[str] = field(default_factory=lambda: list(FLAVORS))


def field_of(s: str):
    return QQ if s == "q" else GF(int(s))


def families(cfg: CertificateSweep, F):
    yield "corestrict -| coinduce", ((coinduction_adjunction(a), X, Y)
                                     for a, X, Y in adjunction_triples(F, cfg.fiber_max_total))
    yield "cohom -| corestrict", ((cohom_adjunction(a), Y, X)
                                  for a, X, Y in adjunction_triples(F, cfg.fiber_max_total))
    yield "contraextend -| contrarestrict", ((contraextension_adjunction(a), X, Y)
                                             for a, X, Y in contra_triples(F, cfg.fiber_max_total))
    yield "extend -| restrict", ((extension_adjunction(a), X, Y) for a, X, Y in algebra_triples(F))
    yield "restrict -| coextend", ((coextension_adjunction(a), Y, X) for a, X, Y in algebra_triples(F))
    for fl in cfg.flavors:
        yield f"ex -| ev ({fl})", ((ex_ev_adjunction(fl, rep, x), V, M)
                                   for rep, x, V, M in ex_ev_triples(fl, F, cfg.rep_max_total))
        yield f"ev -| coe ({fl})", ((ev_coe_adjunction(fl, rep, x), M, V)
                                    for rep, x, V, M in ex_ev_triples(fl, F, cfg.rep_max_total))


def run_sweep(cfg: CertificateSweep) -> list[dict]:
    rows = []
    for fs in cfg.fields:
        F = field_of(fs)
        for name, triples in families(cfg, F):
            t = time.perf_counter()
            dims, ok = [], 0
            for adj, X, Y in triples:
                c = adj.certify(X, Y)
                ok += c.ok
                dims.append(c.hom_left)
            rows.append({"field": str(F), "family": name, "triples": len(dims), "pass": ok,
                         "nonzero_hom": sum(d > 0 for d in dims), "max_hom": max(dims, default=0),
                         "mean_hom": round(statistics.fmean(dims), 2) if dims else 0.0,
                         "seconds": round(time.perf_counter() - t, 2)})
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="*", default=["2", "3", "q"], help="primes or 'q'")
    ap.add_argument("--fiber-max-total", type=int, default=12)
    ap.add_argument("--rep-max-total", type=int, default=8)
    ap.add_argument("--json-out", type=Path)
    a = ap.parse_args()
    cfg = CertificateSweep(a.fields, a.fiber_max_total, a.rep_max_total)
    rows = run_sweep(cfg)
    print(f"{'field':<7}{'family':<42}{'triples':>8}{'pass':>6}{'nonzero':>9}{'max':>5}{'mean':>7}")
    for r in rows:
        print(f"{r['field']:<7}{r['family']:<42}{r['triples']:>8}{r['pass']:>6}{r['nonzero_hom']:>9}"
              f"{r['max_hom']:>5}{r['mean_hom']:>7}")
    if a.json_out:
        a.json_out.write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2) + "\n", encoding="utf-8")
    return 0 if all(r["pass"] == r["triples"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
