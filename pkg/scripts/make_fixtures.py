"""Write tests/fixtures/*.json: expected reports for the documented CLI examples.

Each fixture records the argument list (input relative to the corpus
directory), the exit code and the JSON report.  Run from the repository root;
``--check`` only compares.
"""

import argparse
import json
import os
import sys
from pathlib import Path

import comodcalc
from comodcalc.cli import run
from comodcalc.corpus import corpus_names

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
CORPUS = Path(comodcalc.__file__).parent / "corpus"

EXAMPLES = {
    "check_cartesian_kg_chain_M": ["check", "cartesian", "--object", "M", "--input", "kg_chain.json"],
    "rationalize_dp2_kx_jordan3": ["rationalize", "--pairing", "dp2_kx", "--module", "jordan3",
                                   "--input", "rational.json"],
    "hull_kg_chain_M": ["hull", "--object", "M", "--at", "0", "--input", "kg_chain.json"],
    "fg_N_Mex0_Pex1": ["adjunction", "FG", "--object", "N", "--left", "M_ex0", "--right", "P_ex1",
                       "--input", "fg.json"],
    "coflat_dp2_dp3": ["check", "coflat", "--morphism", "dp2_dp3", "--input", "coalgebras_gf5.json"],
}
EXAMPLES.update({f"validate_{n}": ["validate", "--input", f"{n}.json"] for n in corpus_names()})


def produce(argv):
    cwd = os.getcwd()
    os.chdir(CORPUS)
    try:
        report, code, _ = run(argv + ["--output", "json"])
    finally:
        os.chdir(cwd)
    return {"argv": argv, "exit_code": code, "report": report}


def text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    FIXTURES.mkdir(exist_ok=True)
    stale = []
    for name, argv in sorted(EXAMPLES.items()):
        path = FIXTURES / f"{name}.json"
        new = text(produce(argv))
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != new:
                stale.append(name)
        else:
            path.write_text(new, encoding="utf-8")
    for name in stale:
        print(f"stale fixture: {name}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
