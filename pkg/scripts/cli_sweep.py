"""Run every applicable CLI command on every corpus file, repeatedly, and compare the bytes.

Prints one row per corpus file: commands run, status counts, exit codes and
whether all repetitions produced identical JSON and text reports.
"""

from __future__ import annotations

import argparse
import collections
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import comodcalc  # noqa: E402
from comodcalc.cli import render, run  # noqa: E402
from comodcalc.corpus import corpus_names, load  # noqa: E402
from commands import command_matrix  # noqa: E402

CORPUS = Path(comodcalc.__file__).parent / "corpus"


@dataclass
class SweepConfig:
    files: list[str] = field(default_factory=corpus_names)
    repeats: int = 2
    json_out: Path | None = None


def sweep_file(name: str, repeats: int) -> dict:
    statuses, codes = collections.Counter(), collections.Counter()
    identical = True
    cmds = command_matrix(load(name))
    t = time.perf_counter()
    for argv in cmds:
        full = argv + ["--input", str(CORPUS / f"{name}.json"), "--output", "json"]
        outs = set()
        for _ in range(repeats):
            report, code, _ = run(full)
            outs.add((render(report, "json"), render(report, "text"), code))
        identical &= len(outs) == 1
        statuses[report["status"]] += 1
        codes[code] += 1
    return {"file": name, "commands": len(cmds), "status": dict(sorted(statuses.items())),
            "exit_codes": {str(k): v for k, v in sorted(codes.items())}, "identical": identical,
            "seconds": round(time.perf_counter() - t, 2)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--files", nargs="*", default=None)
    ap.add_argument("--repeats", type=int, default=2)
    ap.add_argument("--json-out", type=Path)
    a = ap.parse_args()
    cfg = SweepConfig(a.files or corpus_names(), a.repeats, a.json_out)
    rows = [sweep_file(n, cfg.repeats) for n in cfg.files]
    print(f"{'file':<16}{'cmds':>6}  {'status':<46}{'exit':<22}identical")
    for r in rows:
        print(f"{r['file']:<16}{r['commands']:>6}  {json.dumps(r['status']):<46}"
              f"{json.dumps(r['exit_codes']):<22}{r['identical']}")
    if cfg.json_out:
        cfg.json_out.write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")
    bad = [r["file"] for r in rows if not r["identical"] or "2" in r["exit_codes"]]
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
