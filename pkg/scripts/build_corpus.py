"""Regenerate the shipped corpus files from the Python builders."""

from __future__ import annotations

import argparse
from pathlib import Path

from comodcalc.corpus import corpus_names, render

DEFAULT = Path(__file__).resolve().parents[1] / "src" / "comodcalc" / "corpus"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT)
    ap.add_argument("--check", action="store_true", help="fail if any shipped file is stale")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    stale = []
    for name in corpus_names():
        path = args.out / f"{name}.json"
        text = render(name)
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    if stale:
        raise SystemExit(f"stale corpus files: {', '.join(stale)}")


if __name__ == "__main__":
    main()
