"""Print one PASS/FAIL line per acceptance criterion (same checks as tests/test_acceptance.py)."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from test_acceptance import CRITERIA, evaluate, line  # noqa: E402


def main() -> int:
    failed = 0
    for n, title, fn in CRITERIA:
        t = time.perf_counter()
        ok, detail = evaluate(fn)
        failed += not ok
        print(f"{line(n, title, ok, detail)}  [{time.perf_counter() - t:.1f}s]", flush=True)
    print(f"{len(CRITERIA) - failed}/{len(CRITERIA)} criteria pass")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
