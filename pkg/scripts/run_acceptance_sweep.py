#!/usr/bin/env python3
"""Produce the full acceptance artifacts under reports/.

Runs the lemma suites at acceptance scale (7-edge catalogue, 50 completeness
instances) and two deterministic sweeps, then prints where everything landed.
"""

import pathlib
import sys

from medcover.cli import main as cli


def main() -> int:
    reports = pathlib.Path(__file__).resolve().parent.parent / "reports"
    reports.mkdir(exist_ok=True)

    rc = cli([
        "verify-lemmas", "--max-edges", "7", "--trials", "50",
        "--out", str(reports / "lemmas.json"),
    ])
    if rc != 0:
        print("lemma suites FAILED; see reports/lemmas.json", file=sys.stderr)
        return rc

    for name, n, d in (("sweep_n8_d3.csv", "8", "3"), ("sweep_n10_d2.csv", "10", "2")):
        rc = cli([
            "sweep", "--n", n, "--d", d, "--trials", "20", "--seed", "0",
            "--out", str(reports / name),
        ])
        if rc != 0:
            return rc

    for p in sorted(reports.iterdir()):
        print(f"wrote {p} ({p.stat().st_size} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
