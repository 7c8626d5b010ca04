"""Run every verification suite over its default grid and write one CSV per
suite plus a JSON summary.

    python scripts/run_sweeps.py --out-dir results
"""

import argparse
import json
import pathlib
import time

from wheelturan.sweeps import SweepSpec, rows_to_csv, run_sweep, summarize

GRIDS = [
    SweepSpec("construct-verify", n=range(6, 31), k=[2, 3, 4], m=[1, 2, 3]),
    SweepSpec("formula-identities", n=range(10, 201), k=[2, 3, 4, 5], m=[1, 2, 3]),
    SweepSpec("lemma-bounds", n=range(4, 61), k=[2, 3, 4], m=[2, 3, 4]),
    SweepSpec("conjecture", n=range(10, 101), k_lists=[[2], [3], [2, 2], [3, 2], [3, 3]]),
    SweepSpec("oracle-compare", n=range(4, 9), pattern="W5"),
    SweepSpec("oracle-compare", n=range(6, 9), pattern="W7"),
    SweepSpec("oracle-compare", n=range(5, 9), pattern="S4+S3", liu_variant="corrected"),
    SweepSpec("simonovits", k=[2, 3, 4, 5, 6], h=[1, 2]),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args(argv)
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for i, spec in enumerate(GRIDS):
        t0 = time.perf_counter()
        rows = run_sweep(spec)
        name = f"{i:02d}_{spec.suite}" + (f"_{spec.pattern}" if spec.pattern else "")
        (out / f"{name}.csv").write_text(rows_to_csv(rows))
        summary[name] = {**summarize(rows), "seconds": round(time.perf_counter() - t0, 2)}
        print(name, json.dumps(summary[name]))
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    return 1 if any(s["mismatch"] for s in summary.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
