"""Audit the regression corpus and tabulate claim verdicts per curve."""
import argparse
import collections
import json
from pathlib import Path

from cubicaudit.audit import CLAIMS, dumps, run_corpus
from cubicaudit.config import Config

SHORT = {"holds": "+", "fails": "x", "not-applicable": ".", "undecided": "?", "witness-candidate": "W"}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=Config().seed)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", type=Path, help="also write the full reports here")
    args = ap.parse_args()

    config = Config(height=args.height, seed=args.seed, workers=args.workers)
    reports = run_corpus(config)
    ids = list(CLAIMS)
    print("columns:", ", ".join(f"{i + 1}={cid}" for i, cid in enumerate(ids)))
    print(f"{'curve':<14}" + "".join(f"{i + 1:>3}" for i in range(len(ids))))
    totals = collections.Counter()
    for rep in reports:
        row = [rep.claim(cid) for cid in ids]
        totals.update((cid, v) for cid, v in zip(ids, row))
        print(f"{rep.curve_id:<14}" + "".join(f"{SHORT[v]:>3}" for v in row))
    print("\nlegend:", ", ".join(f"{v}={k}" for k, v in SHORT.items()))
    for cid in ids:
        counts = {v: totals[(cid, v)] for v in SHORT if totals[(cid, v)]}
        print(f"  {cid:<30} {counts}")
    if args.json:
        args.json.write_text(dumps({"config": config.to_json(), "reports": [r.to_json() for r in reports]}))


if __name__ == "__main__":
    main()
