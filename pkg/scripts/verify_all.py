#!/usr/bin/env python3
"""Run every claim over its default family and print a verdict table.

    python3 scripts/verify_all.py                    # repaired variants
    python3 scripts/verify_all.py --variant both     # side by side
    python3 scripts/verify_all.py --json-dir out/    # one JSON report per run
"""
import argparse
from pathlib import Path

from argkit.validate import ClaimId, FamilyParams, format_table, run_family

SAMPLED = {"THM2_DIST", "THM3_DIST", "THM4_DIST", "THM7_DIST", "THM8_DIST"}


def params_for(claim: ClaimId, variant: str, seed: int) -> FamilyParams:
    if claim.value in ("LATTICE", "NONEMPTY", "STB_COLLAPSE"):
        return FamilyParams(samples=500, seed=seed, variant=variant)
    if claim.value in ("PROP4", "THM5_NOEVEN", "THM6_DIST"):
        return FamilyParams(samples=300, seed=seed, variant=variant)
    if claim.value in SAMPLED:
        return FamilyParams(max_y=3, max_z=3, max_clauses=5, samples=100, seed=seed,
                            exhaustive=False, variant=variant)
    return FamilyParams(variant=variant)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--claims", nargs="*", default=[c.value for c in ClaimId])
    ap.add_argument("--variant", choices=["literal", "repaired", "both"], default="repaired")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json-dir", type=Path)
    args = ap.parse_args(argv)
    variants = ["literal", "repaired"] if args.variant == "both" else [args.variant]
    reports = []
    for name in args.claims:
        claim = ClaimId.parse(name)
        for variant in variants:
            r = run_family(claim, params_for(claim, variant, args.seed))
            print(r.text_row(), flush=True)
            reports.append(r)
            if args.json_dir:
                args.json_dir.mkdir(parents=True, exist_ok=True)
                (args.json_dir / f"{claim.value.lower()}_{variant}.json").write_text(r.to_json() + "\n")
    print()
    print(format_table(reports))
    return 1 if any(r.verdict == "fails" and r.params["variant"] == "repaired" for r in reports) else 0


if __name__ == "__main__":
    raise SystemExit(main())
