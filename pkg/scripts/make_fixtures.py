#!/usr/bin/env python3
"""Regenerate the committed verdict reports in tests/fixtures/.

Each fixture is the JSON report of one (claim, variant, family) run.
The report carries its own parameters, so tests re-run it and diff.
"""
import argparse
from pathlib import Path

from argkit.validate import FamilyParams, run_family

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# name -> (claim, FamilyParams overrides)
FIXTURES = {
    "lem1_2_literal": ("LEM1_2", {"variant": "literal"}),
    "lem1_3_literal": ("LEM1_3", {"variant": "literal"}),
    "prop1_literal": ("PROP1", {"variant": "literal"}),
    "prop2_literal": ("PROP2", {"variant": "literal", "monotone": True}),
    "prop2_repaired": ("PROP2", {"variant": "repaired", "monotone": True}),
    "prop3_literal": ("PROP3", {"variant": "literal", "monotone": True}),
    "prop3_repaired": ("PROP3", {"variant": "repaired", "monotone": True}),
    "thm3_literal": ("THM3_DIST", {"variant": "literal"}),
    "prop4_literal": ("PROP4", {"variant": "literal"}),
    "thm5_literal": ("THM5_NOEVEN", {"variant": "literal"}),
    "thm6_literal": ("THM6_DIST", {"variant": "literal", "max_vars": 2, "max_clauses": 2}),
}


def build(name: str) -> str:
    claim, overrides = FIXTURES[name]
    return run_family(claim, FamilyParams(**overrides)).to_json() + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="subset of fixtures (default: all)")
    ap.add_argument("--out", type=Path, default=FIXTURE_DIR)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.names or FIXTURES:
        text = build(name)
        (args.out / f"{name}.json").write_text(text)
        print(f"wrote {name}.json")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
