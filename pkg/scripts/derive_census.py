"""Derive the structural census by enumeration and freeze it as golden values.

    python scripts/derive_census.py            # print
    python scripts/derive_census.py --freeze   # write tests/golden_census.json (refuses to overwrite)
"""

import argparse
import json
import sys
from pathlib import Path

from mermin_ovoid.census import census

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden_census.json"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--freeze", action="store_true")
    ap.add_argument("--force", action="store_true", help="overwrite an existing golden file")
    args = ap.parse_args()

    data = census()
    print(json.dumps(data, indent=2))
    if args.freeze:
        if GOLDEN.exists() and not args.force:
            sys.exit(f"{GOLDEN} exists; pass --force to overwrite")
        GOLDEN.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        print(f"wrote {GOLDEN}", file=sys.stderr)


if __name__ == "__main__":
    main()
