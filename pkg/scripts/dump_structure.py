"""Dump structure constants and Killing form of a simple Lie algebra as JSON.

    python3 scripts/dump_structure.py A2 [--out a2.json]
"""

import argparse
import json
import sys

from bggkit.oracle.algebra import dump_json, realize_algebra
from bggkit.rootsys import DynkinSpec, build_root_system


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("type", help="simple type, e.g. A2, G2")
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)
    text = json.dumps(dump_json(realize_algebra(build_root_system(DynkinSpec.parse(args.type)))), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
