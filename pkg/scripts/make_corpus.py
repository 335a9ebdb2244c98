#!/usr/bin/env python3
"""Write the standard corpus as descriptor files (default: ./corpus).

The emitted files are canonical bytes: regenerating into a clean
directory reproduces the shipped corpus exactly.
"""

import argparse
from pathlib import Path

from qgraded.corpus import standard_corpus
from qgraded.descriptors import Descriptor, dump_descriptor


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="corpus", help="output directory")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for entry in standard_corpus():
        desc = Descriptor(entry.algebra.group, entry.factor, entry.algebra)
        path = out / f"{entry.name}.json"
        path.write_text(dump_descriptor(desc), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
