#!/usr/bin/env python3
"""Run the strong-grading / Galois equivalence experiment on the standard
corpus and print one row per algebra.

Both verdicts are computed independently (span elimination per grade pair
versus exact rank of the canonical map); the agreement column must read
'yes' on every row, whatever the individual verdicts are.
"""

import argparse
import time

from qgraded import beta_n, check_equivalence_theorem
from qgraded.corpus import standard_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--beta", type=int, default=0, metavar="N",
                        help="additionally verify bijectivity of the "
                             "canonical-map iterates up to N")
    args = parser.parse_args()

    corpus = standard_corpus()
    width = max(len(e.name) for e in corpus)
    print(f"{'algebra':<{width}}  {'dim':>4}  {'strong':>6}  {'galois':>6}  "
          f"{'agree':>5}  {'seconds':>7}")
    disagreements = 0
    for entry in corpus:
        started = time.monotonic()
        eq = check_equivalence_theorem(entry.algebra)
        elapsed = time.monotonic() - started
        tag = "yes" if eq.agree else "NO"
        disagreements += not eq.agree
        print(f"{entry.name:<{width}}  {entry.algebra.dim:>4}  "
              f"{'yes' if eq.strong.strong else 'no':>6}  "
              f"{'yes' if eq.galois.galois else 'no':>6}  {tag:>5}  "
              f"{elapsed:>7.3f}")
        if args.beta and eq.strong.strong:
            for n in range(1, args.beta + 1):
                bmap = beta_n(entry.algebra, n, max_beta_n=args.beta)
                assert bmap.is_bijective(), (entry.name, n)
            print(f"{'':<{width}}  iterates 1..{args.beta} bijective")
    print(f"\n{len(corpus)} algebras, {disagreements} disagreements")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
