#!/usr/bin/env python3
"""Empirical check that the chain sign epsilon is word-independent.

The imaginary count m of a chain depends a priori on the chosen word for
the Weyl element; the sign (-1)^m should not.  This rewrites random words
by random identity moves (insertion of s_i s_i, deletion, braid moves) and
compares the resulting signs, and also compares independently drawn words
for the same element via their matrices.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cayley_lift.coherent import chain_types, random_equivalent_word
from cayley_lift.parameters import enumerate_block, theta
from cayley_lift.root_system import build_root_system, word_matrix


def run(family: str, rank: int, trials: int, rewrites: int, seed: int) -> int:
    rng = random.Random(seed)
    system = build_root_system(family, rank)
    params = enumerate_block(family, rank)
    failures = 0
    m_spread = Counter()
    for t in range(trials):
        p = rng.choice(params)
        word = tuple(rng.randrange(system.rank) for _ in range(rng.randrange(1, 13)))
        base = chain_types(p, word)
        seen_m = {base.imaginary_count}
        for _ in range(rewrites):
            other = random_equivalent_word(system, word, rng, moves=rng.randrange(1, 25))
            assert word_matrix(other, system) == word_matrix(word, system)
            cert = chain_types(p, other)
            seen_m.add(cert.imaginary_count)
            if cert.sign != base.sign:
                failures += 1
                print(
                    "SIGN MISMATCH %s word=%r rewritten=%r m=%d vs %d"
                    % (p.render(), word, other, base.imaginary_count, cert.imaginary_count)
                )
        m_spread[len(seen_m)] += 1
    print(
        "%s rank %d: %d trials x %d rewrites, %d sign mismatches"
        % (family, rank, trials, rewrites, failures)
    )
    print("distinct imaginary counts seen per element:", dict(sorted(m_spread.items())))
    return failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="D", choices=("A", "D"))
    ap.add_argument("--rank", type=int, default=4)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--rewrites", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20240817)
    args = ap.parse_args()
    failures = run(args.family, args.rank, args.trials, args.rewrites, args.seed)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
