#!/usr/bin/env python3
"""Differential sweep: both factorization engines against the finite oracles.

Draws random expressions and random finite words, factorizes each with the
state-marking engine and the structural engine, and checks the results agree
with each other and (on finite words) with Duval's algorithm.

Usage: python3 scripts/differential_sweep.py [--cases N] [--words N]
                                             [--seed S] [--max-size K]
                                             [--max-depth D] [--letters abc]
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ratword import (duval_factorize, factorize, factorize_structural,
                     format_expr, parse_expr, word_equal)
from ratword.gen import random_expr, random_finite_word


def agree(f1, f2) -> bool:
    return len(f1.blocks) == len(f2.blocks) and all(
        a1 == a2 and word_equal(p1, p2)
        for (p1, a1), (p2, a2) in zip(f1.blocks, f2.blocks))


def flatten(fact):
    out = []
    for p, a in fact.blocks:
        out.extend([format_expr(p)] * a.to_int())
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=1000,
                    help="random rational expressions (default 1000)")
    ap.add_argument("--words", type=int, default=2000,
                    help="random finite words (default 2000)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-size", type=int, default=12)
    ap.add_argument("--max-depth", type=int, default=3)
    ap.add_argument("--letters", default="abc")
    ap.add_argument("--max-word-len", type=int, default=50)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    t0 = time.perf_counter()
    for _ in range(args.cases):
        e = random_expr(rng, args.max_size, args.max_depth, args.letters)
        try:
            fact, state, _ = factorize(e)
            structural = factorize_structural(e)
            ok = agree(fact, structural) and \
                word_equal(fact.reconstruct(), e) and \
                state.steps <= state.automaton.n ** 3
        except Exception as err:  # noqa: BLE001 - keep sweeping, report at end
            print(f"ERROR  {format_expr(e)}: {err}")
            bad += 1
            continue
        if not ok:
            print(f"MISMATCH  {format_expr(e)}: {fact} vs {structural}")
            bad += 1
    for _ in range(args.words):
        word = random_finite_word(rng, args.max_word_len, args.letters) or "a"
        expected = duval_factorize(word)
        fact, _, _ = factorize(parse_expr(word))
        if flatten(fact) != expected or \
                flatten(factorize_structural(parse_expr(word))) != expected:
            print(f"MISMATCH  {word}")
            bad += 1
    elapsed = time.perf_counter() - t0
    total = args.cases + args.words
    print(f"{total - bad}/{total} ok in {elapsed:.1f} s "
          f"(seed {args.seed}, {args.cases} expressions + {args.words} words)")
    return 0 if bad == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
