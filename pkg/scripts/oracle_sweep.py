"""Compare solve_congruence with exhaustive search over a range of moduli.

Prints one row per modulus: triples checked, method counts, mismatches.
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from exactquad.modular import CongruenceProblem, brute_force_congruence, solve_congruence


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 2
    n_max: int = 200
    triples: int = 500
    seed: int = 0


def sweep_modulus(n: int, cfg: SweepConfig, rng: random.Random) -> tuple[Counter, int, int]:
    if n**3 <= cfg.triples:
        triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    else:
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(cfg.triples)]
    methods: Counter = Counter()
    bad = 0
    for a, b, c in triples:
        pr = CongruenceProblem(a, b, c, n)
        sol = solve_congruence(pr)
        methods[sol.method.value] += 1
        bad += list(sol.solutions) != brute_force_congruence(pr)
    return methods, len(triples), bad


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    start, total, total_bad = time.perf_counter(), 0, 0
    print(f"{'n':>5} {'checked':>8} {'ClosedForm':>11} {'LiftedCRT':>10} {'BruteForce':>11} {'bad':>4}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        methods, checked, bad = sweep_modulus(n, cfg, rng)
        total += checked
        total_bad += bad
        print(f"{n:>5} {checked:>8} {methods['ClosedForm']:>11} {methods['LiftedCRT']:>10} "
              f"{methods['BruteForce']:>11} {bad:>4}")
    print(f"# {total} problems, {total_bad} mismatches, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
