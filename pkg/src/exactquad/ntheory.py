"""Integer primitives shared by the exact and modular layers.

Primality is Miller-Rabin (deterministic below 3.3e24), factoring is trial
division followed by Brent's variant of Pollard rho.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from random import Random

TRIAL_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the first 13 prime bases is exact below this bound.
_MR_DETERMINISTIC = 3317044064679887385961981


@lru_cache(maxsize=None)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """Sieve of Eratosthenes, inclusive."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC:
        bases = _MR_BASES + tuple(primes_up_to(200)[len(_MR_BASES) :])
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_rho(n: int, max_iter: int | None = None, seed: int = 1) -> int | None:
    """Return a non-trivial factor of composite odd ``n`` (Brent's cycle finding).

    Gives up and returns None after ``max_iter`` polynomial steps. The random
    stream is seeded so that results are reproducible.
    """
    if n % 2 == 0:
        return 2
    rng = Random(seed)
    steps = 0
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            steps += r
            r *= 2
            if max_iter is not None and steps > max_iter and g == 1:
                return None
        if g == n:
            # batched gcd overshot; replay one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g


def _trial(n: int, limit: int, out: dict[int, int]) -> int:
    for p in primes_up_to(limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = out.get(p, 0) + e
    return n


def factorint(n: int, trial_limit: int = TRIAL_LIMIT) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"factorint requires n >= 1, got {n}")
    out: dict[int, int] = {}
    n = _trial(n, trial_limit, out)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = pollard_rho(m)
        stack += [f, m // f]
    return dict(sorted(out.items()))


def squarefree_split(n: int, trial_limit: int = 2000, rho_budget: int | None = 2000) -> tuple[int, int]:
    """Split ``n >= 1`` as ``(outside, inside)`` with ``n == outside**2 * inside``.

    Small primes are removed by trial division, larger cofactors are split by
    Pollard rho. A composite cofactor that survives ``rho_budget`` steps has
    every prime factor above ~rho_budget**2 and is kept whole after a perfect
    square check; pass ``rho_budget=None`` for a guaranteed squarefree result.
    """
    if n < 1:
        raise ValueError(f"squarefree_split requires n >= 1, got {n}")
    outside, inside = 1, 1
    small: dict[int, int] = {}
    n = _trial(n, trial_limit, small)
    for p, e in small.items():
        outside *= p ** (e // 2)
        if e % 2:
            inside *= p
    # cofactors not yet known to be prime; multiplicities tracked by repetition
    pending = [n] if n > 1 else []
    big: dict[int, int] = {}
    while pending:
        m = pending.pop()
        r = isqrt(m)
        if r * r == m:
            pending += [r, r]
            continue
        if m < (trial_limit + 1) ** 3 or is_prime(m):
            # below the cube of the trial bound a non-square cofactor is p or p*q
            big[m] = big.get(m, 0) + 1
            continue
        f = pollard_rho(m, max_iter=rho_budget)
        if f is None:
            big[m] = big.get(m, 0) + 1
        else:
            pending += [f, m // f]
    # distinct entries may still share factors when one of them is composite
    keys = _coprime_base(big)
    for b, e in keys.items():
        outside *= b ** (e // 2)
        if e % 2:
            inside *= b
    return outside, inside


def _coprime_base(counts: dict[int, int]) -> dict[int, int]:
    """Refine ``{base: exponent}`` so that the bases are pairwise coprime."""
    items = [(b, e) for b, e in counts.items() if b > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                (b1, e1), (b2, e2) = items[i], items[j]
                g = gcd(b1, b2)
                if g == 1:
                    continue
                if b1 == b2:
                    rest = [(b1, e1 + e2)]
                else:
                    rest = [(g, e1 + e2), (b1 // g, e1), (b2 // g, e2)]
                items = [it for k, it in enumerate(items) if k not in (i, j)]
                items += [(b, e) for b, e in rest if b > 1]
                changed = True
                break
            if changed:
                break
    merged: dict[int, int] = {}
    for b, e in items:
        merged[b] = merged.get(b, 0) + e
    return merged


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0
