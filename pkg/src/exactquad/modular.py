"""Quadratic congruences ``a*x**2 + b*x + c == 0 (mod n)``.

When ``gcd(2a, n) == 1`` the square is completed::

    x == (-b + s) * (2a)^-1   (mod n),   s**2 == b**2 - 4ac

and square roots mod ``n`` come from Tonelli-Shanks, Hensel lifting and CRT.
Any other modulus falls back to exhaustive search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from math import gcd

from .ntheory import factorint, is_prime, xgcd

BRUTE_FORCE_LIMIT = 10**6


class NotInvertibleError(ValueError):
    pass


class InvalidModulusError(ValueError):
    pass


class BruteForceBoundError(ValueError):
    """Exhaustive search requested beyond ``BRUTE_FORCE_LIMIT``."""


class Method(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    LIFTED_CRT = "LiftedCRT"
    BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class CongruenceProblem:
    a: int
    b: int
    c: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidModulusError(f"modulus must be >= 2, got {self.n}")
        for name in "abc":
            v = getattr(self, name)
            if not 0 <= v < self.n:
                raise ValueError(f"coefficient {name}={v} not reduced mod {self.n}")

    @classmethod
    def reduced(cls, a: int, b: int, c: int, n: int) -> CongruenceProblem:
        if n < 2:
            raise InvalidModulusError(f"modulus must be >= 2, got {n}")
        return cls(a % n, b % n, c % n, n)

    @property
    def discriminant(self) -> int:
        return (self.b * self.b - 4 * self.a * self.c) % self.n

    def holds(self, x: int) -> bool:
        return (self.a * x * x + self.b * x + self.c) % self.n == 0


@dataclass(frozen=True)
class CongruenceSolution:
    problem: CongruenceProblem
    solutions: tuple[int, ...]
    method: Method
    unit_2a: bool
    residue_delta: bool

    def __post_init__(self) -> None:
        sols = tuple(sorted(set(self.solutions)))
        object.__setattr__(self, "solutions", sols)
        bad = [x for x in sols if not (0 <= x < self.problem.n and self.problem.holds(x))]
        if bad:
            raise AssertionError(f"non-solutions {bad[:5]} for {self.problem}")

    def to_json(self) -> dict[str, object]:
        return {
            "n": self.problem.n,
            "solutions": list(self.solutions),
            "method": self.method.value,
            "preconditions": {"unit_2a": self.unit_2a, "residue_delta": self.residue_delta},
        }


# -- elementary number theory ---------------------------------------------


def mod_inverse(a: int, n: int) -> int:
    g, x, _ = xgcd(a % n, n)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible mod {n} (gcd {g})")
    return x % n


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion ``a**((p-1)/2) mod p``."""
    _require_odd_prime(p)
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def jacobi(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise InvalidModulusError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _tonelli_shanks(a: int, p: int) -> int:
    """One square root of a nonzero residue ``a`` mod odd prime ``p``."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_prime(a: int, p: int) -> set[int]:
    """All ``x`` in ``[0, p)`` with ``x**2 == a (mod p)``."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return {0}
    if legendre(a, p) != 1:
        return set()
    r = _tonelli_shanks(a, p)
    return {r, p - r}


def _sqrt_unit_2power(u: int, e: int) -> set[int]:
    """Square roots of odd ``u`` mod ``2**e``."""
    m = 1 << e
    u %= m
    if e == 1:
        return {1}
    if e == 2:
        return {1, 3} if u % 4 == 1 else set()
    if u % 8 != 1:
        return set()
    r = 1
    for i in range(3, e):
        # r**2 == u mod 2**i; fix the next bit
        if (r * r - u) % (1 << (i + 1)):
            r += 1 << (i - 1)
    half = m >> 1
    return {r % m, -r % m, (r + half) % m, (-r + half) % m}


def _sqrt_unit_odd_power(u: int, p: int, e: int) -> set[int]:
    roots = sqrt_mod_prime(u, p)
    if not roots:
        return set()
    r = min(roots)
    pk = p
    for _ in range(1, e):
        pk *= p
        # Newton step: r <- r - (r**2 - u) / (2r)
        r = (r - (r * r - u) * mod_inverse(2 * r, pk)) % pk
    return {r, -r % pk}


def sqrt_mod_prime_power(a: int, p: int, e: int) -> set[int]:
    """All square roots of ``a`` modulo ``p**e``, including non-unit ``a``."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    if not is_prime(p):
        raise InvalidModulusError(f"{p} is not prime")
    m = p**e
    a %= m
    if a == 0:
        # x**2 == 0 iff p**ceil(e/2) divides x
        step = p ** ((e + 1) // 2)
        return set(range(0, m, step))
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    if k % 2:
        return set()
    # x = p**(k/2) * y with y**2 == a (mod p**(e-k)); y is free mod p**(e-k/2)
    rest = e - k
    units = _sqrt_unit_2power(a, rest) if p == 2 else _sqrt_unit_odd_power(a, p, rest)
    scale, lift = p ** (k // 2), p**rest
    return {scale * (y + j * lift) % m for y in units for j in range(p ** (k // 2))}


def crt(residues: list[int], moduli: list[int]) -> int:
    """Combine pairwise-coprime congruences."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        x += m * ((r - x) * mod_inverse(m, mi) % mi)
        m *= mi
    return x % m


def sqrt_mod(a: int, n: int) -> list[int]:
    """Sorted square roots of ``a`` modulo arbitrary ``n >= 1``."""
    if n == 1:
        return [0]
    fac = factorint(n)
    moduli = [p**e for p, e in fac.items()]
    per = [sorted(sqrt_mod_prime_power(a, p, e)) for p, e in fac.items()]
    if any(not roots for roots in per):
        return []
    return sorted(crt(list(combo), moduli) for combo in product(*per))


def _is_square_prime_power(a: int, p: int, e: int) -> bool:
    m = p**e
    a %= m
    if a == 0:
        return True
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    if k % 2:
        return False
    rest = e - k
    if p != 2:
        return legendre(a, p) == 1
    return rest == 1 or (rest == 2 and a % 4 == 1) or a % 8 == 1


def is_square_mod(a: int, n: int) -> bool:
    """Whether ``x**2 == a (mod n)`` is solvable, without enumerating roots."""
    if n == 1:
        return True
    return all(_is_square_prime_power(a, p, e) for p, e in factorint(n).items())


def quadratic_residues(n: int) -> list[int]:
    """Squares of the units mod ``n``."""
    if n < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {n}")
    return sorted({x * x % n for x in range(1, n) if gcd(x, n) == 1})


# -- solvers --------------------------------------------------------------


def brute_force_congruence(pr: CongruenceProblem) -> list[int]:
    if pr.n > BRUTE_FORCE_LIMIT:
        raise BruteForceBoundError(f"modulus {pr.n} exceeds brute-force bound {BRUTE_FORCE_LIMIT}")
    a, b, c, n = pr.a, pr.b, pr.c, pr.n
    return [x for x in range(n) if (a * x * x + b * x + c) % n == 0]


def solve_congruence(pr: CongruenceProblem) -> CongruenceSolution:
    n = pr.n
    delta = pr.discriminant
    unit_2a = gcd(2 * pr.a, n) == 1
    residue_delta = is_square_mod(delta, n)
    if not unit_2a:
        sols = brute_force_congruence(pr)
        return CongruenceSolution(pr, tuple(sols), Method.BRUTE_FORCE, unit_2a, residue_delta)
    beta = mod_inverse(2 * pr.a, n)
    method = Method.CLOSED_FORM if is_prime(n) else Method.LIFTED_CRT
    roots = sqrt_mod(delta, n) if residue_delta else []
    sols = tuple((-pr.b + s) * beta % n for s in roots)
    return CongruenceSolution(pr, sols, method, unit_2a, residue_delta)


def closed_form_solutions(pr: CongruenceProblem, delta_roots: list[int]) -> list[int]:
    """``x == -b*(2a)^-1 + s*(2a)^-1`` for each supplied root ``s`` of the discriminant."""
    beta = mod_inverse(2 * pr.a, pr.n)
    return sorted({(-pr.b * beta + s * beta) % pr.n for s in delta_roots})
