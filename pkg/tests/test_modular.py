import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactquad.modular import (
    BruteForceBoundError,
    CongruenceProblem,
    CongruenceSolution,
    InvalidModulusError,
    Method,
    NotInvertibleError,
    brute_force_congruence,
    closed_form_solutions,
    crt,
    is_square_mod,
    jacobi,
    legendre,
    mod_inverse,
    quadratic_residues,
    solve_congruence,
    sqrt_mod,
    sqrt_mod_prime,
    sqrt_mod_prime_power,
)
from exactquad.ntheory import factorint, primes_up_to

ODD_PRIMES = [p for p in primes_up_to(500) if p > 2]


def squares_mod(a, m):
    return {x for x in range(m) if (x * x - a) % m == 0}


def scan(a, b, c, n):
    return [x for x in range(n) if (a * x * x + b * x + c) % n == 0]


# -- inverses and symbols -------------------------------------------------


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == 5 == next(x for x in range(7) if 3 * x % 7 == 1)
    assert mod_inverse(1, 97) == 1
    with pytest.raises(NotInvertibleError):
        mod_inverse(2, 4)


@given(st.integers(-10**6, 10**6), st.integers(2, 10**6))
def test_mod_inverse_property(a, n):
    if gcd(a, n) != 1:
        with pytest.raises(NotInvertibleError):
            mod_inverse(a, n)
    else:
        b = mod_inverse(a, n)
        assert 0 <= b < n and a * b % n == 1


def test_legendre_examples():
    assert legendre(2, 7) == 1 and 3 * 3 % 7 == 2
    assert legendre(0, 5) == 0
    assert legendre(3, 5) == -1 and 3 not in {x * x % 5 for x in range(5)}
    for bad in (2, 9, 1, 0, -7):
        with pytest.raises(InvalidModulusError):
            legendre(1, bad)


def test_euler_matches_residue_table():
    for p in ODD_PRIMES:
        qr = set(quadratic_residues(p))
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in qr else -1)
            assert legendre(a, p) == expected


def test_jacobi_examples():
    assert all(jacobi(a, 1) == 1 for a in range(-5, 6))
    assert jacobi(2, 15) == 1
    assert not squares_mod(2, 15)  # +1 does not certify a residue
    with pytest.raises(InvalidModulusError):
        jacobi(3, 10)


def test_jacobi_is_product_of_legendre():
    rng = random.Random(3)
    for n in range(3, 3000, 2):
        fac = factorint(n)
        for a in (rng.randrange(-n, 2 * n) for _ in range(5)):
            expected = 1
            for p, e in fac.items():
                expected *= legendre(a, p) ** e
            assert jacobi(a, n) == expected, (a, n)


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), st.integers(0, 5000))
def test_jacobi_multiplicative(a, b, k):
    n = 2 * k + 1
    assert jacobi(a, n) * jacobi(b, n) == jacobi(a * b, n)


# -- square roots ---------------------------------------------------------


def test_sqrt_mod_prime_examples():
    assert sqrt_mod_prime(2, 7) == {3, 4} == squares_mod(2, 7)
    assert sqrt_mod_prime(0, 11) == {0}
    assert sqrt_mod_prime(3, 5) == set() == squares_mod(3, 5)


def test_tonelli_shanks_all_residues():
    for p in ODD_PRIMES:
        for a in range(p):
            roots = sqrt_mod_prime(a, p)
            assert roots == squares_mod(a, p)
            if a and legendre(a, p) == 1:
                assert len(roots) == 2


def test_tonelli_shanks_large_prime():
    p = 2**61 - 1  # p - 1 has a single factor of 2
    q = 998244353  # p - 1 = 2**23 * 119, the slow branch
    for prime in (p, q):
        for a in (2, 3, 5, 10**9 + 7):
            for r in sqrt_mod_prime(a, prime):
                assert r * r % prime == a % prime


def test_sqrt_mod_prime_power_examples():
    assert sqrt_mod_prime_power(1, 2, 3) == {1, 3, 5, 7} == squares_mod(1, 8)
    assert sqrt_mod_prime_power(2, 7, 2) == {10, 39} == squares_mod(2, 49)
    assert sqrt_mod_prime_power(0, 3, 1) == {0}


@pytest.mark.parametrize("e", range(1, 11))
def test_two_adic_roots_exhaustive(e):
    m = 2**e
    for a in range(m):
        assert sqrt_mod_prime_power(a, 2, e) == squares_mod(a, m)


@pytest.mark.parametrize("p,e", [(3, 1), (3, 4), (3, 6), (5, 3), (7, 3), (11, 2), (13, 2)])
def test_odd_prime_power_roots_exhaustive(p, e):
    m = p**e
    for a in range(m):
        assert sqrt_mod_prime_power(a, p, e) == squares_mod(a, m)


def test_sqrt_mod_composite():
    for n in range(1, 400):
        for a in range(n):
            assert sqrt_mod(a, n) == sorted(squares_mod(a, n))
            assert is_square_mod(a, n) == bool(squares_mod(a, n))


def test_crt():
    assert crt([2, 3, 2], [3, 5, 7]) == 23


def test_quadratic_residues_examples():
    assert quadratic_residues(7) == [1, 2, 4]
    assert quadratic_residues(5) == [1, 4]
    for p in primes_up_to(1000):
        if p > 2:
            assert len(quadratic_residues(p)) == (p - 1) // 2


# -- congruences ------------------------------------------------------------


def test_congruence_examples():
    sol = solve_congruence(CongruenceProblem(1, 0, 4, 7))
    assert sol.solutions == () == tuple(scan(1, 0, 4, 7))
    assert (-16) % 7 == 5 and legendre(5, 7) == -1
    assert not sol.residue_delta and sol.unit_2a

    sol = solve_congruence(CongruenceProblem.reduced(1, 0, -2, 7))
    assert sol.solutions == (3, 4) == tuple(scan(1, 0, -2, 7))
    assert sol.method is Method.CLOSED_FORM

    sol = solve_congruence(CongruenceProblem(1, 0, 0, 4))
    assert sol.solutions == (0, 2)
    assert sol.method is Method.BRUTE_FORCE and not sol.unit_2a


def test_pathology_mod_4():
    # x**2 and (x + 2)**2 agree mod 4 for every x
    assert all((x * x - (x + 2) ** 2) % 4 == 0 for x in range(4))
    assert brute_force_congruence(CongruenceProblem(1, 0, 0, 4)) == [0, 2]


def test_brute_force_examples():
    assert brute_force_congruence(CongruenceProblem(1, 0, 1, 2)) == [1]
    assert brute_force_congruence(CongruenceProblem(0, 0, 0, 9)) == list(range(9))
    with pytest.raises(BruteForceBoundError):
        brute_force_congruence(CongruenceProblem(0, 0, 0, 10**6 + 1))


def test_solver_refuses_large_degenerate_modulus():
    with pytest.raises(BruteForceBoundError):
        solve_congruence(CongruenceProblem(2, 1, 1, 2 * 10**6))


def test_problem_invariants():
    with pytest.raises(ValueError):
        CongruenceProblem(7, 0, 0, 7)
    with pytest.raises(InvalidModulusError):
        CongruenceProblem(0, 0, 0, 1)
    assert CongruenceProblem.reduced(-1, 15, 8, 7) == CongruenceProblem(6, 1, 1, 7)


def test_solution_reverified():
    with pytest.raises(AssertionError):
        CongruenceSolution(CongruenceProblem(1, 0, 4, 7), (1,), Method.CLOSED_FORM, True, False)


def test_json_schema():
    data = solve_congruence(CongruenceProblem(1, 0, 0, 4)).to_json()
    assert data == {
        "n": 4,
        "solutions": [0, 2],
        "method": "BruteForce",
        "preconditions": {"unit_2a": False, "residue_delta": True},
    }


@pytest.mark.parametrize("n", [15, 21, 105, 1155, 3 * 5 * 7 * 11 * 13])
def test_crt_count_law(n):
    k = len(factorint(n))
    rng = random.Random(n)
    hits = 0
    for _ in range(300):
        a, b, c = rng.randrange(1, n), rng.randrange(n), rng.randrange(n)
        if gcd(2 * a, n) != 1:
            continue
        delta = (b * b - 4 * a * c) % n
        if all(len(sqrt_mod_prime(delta, p)) == 2 for p in factorint(n)):
            sol = solve_congruence(CongruenceProblem(a, b, c, n))
            assert len(sol.solutions) == 2**k
            assert list(sol.solutions) == scan(a, b, c, n)
            hits += 1
    assert hits > 0


def test_large_modulus_closed_form():
    p = 1000000007
    n = p * 998244353
    pr = CongruenceProblem.reduced(3, 5, -7, n)
    sol = solve_congruence(pr)
    assert sol.method is Method.LIFTED_CRT
    assert all(pr.holds(x) for x in sol.solutions)
    assert len(sol.solutions) in (0, 1, 2, 4)


def test_closed_form_reproduces_oracle():
    rng = random.Random(11)
    for n in range(3, 200, 2):
        for _ in range(40):
            a, b, c = rng.randrange(1, n), rng.randrange(n), rng.randrange(n)
            sol = solve_congruence(CongruenceProblem(a, b, c, n))
            if not (sol.unit_2a and sol.residue_delta):
                continue
            delta = (b * b - 4 * a * c) % n
            oracle = set(scan(a, b, c, n))
            direct = closed_form_solutions(sol.problem, sorted(squares_mod(delta, n)))
            assert set(direct) <= oracle
            if n in primes_up_to(200):
                assert set(direct) == oracle


def test_oracle_sweep_small():
    rng = random.Random(5)
    for n in range(2, 60):
        for _ in range(100):
            pr = CongruenceProblem(rng.randrange(n), rng.randrange(n), rng.randrange(n), n)
            assert list(solve_congruence(pr).solutions) == brute_force_congruence(pr)
