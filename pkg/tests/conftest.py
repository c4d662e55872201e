from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from exactquad.forms import GeneralForm

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rationals(bound: int = 10**9, nonzero: bool = False) -> st.SearchStrategy[Fraction]:
    nums = st.integers(-bound, bound)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, bound))


def small_rationals(nonzero: bool = False) -> st.SearchStrategy[Fraction]:
    return rationals(60, nonzero)


general_forms = st.builds(GeneralForm, rationals(nonzero=True), rationals(), rationals())
small_forms = st.builds(GeneralForm, small_rationals(nonzero=True), small_rationals(), small_rationals())


def brute_squarefree(n: int) -> tuple[int, int]:
    """Largest square divisor found by scanning downward; independent of ntheory."""
    if n == 0:
        return 0, 1
    m = abs(n)
    k = 1
    for cand in range(int(m**0.5) + 1, 0, -1):
        if m % (cand * cand) == 0:
            k = cand
            break
    inside = m // (k * k)
    return k, inside if n > 0 else -inside


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    import re

    verdicts: dict[int, bool] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", getattr(rep, "nodeid", ""))
            if m and rep.when in ("setup", "call"):
                n = int(m.group(1))
                verdicts[n] = verdicts.get(n, True) and status == "passed"
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if verdicts[n] else 'FAIL'}")
