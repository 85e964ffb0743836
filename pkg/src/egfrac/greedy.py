"""Greedy unit-fraction expansion and its per-step analysis.

The greedy operator picks, at every step, the largest unit fraction that
keeps the running sum strictly below the target theta. Writing
``G(theta) = floor(1/theta) + 1``, the expansion denominators are
``a_1 = G(theta)`` and ``a_m = G(e_{m-1})`` where ``e_m`` is the exact
error left after m steps. Consecutive terms always satisfy
``a_{n+1} >= a_n^2 - a_n + 1`` (with a_1 >= 2), the expansion of 1 is
Sylvester's sequence 2, 3, 7, 43, ..., and for rational targets the
quadratic recurrence ``a_{n+1} = a_n^2 - a_n + 1`` holds exactly from
some index on.

Besides the expansion itself this module computes the divisibility index
upsilon(p, q) (the least m >= 1 with p | q+m), its nonnegative variant
ell, the integral-reciprocal index delta, the step function
``phi(theta) = 1/(G(theta) - 1/theta)``, the best numerator-N
underapproximant denominator, the four-way equivalence report for
``1/a_m = N/b_m``, and closed forms for the expansion in the three
divisibility families where one is known.

Everything is a pure function of exact rationals; nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from . import rational
from .errors import DigitGuardExceeded, DomainError, InvariantViolation

FAMILY_UPSILON_DIVIDES_Q = "UpsilonDividesQ"
FAMILY_UPSILON2_ODD_Q = "Upsilon2OddQ"
FAMILY_P_DIVIDES_Q_PLUS_1 = "PDividesQPlus1"
FAMILY_GENERAL = "General"


def _require_unit_interval(theta: Fraction) -> None:
    if not 0 < theta <= 1:
        raise DomainError(f"theta must lie in (0, 1], got {theta}")


def g_func(theta: Fraction) -> int:
    """Denominator of the greedy choice: floor(1/theta) + 1.

    1/g_func(theta) is the largest unit fraction strictly below theta:
    1/G < theta <= 1/(G-1).
    """
    _require_unit_interval(theta)
    return theta.denominator // theta.numerator + 1


def phi(theta: Fraction) -> Fraction:
    """Exact value of 1/(G(theta) - 1/theta); always >= 1.

    Takes the value 1 exactly at theta = 1/n. (The jump discontinuities at
    those points are a concern only for whoever samples this on a grid.)
    """
    _require_unit_interval(theta)
    g = g_func(theta)
    # 1/(g - den/num) = num / (g*num - den)
    return Fraction(theta.numerator, g * theta.numerator - theta.denominator)


def superior_denominator(e: Fraction, n: int) -> int:
    """Smallest b with n/b strictly below e, i.e. floor(n/e) + 1.

    n/b is the largest fraction of numerator n underapproximating e;
    n = 1 recovers the greedy operator g_func.
    """
    if e <= 0:
        raise DomainError("target must be positive")
    if n < 1:
        raise DomainError("numerator must be a positive integer")
    return (n * e.denominator) // e.numerator + 1


def greedy_steps(theta: Fraction) -> Iterator[tuple[int, Fraction]]:
    """Yield (a_m, e_m) forever: the m-th denominator and the exact error.

    The error is carried incrementally; its numerator never exceeds the
    (reduced) numerator of theta, only denominators explode.
    """
    _require_unit_interval(theta)
    e = theta
    while True:
        a = e.denominator // e.numerator + 1
        e = e - Fraction(1, a)
        yield a, e


@dataclass(frozen=True)
class Expansion:
    """A greedy expansion prefix: target, denominators a_1..a_m, exact error.

    ``recurrence_start`` is the smallest 1-based index j such that every
    computed consecutive pair from j on satisfies
    a_{n+1} = a_n**2 - a_n + 1, or None when not even the last pair does.
    """

    theta: Fraction
    terms: list[int]
    error: Fraction
    recurrence_start: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "theta": rational.to_json(self.theta),
            "terms": [str(t) for t in self.terms],
            "error": rational.to_json(self.error),
            "recurrence_start": self.recurrence_start,
        }


def _observed_recurrence_start(terms: Sequence[int]) -> Optional[int]:
    start = None
    for i in range(len(terms) - 1, 0, -1):
        if terms[i] == terms[i - 1] * terms[i - 1] - terms[i - 1] + 1:
            start = i  # 1-based index of the pair's first element
        else:
            break
    return start


def expand(theta: Fraction, m: int, digit_guard: Optional[int] = None) -> Expansion:
    """First m greedy denominators of theta with the exact error after them.

    ``digit_guard``, when given, aborts with DigitGuardExceeded as soon as
    the next denominator would exceed that many decimal digits; the
    library default is unlimited.
    """
    _require_unit_interval(theta)
    if m < 1:
        raise DomainError("term count must be >= 1")
    limit = 10**digit_guard if digit_guard is not None else None
    terms: list[int] = []
    e = theta
    for step in range(1, m + 1):
        a = e.denominator // e.numerator + 1
        if limit is not None and a >= limit:
            raise DigitGuardExceeded(step, digit_guard)
        terms.append(a)
        e = e - Fraction(1, a)
    return Expansion(theta, terms, e, _observed_recurrence_start(terms))


def upsilon(p: int, q: int) -> int:
    """Smallest positive m with p | q + m; always <= p."""
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    r = (-q) % p
    return r if r else p


def ell_index(p: int, q: int) -> int:
    """Smallest nonnegative ell with p | q + ell, for reduced p/q.

    Zero exactly when p divides q (which for reduced input forces p = 1);
    otherwise equal to upsilon(p, q).
    """
    _require_reduced(p, q)
    return (-q) % p


def delta_index(p: int, q: int) -> int:
    """Smallest m >= 0 such that the reciprocal of e_m is a positive integer.

    Always <= ell_index(p, q): after clearing ell terms the residual is a
    unit fraction, but it can become one earlier (7/54 reaches 1/216 after
    a single step while ell = 2).
    """
    ell = ell_index(p, q)
    e = Fraction(p, q)
    steps = greedy_steps(e)
    for m in range(ell + 1):
        if e.numerator == 1:
            return m
        _, e = next(steps)
    raise InvariantViolation(
        f"no integral-reciprocal error within ell={ell} steps for {p}/{q}"
    )


def _require_reduced(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    if p > q:
        raise DomainError("expected p/q in (0, 1]")
    if gcd(p, q) != 1:
        raise DomainError(f"{p}/{q} is not in lowest terms")


@dataclass(frozen=True)
class UpsilonProfile:
    """Divisibility profile of a reduced fraction p/q in (0, 1].

    ``family`` tags which closed-form expansion family applies (the
    most specific one when several do); "General" means none is known.
    """

    p: int
    q: int
    upsilon: int
    ell: int
    delta: int
    family: str

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "upsilon": self.upsilon,
            "ell": self.ell,
            "delta": self.delta,
            "family": self.family,
        }


def upsilon_profile(p: int, q: int) -> UpsilonProfile:
    """Reduce p/q and report upsilon, ell, delta and the closed-form family."""
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive integers")
    if p > q:
        raise DomainError("expected p/q in (0, 1]")
    g = gcd(p, q)
    p, q = p // g, q // g
    ups = upsilon(p, q)
    if (q + 1) % p == 0:
        family = FAMILY_P_DIVIDES_Q_PLUS_1
    elif q % ups == 0:
        family = FAMILY_UPSILON_DIVIDES_Q
    elif ups == 2 and q % 2 == 1:
        family = FAMILY_UPSILON2_ODD_Q
    else:
        family = FAMILY_GENERAL
    return UpsilonProfile(p, q, ups, ell_index(p, q), delta_index(p, q), family)


@dataclass(frozen=True)
class StepReport:
    """The four equivalent step conditions, evaluated exactly.

    For the m-th step and numerator n, the conditions are
      i)   a_{m+1} >= n*a_m**2 - a_m + 1
      ii)  b_m = n*a_m            (n/b_m is the best numerator-n choice)
      iii) phi(e_{m-1}) >= n
      iv)  e_{m-1} <= n/(n*a_m - 1)
    They provably coincide, so step_report raises InvariantViolation if
    they ever disagree: a disagreement is an implementation bug, never a
    mathematical outcome.
    """

    m: int
    a_m: int
    n: int
    b_m: int
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    phi_value: Fraction

    @property
    def holds(self) -> bool:
        return self.cond_i

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "a_m": str(self.a_m),
            "n": self.n,
            "b_m": str(self.b_m),
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "cond_iv": self.cond_iv,
            "phi_value": rational.to_json(self.phi_value),
        }


def step_report(theta: Fraction, m: int, n: int) -> StepReport:
    """Evaluate conditions i)-iv) at step m for numerator n and check they agree."""
    _require_unit_interval(theta)
    if m < 1 or n < 1:
        raise DomainError("m and n must be positive integers")
    steps = greedy_steps(theta)
    e_before = theta  # ends as e_{m-1}
    e_after = theta
    a_m = 0
    for _ in range(m):
        e_before = e_after
        a_m, e_after = next(steps)
    a_next, _ = next(steps)

    b_m = superior_denominator(e_before, n)
    phi_value = phi(e_before)

    cond_i = a_next >= n * a_m * a_m - a_m + 1
    cond_ii = b_m == n * a_m
    cond_iii = phi_value >= n
    cond_iv = e_before <= Fraction(n, n * a_m - 1)

    if not cond_i == cond_ii == cond_iii == cond_iv:
        raise InvariantViolation(
            f"step conditions disagree at theta={theta}, m={m}, n={n}: "
            f"{cond_i}, {cond_ii}, {cond_iii}, {cond_iv}"
        )
    return StepReport(m, a_m, n, b_m, cond_i, cond_ii, cond_iii, cond_iv, phi_value)


def _check_against_expansion(p: int, q: int, terms: list[int]) -> list[int]:
    computed = expand(Fraction(p, q), len(terms)).terms
    if computed != terms:
        raise InvariantViolation(
            f"closed form disagrees with the greedy expansion of {p}/{q}: "
            f"{terms} vs {computed}"
        )
    return terms


def closed_form_upsilon_divides_q(p: int, q: int, m: int) -> list[int]:
    """Expansion terms when upsilon(p, q) divides q.

    a_1 = (q + upsilon)/p and a_n = (q/upsilon) * prod(a_1..a_{n-1}) + 1
    for n >= 2. The result is verified against the greedy expansion.
    """
    if m < 1:
        raise DomainError("term count must be >= 1")
    if p < 1 or q < 1 or p > q:
        raise DomainError("expected p/q in (0, 1]")
    ups = upsilon(p, q)
    if q % ups != 0:
        raise DomainError(f"upsilon({p},{q}) = {ups} does not divide {q}")
    terms = [(q + ups) // p]
    prod = terms[0]
    base = q // ups
    for _ in range(m - 1):
        a = base * prod + 1
        terms.append(a)
        prod *= a
    return _check_against_expansion(p, q, terms)


def closed_form_upsilon2_odd_q(p: int, q: int, m: int) -> list[int]:
    """Expansion terms when q is odd and upsilon(p, q) = 2.

    a_1 = (q+2)/p, a_2 = floor(q*a_1/2) + 1, and
    a_n = q * prod(a_1..a_{n-1}) + 1 for n >= 3; verified against greedy.
    """
    if m < 1:
        raise DomainError("term count must be >= 1")
    if p < 1 or q < 1 or p > q:
        raise DomainError("expected p/q in (0, 1]")
    if q % 2 == 0:
        raise DomainError("q must be odd")
    if upsilon(p, q) != 2:
        raise DomainError(f"upsilon({p},{q}) must be 2")
    terms = [(q + 2) // p]
    if m >= 2:
        terms.append((q * terms[0]) // 2 + 1)
        prod = terms[0] * terms[1]
        for _ in range(m - 2):
            a = q * prod + 1
            terms.append(a)
            prod *= a
    return _check_against_expansion(p, q, terms)


def closed_form_p_divides_q_plus_1(p: int, q: int, m: int) -> list[int]:
    """Expansion terms when p divides q + 1.

    a_1 = (q+1)/p and a_{n+1} = q * prod(a_1..a_n) + 1. For p = 1 this
    collapses to the quadratic recurrence a_{n+1} = a_n**2 - a_n + 1
    (with a_1 = q + 1), which is asserted as well. Verified against greedy.
    """
    if m < 1:
        raise DomainError("term count must be >= 1")
    if p < 1 or q < 1 or p > q:
        raise DomainError("expected p/q in (0, 1]")
    if (q + 1) % p != 0:
        raise DomainError(f"{p} does not divide {q} + 1")
    terms = [(q + 1) // p]
    prod = terms[0]
    for _ in range(m - 1):
        a = q * prod + 1
        terms.append(a)
        prod *= a
    if p == 1:
        for i in range(1, len(terms)):
            if terms[i] != terms[i - 1] ** 2 - terms[i - 1] + 1:
                raise InvariantViolation(
                    f"p = 1 family must follow the quadratic recurrence, "
                    f"broken at index {i + 1} for q = {q}"
                )
    return _check_against_expansion(p, q, terms)


def eventual_quadratic_recurrence(p: int, q: int, horizon: int) -> bool:
    """Check a_{n+1} = a_n**2 - a_n + 1 for all ell+1 <= n < horizon.

    For reduced p/q the residual after ell steps has an integral
    reciprocal, which forces the recurrence from index ell + 1 on; this
    verifies that fact on the computed prefix. (The recurrence often
    starts earlier; Expansion.recurrence_start records the observed
    index.)
    """
    ell = ell_index(p, q)
    if horizon < 1:
        raise DomainError("horizon must be >= 1")
    terms = expand(Fraction(p, q), horizon).terms
    return all(
        terms[i] == terms[i - 1] * terms[i - 1] - terms[i - 1] + 1
        for i in range(ell + 1, horizon)
    )


def growth_condition_check(seq: Sequence[int], n: int, cubic: bool = False) -> bool:
    """Check the growth inequality along a finite denominator prefix.

    Default form: c_{k+1} >= n*c_k**2 - c_k + 1 for every consecutive
    pair (targets whose expansions satisfy it at every step are exactly
    those where the greedy term ties the best numerator-n choice forever,
    and they are all irrational). With ``cubic=True`` the inequality
    checked is c_{k+1} >= c_k**3 - c_k + 1 and, when some prefix element
    reaches n, the first such 1-based index is asserted to be <= n.

    Only the finitely many stated inequalities are checked; no claim is
    made about any infinite tail.
    """
    if not seq:
        raise DomainError("sequence must be nonempty")
    if seq[0] < 2:
        raise DomainError("first term must be >= 2")
    if n < 1:
        raise DomainError("n must be a positive integer")
    if cubic:
        ok = all(seq[i + 1] >= seq[i] ** 3 - seq[i] + 1 for i in range(len(seq) - 1))
        if ok:
            m_n = cubic_growth_index(seq, n)
            if m_n is not None and m_n > n:
                raise InvariantViolation(
                    f"first index with c_m >= {n} is {m_n} > {n}"
                )
        return ok
    return all(seq[i + 1] >= n * seq[i] ** 2 - seq[i] + 1 for i in range(len(seq) - 1))


def cubic_growth_index(seq: Sequence[int], n: int) -> Optional[int]:
    """First 1-based index with seq[i] >= n, or None if the prefix stays below."""
    for i, c in enumerate(seq, start=1):
        if c >= n:
            return i
    return None
