"""Pure-Python sweep kernels.

These are the hot inner loops of the verification sweeps, written in
integer-only arithmetic (floors via integer division, comparisons via
cross-multiplication) so that a sweep over tens of thousands of points
never allocates a Fraction. `egfrac._kernels_c` carries compiled twins of
each function; `egfrac._backend` picks between the two at call time.

All functions here are exact for arbitrarily large inputs.
"""

from __future__ import annotations

from math import gcd


def two_term_scan(p: int, q: int) -> tuple[int, int, int, int, list[tuple[int, int]]]:
    """Complete search for the best two-term underapproximation of p/q.

    Requires 0 < p/q <= 1 in lowest terms. Returns
    ``(a1, a2, best_num, best_den, tuples)`` where (a1, a2) is the greedy
    pair, best_num/best_den the optimal sum in lowest terms, and tuples
    the sorted list of every optimal pair (x1 <= x2), ties included.

    Completeness: any pair summing to at least the greedy sum S has
    1/x1 >= S/2, so x1 <= floor(2/S); for each x1 the unique best partner
    is the largest unit fraction below p/q - 1/x1.
    """
    a1 = q // p + 1
    r_num, r_den = p * a1 - q, q * a1
    a2 = r_den // r_num + 1

    s_num, s_den = a1 + a2, a1 * a2
    x1_hi = (2 * s_den) // s_num

    best_num, best_den = s_num, s_den
    found = {(a1, a2)}
    for x1 in range(a1, x1_hi + 1):
        rn, rd = p * x1 - q, q * x1
        x2 = rd // rn + 1
        c_num, c_den = x1 + x2, x1 * x2
        lhs = c_num * best_den
        rhs = best_num * c_den
        if lhs > rhs:
            best_num, best_den = c_num, c_den
            found = {(x1, x2) if x1 <= x2 else (x2, x1)}
        elif lhs == rhs:
            found.add((x1, x2) if x1 <= x2 else (x2, x1))

    g = gcd(best_num, best_den)
    return a1, a2, best_num // g, best_den // g, sorted(found)


def lp1_point(q: int, u: int, s: int, v: int) -> bool:
    """Point check of the divisor-offset-2 floor inequality.

    floor(qu(u+s) / (s(q+2)+2u)) > (qu+v)u(u+s) / (squ+vs+2u(u+s)) - 1,
    decided exactly by cross-multiplication.
    """
    lhs = (q * u * (u + s)) // (s * (q + 2) + 2 * u)
    num = (q * u + v) * u * (u + s)
    den = s * q * u + v * s + 2 * u * (u + s)
    return (lhs + 1) * den > num


def lp11_point(q: int, u: int, s: int, v: int) -> bool:
    """Point check of the divisor-offset-3 floor inequality (general s)."""
    lhs = (q * u * (u + s)) // (s * (q + 3) + 3 * u)
    num = (q * u + v) * u * (u + s)
    den = s * q * u + v * s + 3 * u * (u + s)
    return (lhs + 1) * den > num


def lp50_point(q: int, u: int) -> bool:
    """Point check of the divisor-offset-3 inequality at s = 1, v = 3."""
    lhs = (q * u * (u + 1)) // (q + 3 * (u + 1))
    num = (q * u + 3) * u * (u + 1)
    den = q * u + 3 + 3 * u * (u + 1)
    return (lhs + 1) * den > num


def lp12_point(s: int) -> bool:
    """Point check of floor(61(8+s)/(8s+3)) > 3912(8+s)/(513s+192) - 1."""
    lhs = (61 * (8 + s)) // (8 * s + 3)
    return (lhs + 1) * (513 * s + 192) > 3912 * (8 + s)


def lp12_point_is_equality(s: int) -> bool:
    """True when the two sides of the lp12 inequality agree exactly."""
    lhs = (61 * (8 + s)) // (8 * s + 3)
    return (lhs + 1) * (513 * s + 192) == 3912 * (8 + s)
