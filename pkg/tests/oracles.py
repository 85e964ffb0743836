"""Independent brute-force oracles used to cross-check the library.

Deliberately plain: bounded loops over elementary complete ranges and
Fraction arithmetic, sharing no code with the search implementations they
check. The enumeration ranges are the provable ones: any tuple whose sum
reaches the greedy m-term sum S has 1/x1 >= S/m, and given x1 (always at
least the greedy first term, so S - 1/x1 > 0) the next denominator
satisfies 1/x2 >= (S - 1/x1)/(m-1); the last position is filled by the
largest feasible unit fraction.
"""

from __future__ import annotations

from fractions import Fraction


def smallest_denominator_below(r: Fraction) -> int:
    """Smallest x with 1/x strictly below r, self-checked."""
    x = r.denominator // r.numerator + 1
    assert Fraction(1, x) < r
    assert x == 1 or r <= Fraction(1, x - 1)
    return x


def greedy_prefix(p: int, q: int, m: int) -> tuple[list[int], Fraction]:
    r = Fraction(p, q)
    terms = []
    for _ in range(m):
        x = smallest_denominator_below(r)
        terms.append(x)
        r -= Fraction(1, x)
    return terms, r


def brute_force_superior_denominator(e: Fraction, n: int) -> int:
    """Smallest b with n/b < e, found by incrementing from 1."""
    b = 1
    while not Fraction(n, b) < e:
        b += 1
    return b


def naive_best_m_term(p: int, q: int, m: int) -> tuple[Fraction, list[tuple[int, ...]]]:
    """Exhaustive enumeration for m <= 3; returns (optimal sum, argmax tuples)."""
    theta = Fraction(p, q)
    greedy, _ = greedy_prefix(p, q, m)
    floor_sum = sum(Fraction(1, a) for a in greedy)
    a1 = smallest_denominator_below(theta)
    if m == 1:
        return Fraction(1, a1), [(a1,)]

    best = floor_sum
    found = {tuple(greedy)}

    def consider(tup: tuple[int, ...], total: Fraction) -> None:
        nonlocal best, found
        if total >= theta:
            return
        if total > best:
            best, found = total, {tup}
        elif total == best:
            found.add(tup)

    x1_hi = (m * floor_sum.denominator) // floor_sum.numerator
    if m == 2:
        for x1 in range(a1, x1_hi + 1):
            r1 = theta - Fraction(1, x1)
            x2 = max(x1, smallest_denominator_below(r1))
            consider((x1, x2), Fraction(1, x1) + Fraction(1, x2))
        return best, sorted(found)

    assert m == 3, "oracle only covers m <= 3"
    for x1 in range(a1, x1_hi + 1):
        f1 = Fraction(1, x1)
        r1 = theta - f1
        room = floor_sum - f1
        x2_hi = (2 * room.denominator) // room.numerator
        for x2 in range(max(x1, smallest_denominator_below(r1)), x2_hi + 1):
            f2 = Fraction(1, x2)
            r2 = r1 - f2
            x3 = max(x2, smallest_denominator_below(r2))
            consider((x1, x2, x3), f1 + f2 + Fraction(1, x3))
    return best, sorted(found)


def reduced_fractions(q_max: int):
    """All reduced p/q with 1 <= p < q <= q_max, plus 1/1."""
    from math import gcd

    yield 1, 1
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield p, q
