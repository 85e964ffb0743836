# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python sweep kernels.

All arithmetic runs in C int64, so these are only exact while every
intermediate product stays below 2**63. `egfrac._backend` enforces the
input caps under which that is guaranteed (worst-case bounds are derived
there); out-of-range calls are routed to `egfrac._kernels_py` instead.
Semantics are otherwise identical to the pure kernels.
"""


cdef long long _gcd(long long a, long long b) noexcept:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def two_term_scan(long long p, long long q):
    cdef long long a1 = q // p + 1
    cdef long long r_num = p * a1 - q
    cdef long long r_den = q * a1
    cdef long long a2 = r_den // r_num + 1

    cdef long long s_num = a1 + a2
    cdef long long s_den = a1 * a2
    cdef long long x1_hi = (2 * s_den) // s_num

    cdef long long best_num = s_num
    cdef long long best_den = s_den
    cdef long long x1, x2, rn, rd, c_num, c_den, lhs, rhs, g
    found = {(a1, a2)}
    for x1 in range(a1, x1_hi + 1):
        rn = p * x1 - q
        rd = q * x1
        x2 = rd // rn + 1
        c_num = x1 + x2
        c_den = x1 * x2
        lhs = c_num * best_den
        rhs = best_num * c_den
        if lhs > rhs:
            best_num = c_num
            best_den = c_den
            found = {(x1, x2) if x1 <= x2 else (x2, x1)}
        elif lhs == rhs:
            found.add((x1, x2) if x1 <= x2 else (x2, x1))

    g = _gcd(best_num, best_den)
    return a1, a2, best_num // g, best_den // g, sorted(found)


def lp1_point(long long q, long long u, long long s, long long v):
    cdef long long lhs = (q * u * (u + s)) // (s * (q + 2) + 2 * u)
    cdef long long num = (q * u + v) * u * (u + s)
    cdef long long den = s * q * u + v * s + 2 * u * (u + s)
    return (lhs + 1) * den > num


def lp11_point(long long q, long long u, long long s, long long v):
    cdef long long lhs = (q * u * (u + s)) // (s * (q + 3) + 3 * u)
    cdef long long num = (q * u + v) * u * (u + s)
    cdef long long den = s * q * u + v * s + 3 * u * (u + s)
    return (lhs + 1) * den > num


def lp50_point(long long q, long long u):
    cdef long long lhs = (q * u * (u + 1)) // (q + 3 * (u + 1))
    cdef long long num = (q * u + 3) * u * (u + 1)
    cdef long long den = q * u + 3 + 3 * u * (u + 1)
    return (lhs + 1) * den > num


def lp12_point(long long s):
    cdef long long lhs = (61 * (8 + s)) // (8 * s + 3)
    return (lhs + 1) * (513 * s + 192) > 3912 * (8 + s)


def lp12_point_is_equality(long long s):
    cdef long long lhs = (61 * (8 + s)) // (8 * s + 3)
    return (lhs + 1) * (513 * s + 192) == 3912 * (8 + s)
