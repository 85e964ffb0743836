"""Kernel backend selection.

At import time this module loads the compiled sweep kernels when the
extension is present (set ``EGFRAC_BACKEND=pure`` to refuse it, or
``EGFRAC_BACKEND=compiled`` to fail loudly when it is missing). Each
dispatcher below routes a call to the compiled twin only while the inputs
sit inside its int64-safe range, and to the pure-Python kernel otherwise,
so results are exact for arbitrarily large arguments either way.

Safety caps (compiled kernels do all arithmetic in C int64, max ~9.2e18):

* two_term_scan: x1 <= 2(q+1), the partner x2 <= q*x1 + 1 <= 2q(q+1)+1,
  and the largest product formed is best_num*c_den <= (x1+x2)*(x1'*x2')
  < 8(q+1)^5. q <= 3000 keeps that below 2.0e18.
* lp1/lp11 points: with u <= (q+2)/3 and s < u, the floor value is at
  most u(u+s) < (2/9)(q+2)^2 and the comparison product (lhs+1)*den stays
  under (2/9)(q+2)^2 * (1/4)(q+3)^3. q <= 5000 keeps it below 1.8e17.
* lp50 points: bounded by the lp11 case (s = 1), same cap.
* lp12 points: products grow linearly in s; s <= 10**6 is far inside range.
"""

from __future__ import annotations

import os

from . import _kernels_py as _pure

_requested = os.environ.get("EGFRAC_BACKEND", "auto").lower()
if _requested == "pure":
    _compiled = None
else:
    try:
        from . import _kernels_c as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None
        if _requested == "compiled":
            raise ImportError(
                "EGFRAC_BACKEND=compiled but egfrac._kernels_c is not built"
            )

HAVE_COMPILED = _compiled is not None

TWO_TERM_COMPILED_MAX_Q = 3000
LEMMA_COMPILED_MAX_Q = 5000
LP12_COMPILED_MAX_S = 10**6


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure"


def two_term_scan(p: int, q: int):
    if _compiled is not None and q <= TWO_TERM_COMPILED_MAX_Q:
        return _compiled.two_term_scan(p, q)
    return _pure.two_term_scan(p, q)


def lp1_point(q: int, u: int, s: int, v: int) -> bool:
    if _compiled is not None and q <= LEMMA_COMPILED_MAX_Q:
        return _compiled.lp1_point(q, u, s, v)
    return _pure.lp1_point(q, u, s, v)


def lp11_point(q: int, u: int, s: int, v: int) -> bool:
    if _compiled is not None and q <= LEMMA_COMPILED_MAX_Q:
        return _compiled.lp11_point(q, u, s, v)
    return _pure.lp11_point(q, u, s, v)


def lp50_point(q: int, u: int) -> bool:
    if _compiled is not None and q <= LEMMA_COMPILED_MAX_Q:
        return _compiled.lp50_point(q, u)
    return _pure.lp50_point(q, u)


def lp12_point(s: int) -> bool:
    if _compiled is not None and s <= LP12_COMPILED_MAX_S:
        return _compiled.lp12_point(s)
    return _pure.lp12_point(s)


def lp12_point_is_equality(s: int) -> bool:
    if _compiled is not None and s <= LP12_COMPILED_MAX_S:
        return _compiled.lp12_point_is_equality(s)
    return _pure.lp12_point_is_equality(s)
