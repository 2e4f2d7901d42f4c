"""Chebyshev recurrences, tridiagonal determinants, and characteristic polynomials.

The convention here pairs T_0 = 1, T_1 = x with U_0 = 0, U_1 = 1, so that
T_n(cos t) = cos(n t) and U_n(cos t) * sin(t) = sin(n t). All trigonometric
closed forms are evaluated through these polynomials in c = cos(t) rather
than through arccos, so every expression stays defined when |c| > 1 (the
sin denominators of the printed formulas cancel symbolically).
"""

from __future__ import annotations

import math

from .errors import DomainError

BISECTION_WIDTH = 1e-10


def chebyshev_pair(n: int, x: float) -> tuple[float, float]:
    """(T_n(x), U_n(x)) by the coupled two-term recurrence."""
    if n < 0:
        raise DomainError("chebyshev degree must be nonnegative")
    t_prev, u_prev = 1.0, 0.0
    if n == 0:
        return t_prev, u_prev
    t, u = x, 1.0
    for _ in range(n - 1):
        t_prev, t = t, 2.0 * x * t - t_prev
        u_prev, u = u, 2.0 * x * u - u_prev
    return t, u


def chebyshev_t(n: int, x: float) -> float:
    return chebyshev_pair(n, x)[0]


def chebyshev_u(n: int, x: float) -> float:
    return chebyshev_pair(n, x)[1]


def tridiag_det(n: int, a: float, b: float) -> float:
    """Determinant of the n x n tridiagonal matrix with diagonal a, bands b.

    Follows |A_0| = 1, |A_1| = a, |A_i| = a |A_{i-1}| - b^2 |A_{i-2}|, which
    equals b^n * U_{n+1}(a / 2b) for b != 0 and remains valid for |a/2b| > 1.
    """
    if n < 0:
        raise DomainError("matrix order must be nonnegative")
    prev, cur = 1.0, a
    if n == 0:
        return prev
    bb = b * b
    for _ in range(n - 1):
        prev, cur = cur, a * cur - bb * prev
    return cur


def tail_poly_even(k: int, c: float) -> float:
    """sin-normalized determinant factor of the even loop-tail block.

    Equals (2 sin((k+1)t) + sin(kt) - sin((k-1)t)) / sin(t) at c = cos(t)
    and extends polynomially beyond |c| <= 1.
    """
    if k < 1:
        raise DomainError("tail factor needs k >= 1")
    return 2.0 * chebyshev_u(k + 1, c) + chebyshev_u(k, c) - chebyshev_u(k - 1, c)


def tail_poly_odd(k: int, c: float) -> float:
    """sin-normalized determinant factor of the odd loop-tail block."""
    if k < 1:
        raise DomainError("tail factor needs k >= 1")
    return 2.0 * chebyshev_u(k + 1, c) - chebyshev_u(k, c) - chebyshev_u(k - 1, c)


def _check_nk(n: int, k: int) -> None:
    if n < 3 or k < 3:
        raise DomainError(f"characteristic polynomial needs n >= 3 and k >= 3, got ({n},{k})")


def weighted_path_charpoly(n: int, k: int, lam: float) -> float:
    """det(lam I - normalized Laplacian of the n+k weighted path).

    This is also the even factor of the corresponding two-row ladder graph.
    Substitutions: c_alpha = lam - 1 for the plain segment and
    c_beta = 3 lam / 2 - 1 for the loop segment.
    """
    _check_nk(n, k)
    ca = lam - 1.0
    cb = 1.5 * lam - 1.0
    value = (tail_poly_even(k, cb) * chebyshev_t(n, ca)
             - tail_poly_even(k - 1, cb) * chebyshev_t(n - 1, ca))
    return value / (2.0 ** n * 3.0 ** k)


def roach_odd_charpoly(n: int, k: int, lam: float) -> float:
    """Odd factor of the ladder-graph characteristic polynomial.

    Same shape as the even factor with the odd tail and c_gamma = 3 lam/2 - 2.
    """
    _check_nk(n, k)
    ca = lam - 1.0
    cg = 1.5 * lam - 2.0
    value = (tail_poly_odd(k, cg) * chebyshev_t(n, ca)
             - tail_poly_odd(k - 1, cg) * chebyshev_t(n - 1, ca))
    return value / (2.0 ** n * 3.0 ** k)


def roach_charpoly(n: int, k: int, lam: float) -> float:
    """det(lam I - normalized Laplacian of R) as the even * odd product."""
    return weighted_path_charpoly(n, k, lam) * roach_odd_charpoly(n, k, lam)


def normalized_path_charpoly(n: int, lam: float) -> float:
    """det(lam I - normalized Laplacian of the n-path).

    Polynomial form of -(1/2)^{n-2} sin(t) sin((n-1)t) at lam = 1 + cos(t):
    -(1/2)^{n-2} (1 - c^2) U_{n-1}(c) with c = lam - 1.
    """
    if n < 2:
        raise DomainError("path characteristic polynomial needs n >= 2")
    c = lam - 1.0
    return -(0.5 ** (n - 2)) * (1.0 - c * c) * chebyshev_u(n - 1, c)


def weighted_path_lambda2_bound(k: int) -> float:
    """Lower bound 1 - cos(pi / (4k-1)) on lambda2 of the balanced weighted path."""
    if k < 3:
        raise DomainError("lambda2 bound needs k >= 3")
    return 1.0 - math.cos(math.pi / (4 * k - 1))


def bracket_roots(fn, steps: int, lo: float = 0.0, hi: float = 2.0,
                  width: float = BISECTION_WIDTH) -> list[tuple[float, float]]:
    """Sign-change brackets of fn on [lo, hi], each refined by bisection.

    Tangential roots produce no sign change and are missed, so the returned
    count is a lower bound on the number of roots.
    """
    if steps < 1:
        raise DomainError("grid needs at least one step")
    if not hi > lo:
        raise DomainError("empty interval")
    xs = [lo + (hi - lo) * i / steps for i in range(steps + 1)]
    vals = [fn(x) for x in xs]
    out = []
    for (a, fa), (b, fb) in zip(zip(xs, vals), zip(xs[1:], vals[1:])):
        if fa == 0.0:
            out.append((a, a))
            continue
        if fa * fb >= 0.0:
            continue
        while b - a > width:
            mid = 0.5 * (a + b)
            fm = fn(mid)
            if fm == 0.0:
                a = b = mid
                break
            if fa * fm < 0.0:
                b, fb = mid, fm
            else:
                a, fa = mid, fm
        out.append((a, b))
    if vals[-1] == 0.0:
        out.append((xs[-1], xs[-1]))
    return out
