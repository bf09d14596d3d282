"""Power sums over monic polynomials: s_i(n) = sum of a^n over monic a of
degree i, exact in F_q[T] and reduced modulo an irreducible m.

The exact sum is computed by brute-force enumeration and repeated squaring;
it is deliberately simple because it serves as the oracle for everything
else in the package.  Exact degrees grow like i*n, so calls are guarded by
a cost estimate q^i * ceil(log2 n) * (i*n + 1) against a configurable
budget (CostCeilingError beyond it).

The reduced sum s_mod enumerates the same monic polynomials and accumulates
residue powers; it never leaves degree < d and is the workhorse of the
invariant computations.
"""

from __future__ import annotations

from functools import lru_cache

from .digits import base_q_digits
from .errors import (
    ClosedFormWindowError,
    CostCeilingError,
    InternalError,
    OutOfRangeError,
    PrimeFieldOnlyError,
)
from .fieldcore import FieldCtx
from .polyring import FqPoly, Modulus, monic_enumerate, residue_pow

DEFAULT_COST_CEILING = 10**9


def exact_cost(i: int, n: int, ctx: FieldCtx) -> int:
    """Cost estimate for s_exact, in coefficient operations."""
    return ctx.q**i * max(max(n - 1, 0).bit_length(), 1) * (i * n + 1)


def _check_exact_args(i, n):
    if i < 0:
        raise OutOfRangeError(f"i must be >= 0, got {i}")
    if n < 1:
        raise OutOfRangeError(f"n must be >= 1, got {n}")


def s_exact(i: int, n: int, ctx: FieldCtx, budget: int | None = None) -> FqPoly:
    """The exact power sum in F_q[T], by brute force.  This is the oracle."""
    _check_exact_args(i, n)
    limit = DEFAULT_COST_CEILING if budget is None else budget
    cost = exact_cost(i, n, ctx)
    if cost > limit:
        raise CostCeilingError(
            f"s_exact(i={i}, n={n}) estimated cost {cost} exceeds budget {limit}")
    return _s_exact_cached(i, n, ctx)


@lru_cache(maxsize=4096)
def _s_exact_cached(i, n, ctx):
    total = FqPoly.zero(ctx)
    for a in monic_enumerate(ctx, i):
        total = total + a**n
    return total


def s_mod(i: int, n: int, m: Modulus) -> FqPoly:
    """The power sum reduced mod m; equals s_exact reduced, computed directly."""
    if not 0 <= i <= m.d - 1:
        raise OutOfRangeError(f"i={i} outside [0, d-1] = [0, {m.d - 1}]")
    if not 1 <= n <= m.group_order - 1:
        raise OutOfRangeError(
            f"n={n} outside [1, q^d-2] = [1, {m.group_order - 1}]")
    total = FqPoly.zero(m.ctx)
    for a in monic_enumerate(m.ctx, i):
        power = residue_pow(a, n, m)
        # monic a of degree i < d is a unit mod m, so a^n cannot vanish
        if power.is_zero():
            raise InternalError(
                f"unit power vanished mod {m!r}: a^{n} = 0 for monic degree {i}")
        total = total + power
    return total


def s1_closed_form(n: int, ctx: FieldCtx) -> FqPoly:
    """Degree-one power sum from the binomial closed form, prime fields only.

    For n = a + b*p with 0 <= a, b <= p-1 and p-1 <= a+b < 2(p-1):
        s_1(n) = -C(b, p-1-a) * (T^p - T)^(a+b-(p-1)).
    The window is enforced because the formula demonstrably fails at
    a+b = 2(p-1); the brute-force oracle always wins.
    """
    if ctx.e != 1:
        raise PrimeFieldOnlyError("closed form requires q = p")
    p = ctx.p
    if n < 1:
        raise OutOfRangeError(f"n must be >= 1, got {n}")
    if n >= p * p:
        raise ClosedFormWindowError(n, f"n has more than two base-{p} digits")
    a, b = n % p, n // p
    if not p - 1 <= a + b < 2 * (p - 1):
        raise ClosedFormWindowError(
            n, f"digit sum {a + b} outside [{p - 1}, {2 * (p - 1)})")
    binom = _binomial_mod_p(b, p - 1 - a, p)
    coeff = (-binom) % p
    tp_minus_t = FqPoly(ctx, [0, (-1) % p] + [0] * (p - 2) + [1], check=False)
    return (tp_minus_t ** (a + b - (p - 1))).scale(coeff)


def _binomial_mod_p(top, k, p):
    if k < 0 or k > top:
        return 0
    num = den = 1
    for j in range(k):
        num = num * (top - j) % p
        den = den * (j + 1) % p
    return num * pow(den, -1, p) % p


def f_poly(n: int, ctx: FieldCtx, budget: int | None = None) -> FqPoly:
    """1 + s_1(n), the exact polynomial whose residue decides the zero-class
    degree drop; carries the shift/scale/reversal symmetries for zero-class n."""
    return FqPoly.one(ctx) + s_exact(1, n, ctx, budget=budget)


def frobenius_twist_exponent(n: int, p: int, group_order: int) -> int:
    """p*n reduced into [1, group_order - 1]; the power sums at the twisted
    exponent are the p-th powers of those at n."""
    return p * n % group_order


def digit_sum_cap(n: int, ctx: FieldCtx) -> int:
    """floor(l(n)/(q-1)): power sums s_i(n) vanish for all i beyond it."""
    return sum(base_q_digits(n, ctx.q)) // (ctx.q - 1)
