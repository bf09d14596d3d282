"""Base-q digit combinatorics of exponents.

The digit sum ell(n) of n = a_0 + a_1 q + ... controls everything downstream:
the expected degree of the generating polynomial attached to n (target_degree)
and the digit-stripping recursion rho whose iterated partial sums bound the
degrees of the power sums.  deg 0 = -inf is modelled by the float NEG_INF,
which already satisfies NEG_INF + x = NEG_INF and NEG_INF < x for every int.

n is in the zero class when (q - 1) | n; since ell(n) = n mod (q - 1), this
is equivalent to (q - 1) | ell(n).  For q = 2 every exponent is zero-class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError
from .fieldcore import FieldCtx
from .polyring import NEG_INF


def base_q_digits(n: int, q: int, width: int | None = None) -> tuple[int, ...]:
    """Digits of n >= 0 in base q, least significant first, padded to width."""
    digits = []
    while n > 0:
        n, r = divmod(n, q)
        digits.append(r)
    if width is not None:
        if len(digits) > width:
            raise OutOfRangeError(f"n needs more than {width} base-{q} digits")
        digits.extend([0] * (width - len(digits)))
    return tuple(digits)


def ell(n: int, q: int) -> int:
    """The base-q digit sum l(n)."""
    return sum(base_q_digits(n, q))


@dataclass(frozen=True)
class DigitProfile:
    n: int
    digits: tuple[int, ...]
    ell: int
    zero_class: bool


def _check_range(n, q, d):
    if not 1 <= n <= q**d - 2:
        raise OutOfRangeError(f"n={n} outside [1, q^d-2] = [1, {q**d - 2}]")


def digit_profile(n: int, ctx: FieldCtx, d: int) -> DigitProfile:
    """Digits of n to width d, digit sum, and zero-class membership."""
    q = ctx.q
    _check_range(n, q, d)
    digits = base_q_digits(n, q, width=d)
    return DigitProfile(n=n, digits=digits, ell=sum(digits),
                        zero_class=n % (q - 1) == 0)


def target_degree(n: int, ctx: FieldCtx, d: int) -> int:
    """The degree the reduced generating polynomial attains iff the field
    is ordinary at n: floor(l(n)/(q-1)), minus one in the zero class."""
    prof = digit_profile(n, ctx, d)
    t = prof.ell // (ctx.q - 1)
    return t - 1 if prof.zero_class else t


def rho(n: int, q: int):
    """One digit-stripping step.

    -inf when l(n) < q - 1; otherwise n minus its q - 1 smallest base-q
    power terms, the powers listed with digit multiplicity.
    """
    if n == NEG_INF:
        return NEG_INF
    digits = list(base_q_digits(n, q))
    if sum(digits) < q - 1:
        return NEG_INF
    remaining = q - 1
    for j, a in enumerate(digits):
        take = a if a < remaining else remaining
        digits[j] -= take
        remaining -= take
        if remaining == 0:
            break
    out = 0
    for j in range(len(digits) - 1, -1, -1):
        out = out * q + digits[j]
    return out


def rho_exponents(n: int, q: int) -> tuple[int, ...]:
    """The ascending exponent list e_1 <= e_2 <= ... with n = sum q^(e_i),
    each digit position repeated with its multiplicity."""
    out = []
    for j, a in enumerate(base_q_digits(n, q)):
        out.extend([j] * a)
    return tuple(out)


def rho_sequence(n: int, ctx: FieldCtx) -> tuple:
    """Iterates rho from n until the first -inf (inclusive)."""
    if n < 0:
        raise OutOfRangeError(f"n must be >= 0, got {n}")
    q = ctx.q
    seq = []
    cur = n
    while True:
        cur = rho(cur, q)
        seq.append(cur)
        if cur == NEG_INF:
            return tuple(seq)


def gekeler_degree_bound(i: int, n: int, ctx: FieldCtx):
    """rho(n) + rho^(2)(n) + ... + rho^(i)(n); the empty sum (i = 0) is 0.

    -inf as soon as any summand is.  This bounds the degree of the i-th
    power sum at n, with equality over prime fields.
    """
    if i < 0:
        raise OutOfRangeError(f"i must be >= 0, got {i}")
    q = ctx.q
    total = 0
    cur = n
    for _ in range(i):
        cur = rho(cur, q)
        if cur == NEG_INF:
            return NEG_INF
        total += cur
    return total
