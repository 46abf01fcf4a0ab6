"""Dense truncated power series over arbitrary-precision integers.

A series of precision N stores exactly its first N coefficients (the series
is known modulo q**N).  All binary operations require both operands to have
the same precision; there is no implicit resizing.  Series values are
immutable, and every operation is a pure function, so concurrent use on
shared inputs is safe.

Multiplication below ``KRONECKER_THRESHOLD`` uses schoolbook convolution.
Above it, both operands are packed into single large integers (Kronecker
substitution) and the whole truncated product is obtained from one
big-integer multiplication, delegated to GMP via gmpy2.
"""

from gmpy2 import mpz

# Series length at which packed multiplication takes over from schoolbook.
# Not derived from anything: a tunable, overridable per call via the
# ``threshold`` argument of mul_low.
KRONECKER_THRESHOLD = 32


class Series:
    """Integer power series truncated to its first ``precision`` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self._coeffs = cs

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        if self.precision <= 12:
            body = ", ".join(map(str, self._coeffs))
        else:
            body = ", ".join(map(str, self._coeffs[:12])) + ", ..."
        return f"Series([{body}], precision={self.precision})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul_low(self, other)


def series_const(c: int, precision: int) -> Series:
    """The constant series c + 0*q + ... + 0*q**(precision-1)."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    return Series([int(c)] + [0] * (precision - 1))


def geometric_term(h: int, precision: int) -> Series:
    """The series q**h / (1 - q**h) truncated to ``precision`` coefficients.

    Coefficient 1 at every positive multiple of h below the precision,
    0 elsewhere (the all-zero series once h >= precision).
    """
    if h < 1:
        raise ValueError("exponent h must be >= 1")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    coeffs = [0] * precision
    for i in range(h, precision, h):
        coeffs[i] = 1
    return Series(coeffs)


def _require_same_precision(a: Series, b: Series):
    if a.precision != b.precision:
        raise ValueError(
            f"precision mismatch: {a.precision} != {b.precision}"
        )


def add(a: Series, b: Series) -> Series:
    _require_same_precision(a, b)
    return Series([x + y for x, y in zip(a.coeffs, b.coeffs)])


def sub(a: Series, b: Series) -> Series:
    _require_same_precision(a, b)
    return Series([x - y for x, y in zip(a.coeffs, b.coeffs)])


def shift_left_trunc(a: Series, k: int) -> Series:
    """q**k * a modulo q**precision: shift coefficients up, dropping the top k."""
    if k < 0:
        raise ValueError("shift amount must be >= 0")
    n = a.precision
    if k == 0:
        return a
    if k >= n:
        return Series([0] * n)
    return Series((0,) * k + a.coeffs[: n - k])


def _convolve_schoolbook(a, b, n):
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(n - i, len(b))):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _pack(coeffs, slot_bytes, negate):
    """Pack nonnegative (or negated-negative) coefficients into one integer.

    Returns sum of c_i * 2**(8*slot_bytes*i) over the selected coefficients,
    built through a byte buffer so the cost is linear in the packed size.
    """
    buf = bytearray(len(coeffs) * slot_bytes)
    seen = False
    if negate:
        for i, c in enumerate(coeffs):
            if c < 0:
                c = -c
                nb = (c.bit_length() + 7) >> 3
                off = i * slot_bytes
                buf[off : off + nb] = c.to_bytes(nb, "little")
                seen = True
    else:
        for i, c in enumerate(coeffs):
            if c > 0:
                nb = (c.bit_length() + 7) >> 3
                off = i * slot_bytes
                buf[off : off + nb] = c.to_bytes(nb, "little")
                seen = True
    if not seen:
        return mpz(0)
    return mpz.from_bytes(bytes(buf), "little")


def _convolve_kronecker(a, b, n):
    """Truncated convolution via Kronecker substitution.

    Each operand f is evaluated at 2**w (w = slot width in bits), so that the
    single product f(2**w) * g(2**w) equals (f*g)(2**w).  The slot width is
    chosen from the exact coefficient bit lengths so every convolution
    coefficient fits strictly inside (-2**(w-1), 2**(w-1)); the product is
    then decoded slot by slot in balanced (two's-complement style) digits,
    propagating a carry whenever a slot value falls in the negative half.
    """
    bits_a = max(c.bit_length() for c in a)
    bits_b = max(c.bit_length() for c in b)
    if bits_a == 0 or bits_b == 0:
        return [0] * n
    min_len = min(len(a), len(b))
    w = bits_a + bits_b + (min_len - 1).bit_length() + 1
    w = (w + 7) & ~7  # byte-align slots
    slot_bytes = w >> 3

    pa = _pack(a, slot_bytes, False) - _pack(a, slot_bytes, True)
    pb = _pack(b, slot_bytes, False) - _pack(b, slot_bytes, True)
    prod = pa * pb
    del pa, pb

    sign = 1
    if prod < 0:
        prod = -prod
        sign = -1
    nbytes = max(n * slot_bytes, (prod.bit_length() + 7) >> 3)
    buf = prod.to_bytes(nbytes, "little")
    del prod

    half = 1 << (w - 1)
    full = 1 << w
    out = []
    carry = 0
    from_bytes = int.from_bytes
    for k in range(n):
        off = k * slot_bytes
        v = from_bytes(buf[off : off + slot_bytes], "little") + carry
        if v >= half:
            v -= full
            carry = 1
        else:
            carry = 0
        out.append(v if sign > 0 else -v)
    return out


def _mul_low_coeffs(a, b, n, threshold=None):
    if threshold is None:
        threshold = KRONECKER_THRESHOLD
    if n < threshold:
        return _convolve_schoolbook(a, b, n)
    return _convolve_kronecker(a, b, n)


def mul_low(a: Series, b: Series, threshold: int | None = None) -> Series:
    """Product truncated to the common precision.

    Coefficient k of the result is sum of a_i * b_j over i + j = k, for
    k < precision.  ``threshold`` overrides KRONECKER_THRESHOLD for this
    call (series shorter than the threshold use schoolbook convolution,
    the rest the packed path); both paths produce identical output.
    """
    _require_same_precision(a, b)
    return Series(_mul_low_coeffs(a.coeffs, b.coeffs, a.precision, threshold))


def invert(a: Series) -> Series:
    """Multiplicative inverse modulo q**precision by Newton iteration.

    Requires constant term +1 or -1 (the units of the integer-coefficient
    series ring, and the only constant terms the package ever inverts).
    Working precision doubles each step, 1, 2, 4, ..., capped at the target
    precision on the last step; every intermediate value is an exact
    integer, so no rounding is involved.
    """
    c0 = a.coeffs[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("non-invertible series: constant term must be +1 or -1")
    n = a.precision
    inv = [c0]
    m = 1
    while m < n:
        m = min(2 * m, n)
        pad = [0] * (m - len(inv))
        t = _mul_low_coeffs(a.coeffs[:m], inv + pad, m)
        # correction 2 - a*inv, then inv <- inv * correction
        t[0] = 2 - t[0]
        for i in range(1, m):
            t[i] = -t[i]
        inv = _mul_low_coeffs(inv + pad, t, m)
    return Series(inv)


def div_series(num: Series, den: Series) -> Series:
    """num / den modulo q**precision, i.e. mul_low(num, invert(den))."""
    _require_same_precision(num, den)
    return mul_low(num, invert(den))
