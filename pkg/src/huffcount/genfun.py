"""Counting nonequivalent compact Huffman codes by coefficient extraction.

The number of nonequivalent compact Huffman codes over a t-letter alphabet
(equivalently: canonical rooted t-ary trees with a given number of leaves,
or ways of writing 1 as a sum of unit fractions with power-of-t
denominators) has an ordinary generating function of the form

    H(q) = (sum over j >= 0 of (-1)**j * q**e_j * P_j(q))
           / (sum over j >= 0 of (-1)**j * P_j(q)),

where P_j(q) is the product over i = 1..j of q**e_i / (1 - q**e_i) and
e_i = 1 + t + ... + t**(i-1) is the base-t repunit of length i.  The j-th
summand of the denominator has no nonzero coefficient below
s_j = e_1 + ... + e_j, so for the first N coefficients only the summands
with s_j < N matter; that makes numerator and denominator short truncated
series, and the whole sequence falls out of a single series division.

Index convention: value n counts codes with 1 + n*(t-1) code words, so the
result sequences start at n = 0 with value 1 (OEIS A002572, A176485 and
A176503 for t = 2, 3, 4).
"""

from dataclasses import dataclass

from .series import (
    Series,
    add,
    div_series,
    geometric_term,
    mul_low,
    series_const,
    shift_left_trunc,
    sub,
)


@dataclass(frozen=True)
class Params:
    """Problem parameters: alphabet size t >= 2, precision n >= 1."""

    t: int
    n: int

    def __post_init__(self):
        if self.t < 2:
            raise ValueError("alphabet size t must be >= 2")
        if self.n < 1:
            raise ValueError("precision n must be >= 1")


@dataclass(frozen=True)
class GenFunParts:
    """Truncated numerator and denominator of H(q), plus the loop pass count."""

    numerator: Series
    denominator: Series
    terms_used: int


@dataclass(frozen=True)
class SequenceResult:
    """The counts for indices 0..n-1 plus the largest coefficient bit size."""

    t: int
    n: int
    values: tuple
    max_bits: int


def repunit(j: int, t: int) -> int:
    """Base-t repunit of length j: 1 + t + ... + t**(j-1) = (t**j - 1)/(t - 1).

    This is the exponent carried by the j-th geometric factor of the
    generating function.  Exact arbitrary-precision arithmetic, so the
    result is correct for any j (no word-size wraparound is possible).
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if t < 2:
        raise ValueError("alphabet size t must be >= 2")
    return (t**j - 1) // (t - 1)


def repunit_sum(j: int, t: int) -> int:
    """Sum of the repunits of lengths 1..j (0 for j = 0).

    Equals the lowest index of a nonzero coefficient in the j-th summand of
    the generating function's denominator, which is what decides how many
    summands a given precision needs.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    if t < 2:
        raise ValueError("alphabet size t must be >= 2")
    total = 0
    rep = 0
    for _ in range(j):
        rep = 1 + t * rep
        total += rep
    return total


def build_parts(params: Params) -> GenFunParts:
    """Accumulate numerator and denominator of H(q) to precision n.

    One pass per summand: the running product of geometric factors is
    extended by one multiplication, then added to (or subtracted from) the
    denominator, and in shifted form to the numerator.  Both accumulations
    share the same product, so each product is computed exactly once.  The
    loop stops at the first summand whose lowest nonzero index s_j reaches
    the precision; such a summand cannot touch coefficients below n.  The
    numerator update is skipped when the extra shift already pushes the
    whole summand past the precision (e_j + s_j >= n).
    """
    n = params.n
    t = params.t
    numerator = series_const(1, n)
    denominator = series_const(1, n)
    product = series_const(1, n)
    exponent = 0  # repunit(j, t) for the current pass
    low_index = 0  # repunit_sum(j, t)
    sign = 1  # (-1)**j
    passes = 0
    while True:
        exponent = 1 + t * exponent
        low_index += exponent
        sign = -sign
        if low_index >= n:
            break
        product = mul_low(product, geometric_term(exponent, n))
        if sign > 0:
            denominator = add(denominator, product)
        else:
            denominator = sub(denominator, product)
        if exponent + low_index < n:
            shifted = shift_left_trunc(product, exponent)
            if sign > 0:
                numerator = add(numerator, shifted)
            else:
                numerator = sub(numerator, shifted)
        passes += 1
    return GenFunParts(numerator, denominator, passes)


def huffman_counts(params: Params) -> SequenceResult:
    """Counts for all indices below params.n via one series division."""
    parts = build_parts(params)
    quotient = div_series(parts.numerator, parts.denominator)
    values = quotient.coeffs
    return SequenceResult(
        t=params.t,
        n=params.n,
        values=values,
        max_bits=max(v.bit_length() for v in values),
    )


def representation_count(t: int, terms: int, seq: SequenceResult) -> int:
    """Number of codes with exactly ``terms`` code words, read from ``seq``.

    Nonzero only when terms = 1 + n*(t-1) for some n >= 0, in which case it
    is seq.values[n].  ``seq`` must have been computed for the same t and
    reach far enough.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if seq.t != t:
        raise ValueError(f"sequence was computed for t={seq.t}, not t={t}")
    if (terms - 1) % (t - 1) != 0:
        return 0
    index = (terms - 1) // (t - 1)
    if index >= seq.n:
        raise ValueError(
            f"precision too small: need index {index}, sequence has {seq.n}"
        )
    return seq.values[index]
