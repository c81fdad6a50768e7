"""Truncated formal power series in q with exact integer coefficients.

A series is a dense coefficient vector c[0..N] representing
c[0] + c[1] q + ... + c[N] q^N; N is the order (highest retained
exponent).  All arithmetic is exact.  Binary operations truncate the
result to the smaller of the two input orders, so a coefficient is
never reported unless it is fully determined.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class NonUnitConstantTerm(ValueError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


def _conv_nonneg(xs: Sequence[int], ys: Sequence[int], n_out: int, width: int) -> list[int]:
    # Kronecker substitution: pack each nonnegative sequence into one big
    # integer with `width` bytes per coefficient, multiply once, unpack.
    px = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in xs), "little")
    py = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in ys), "little")
    prod = px * py
    total = width * (n_out + 1)
    raw = prod.to_bytes(max(total, (prod.bit_length() + 7) // 8 + 1), "little")[:total]
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little")
        for i in range(n_out + 1)
    ]


def _mul_lists(xs: Sequence[int], ys: Sequence[int], n_out: int) -> list[int]:
    """Exact truncated convolution of two integer sequences.

    Implemented by splitting into nonnegative parts and using integer
    packing; equals schoolbook convolution coefficient by coefficient
    (that equality is a tested property).
    """
    xs = xs[: n_out + 1]
    ys = ys[: n_out + 1]
    mx = max((abs(c) for c in xs), default=0)
    my = max((abs(c) for c in ys), default=0)
    if mx == 0 or my == 0:
        return [0] * (n_out + 1)
    bound = mx * my * min(len(xs), len(ys))
    width = (bound.bit_length() + 8) // 8
    xp = [c if c > 0 else 0 for c in xs]
    xn = [-c if c < 0 else 0 for c in xs]
    yp = [c if c > 0 else 0 for c in ys]
    yn = [-c if c < 0 else 0 for c in ys]
    out = _conv_nonneg(xp, yp, n_out, width)
    if any(xn) and any(yn):
        nn = _conv_nonneg(xn, yn, n_out, width)
        out = [a + b for a, b in zip(out, nn)]
    if any(xp) and any(yn):
        pn = _conv_nonneg(xp, yn, n_out, width)
        out = [a - b for a, b in zip(out, pn)]
    if any(xn) and any(yp):
        np_ = _conv_nonneg(xn, yp, n_out, width)
        out = [a - b for a, b in zip(out, np_)]
    return out


class TruncatedSeries:
    """Immutable dense series truncated at a fixed order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self._coeffs = cs

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} outside truncation order {self.order}")
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        """c * q^e truncated at `order`; zero series if e exceeds the order."""
        cs = [0] * (order + 1)
        if 0 <= exponent <= order:
            cs[exponent] = coeff
        return cls(cs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[i] - b[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(_mul_lists(self._coeffs, other._coeffs, n))

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries([c * x for x in self._coeffs])

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return invert(self) ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self._coeffs)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Sum truncated at min(a.order, b.order)."""
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(a.order, b.order)."""
    return a * b


def schoolbook_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Reference O(N^2) convolution; the oracle that `mul` must match."""
    n = min(a.order, b.order)
    bc = b.coeffs
    out = [0] * (n + 1)
    for i, ca in enumerate(a.coeffs[: n + 1]):
        if ca == 0:
            continue
        for j in range(n - i + 1):
            out[i + j] += ca * bc[j]
    return TruncatedSeries(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires constant term +1 or -1.

    Newton iteration doubling the correct prefix each round, so every
    retained coefficient is exact.
    """
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(
            f"cannot invert series with constant term {c0}; need +1 or -1"
        )
    n = a.order
    inv = [c0]
    prec = 1
    while prec <= n:
        prec = min(2 * prec, n + 1)
        # inv <- inv*(2 - a*inv) computed modulo q^prec
        t = _mul_lists(a.coeffs[:prec], inv, prec - 1)
        t[0] = 2 - t[0]
        for i in range(1, prec):
            t[i] = -t[i]
        inv = _mul_lists(inv, t, prec - 1)
    return TruncatedSeries(inv)


def substitute_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a(q^k): coefficient of q^(k*i) is a(i), all others 0.

    The result keeps every input coefficient, so its order is k*a.order.
    """
    if k < 1:
        raise ValueError("substitution power must be a positive integer")
    out = [0] * (k * a.order + 1)
    for i, c in enumerate(a.coeffs):
        out[k * i] = c
    return TruncatedSeries(out)


def shift(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """q^e * a(q); order grows to a.order + e."""
    if e < 0:
        raise ValueError("shift exponent must be nonnegative")
    return TruncatedSeries((0,) * e + a.coeffs)


def dissect(a: TruncatedSeries, k: int, l: int) -> TruncatedSeries:
    """Arithmetic-progression extract: result(n) = a(k*n + l), compressed.

    The result order is floor((a.order - l) / k).
    """
    if k < 1 or not 0 <= l < k:
        raise ValueError(f"dissection needs 0 <= l < k, got k={k}, l={l}")
    if l > a.order:
        raise ValueError(f"residue {l} exceeds series order {a.order}")
    return TruncatedSeries(a.coeffs[l::k])
