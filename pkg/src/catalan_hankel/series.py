"""Truncated formal power series in x over Z or Z[t].

A :class:`Series` stores exactly ``order`` known coefficients; everything at
index >= order is unknown, not zero.  Every operation only claims the
coefficients it can prove: binary operations truncate to the smaller operand
order, ``shift`` gains order (the low coefficients of x^k * f are all
determined), and reading past the truncation raises
:class:`TruncationError` instead of fabricating a zero.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .polyring import Scalar, UniPoly


class TruncationError(IndexError):
    """A coefficient beyond the known truncation order was requested."""


class _Ring:
    """Coefficient ring descriptor: zero, one, and scalar coercion."""

    __slots__ = ("name", "zero", "one", "_coerce")

    def __init__(self, name: str, zero, one, coerce: Callable):
        self.name = name
        self.zero = zero
        self.one = one
        self._coerce = coerce

    def coerce(self, value) -> Scalar:
        return self._coerce(self, value)

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


def _coerce_int(ring, value):
    if isinstance(value, int):
        return value
    raise TypeError(f"{value!r} is not a scalar of {ring.name}")


def _coerce_poly(ring, value):
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, int):
        return UniPoly((value,))
    raise TypeError(f"{value!r} is not a scalar of {ring.name}")


INTEGER_RING = _Ring("ZZ", 0, 1, _coerce_int)
POLY_RING = _Ring("ZZ[t]", UniPoly(), UniPoly((1,)), _coerce_poly)


def ring_of(value) -> _Ring:
    if isinstance(value, UniPoly):
        return POLY_RING
    if isinstance(value, int):
        return INTEGER_RING
    raise TypeError(f"{value!r} belongs to no supported coefficient ring")


class Series:
    """Truncation-aware power series with exact coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: _Ring, coeffs: Iterable):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "coeffs", tuple(ring.coerce(c) for c in coeffs)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def one(cls, ring: _Ring, order: int) -> "Series":
        if order < 0:
            raise ValueError("order must be non-negative")
        return cls(ring, (ring.one,) + (ring.zero,) * (order - 1) if order else ())

    @classmethod
    def from_polynomial(cls, ring: _Ring, coeffs: Sequence, order: int) -> "Series":
        """Series of a polynomial: known zero out to the requested order."""
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = list(coeffs[:order])
        cs.extend([ring.zero] * (order - len(cs)))
        return cls(ring, cs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int) -> Scalar:
        """Coefficient of x^n; zero for n < 0, error past the truncation."""
        if n < 0:
            return self.ring.zero
        if n >= len(self.coeffs):
            raise TruncationError(
                f"coefficient {n} requested, series known to order {self.order}"
            )
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(map(bool, self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def _match(self, other: "Series"):
        if self.ring is not other.ring:
            raise TypeError(
                f"mixed coefficient rings: {self.ring.name} vs {other.ring.name}"
            )

    def __add__(self, other):
        if isinstance(other, Series):
            self._match(other)
            n = min(len(self.coeffs), len(other.coeffs))
            return Series(
                self.ring,
                tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)),
            )
        s = self.ring.coerce(other)
        if not self.coeffs:
            return self
        out = list(self.coeffs)
        out[0] = out[0] + s
        return Series(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, Series):
            self._match(other)
            n = min(len(self.coeffs), len(other.coeffs))
            return Series(
                self.ring,
                tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)),
            )
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            self._match(other)
            n = min(len(self.coeffs), len(other.coeffs))
            a, b = self.coeffs, other.coeffs
            out = []
            for m in range(n):
                acc = self.ring.zero
                for i in range(m + 1):
                    acc = acc + a[i] * b[m - i]
                out.append(acc)
            return Series(self.ring, out)
        s = self.ring.coerce(other)
        return Series(self.ring, tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int) or n < 0:
            raise ValueError("series power needs a non-negative integer")
        result = Series.one(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; requires constant coefficient 1."""
        if not self.coeffs:
            raise TruncationError("reciprocal needs at least the constant term")
        if self.coeffs[0] != self.ring.one:
            raise ValueError("reciprocal requires constant coefficient 1")
        inv = [self.ring.one]
        for n in range(1, len(self.coeffs)):
            # t_n = -(a_1 t_{n-1} + ... + a_n t_0), from (sum a x^i)(sum t x^j) = 1
            acc = self.ring.zero
            for j in range(1, n + 1):
                acc = acc + self.coeffs[j] * inv[n - j]
            inv.append(-acc)
        return Series(self.ring, inv)

    def shift(self, k: int) -> "Series":
        """Multiply by x^k.  All order+k low coefficients are determined."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return Series(self.ring, (self.ring.zero,) * k + self.coeffs)

    def truncated(self, order: int) -> "Series":
        if order > len(self.coeffs):
            raise TruncationError(
                f"cannot extend from order {self.order} to {order}"
            )
        return Series(self.ring, self.coeffs[:order])

    def zero_extended(self, order: int) -> "Series":
        """Pad with zeros.  Only sound when the caller knows the series is
        the polynomial spelled out by the present coefficients."""
        if order < len(self.coeffs):
            raise ValueError("zero_extended cannot shrink; use truncated")
        return Series(
            self.ring, self.coeffs + (self.ring.zero,) * (order - len(self.coeffs))
        )

    def to_json(self) -> dict:
        coeffs = [
            list(c.coeffs) if isinstance(c, UniPoly) else c for c in self.coeffs
        ]
        return {"order": self.order, "coeffs": coeffs}

    @classmethod
    def from_json(cls, obj: dict, ring: _Ring | None = None) -> "Series":
        coeffs = obj["coeffs"]
        if len(coeffs) != obj["order"]:
            raise ValueError("order does not match the coefficient count")
        if ring is None:
            poly = any(isinstance(c, (list, tuple)) for c in coeffs)
            ring = POLY_RING if poly else INTEGER_RING
        vals = [
            UniPoly(c) if isinstance(c, (list, tuple)) else c for c in coeffs
        ]
        return cls(ring, vals)

    def __repr__(self) -> str:
        return f"Series({self.ring.name}, order={self.order}, {list(self.coeffs)!r})"
