"""Exact scalar arithmetic for the two coefficient rings.

Integers are plain Python ``int`` (arbitrary precision).  Polynomials in the
weight variable t are dense integer-coefficient :class:`UniPoly` values.
Both rings share :func:`exact_div`, the division used by fraction-free
elimination: it must be exact and raises :class:`ExactDivisionError` when a
remainder survives.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Union

Scalar = Union[int, "UniPoly"]


class ExactDivisionError(ArithmeticError):
    """A division that had to be exact left a remainder."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.

    Negative n is rejected: no identity in this package ever needs it, and a
    silent generalized binomial would hide index bugs.
    """
    if n < 0:
        raise ValueError(f"binomial(n={n}, ...): n must be non-negative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


class UniPoly:
    """Dense univariate polynomial over the integers.

    Coefficients are stored in ascending degree order with trailing zeros
    trimmed, so two UniPoly values are mathematically equal exactly when
    their coefficient tuples are equal.  The zero polynomial is the empty
    tuple.  Instances are immutable and safe to cache.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "UniPoly":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if k < 0:
            raise ValueError("coefficient index must be non-negative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def _coerce(other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly((other,))
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        # Constants hash like the ints they equal, so int/UniPoly mixing in
        # sets and dict keys stays consistent with __eq__.
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power needs a non-negative integer")
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Quotient self / other when the division is exact in Z[t]."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide UniPoly by {type(other).__name__}")
        if not o:
            raise ZeroDivisionError("exact division by the zero polynomial")
        if not self:
            return UniPoly()
        rem = list(self.coeffs)
        db = len(o.coeffs) - 1
        lead = o.coeffs[-1]
        if len(rem) - 1 < db:
            raise ExactDivisionError(f"{self!r} is not divisible by {o!r}")
        quo = [0] * (len(rem) - db)
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + db]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ExactDivisionError(f"{self!r} is not divisible by {o!r}")
            quo[i] = q
            for j, cb in enumerate(o.coeffs):
                rem[i + j] -= q * cb
        if any(rem):
            raise ExactDivisionError(f"{self!r} is not divisible by {o!r}")
        return UniPoly(quo)

    def __call__(self, value: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def render(self, var: str = "t") -> str:
        return render_poly(self, var)

    def __repr__(self) -> str:
        return f"UniPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return self.render()


#: The generator t of Z[t].
T = UniPoly((0, 1))


def render_poly(p: UniPoly, var: str = "t") -> str:
    """Human form, ascending powers, explicit signs: ``1 - 3*t + t^2``."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            term = str(mag)
        else:
            head = var if e == 1 else f"{var}^{e}"
            term = head if mag == 1 else f"{mag}*{head}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Exact division in whichever ring the operands live in.

    Mixed int/UniPoly operands are promoted to Z[t].  Raises
    ExactDivisionError when the quotient would not be exact.
    """
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        pa = a if isinstance(a, UniPoly) else UniPoly((a,))
        pb = b if isinstance(b, UniPoly) else UniPoly((b,))
        return pa.exact_div(pb)
    if b == 0:
        raise ZeroDivisionError("exact division by zero")
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionError(f"{a} is not divisible by {b}")
    return q
