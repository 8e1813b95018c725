"""Dense univariate polynomials over GF(2^s).

Coefficients are raw field values stored low degree first with trailing
zeros trimmed, so the zero polynomial has an empty coefficient tuple.  The
serialized form is a comma-separated list of lowercase hex coefficients,
low degree first: 1 + x + x^3 over GF(2) is "1,1,0,1".
"""

from __future__ import annotations

from typing import Iterable, Union

from .gf import Embedding, Field, FieldElement

__all__ = ["Poly", "x_pow_n_minus_1", "dual_generator", "conjugate_poly"]

Coeff = Union[int, FieldElement]


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[Coeff] = ()):
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise ValueError("field mismatch")
                c = c.value
            else:
                c = int(c)
                if not 0 <= c < field.order:
                    raise ValueError(f"coefficient {c} out of range for {field!r}")
            vals.append(c)
        while vals and vals[-1] == 0:
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls(field, [0] * degree + [coeff])

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.field != self.field:
            raise ValueError("field mismatch")

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.field)
        f = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if a == 1:
                for j, b in enumerate(other.coeffs):
                    out[i + j] ^= b
            else:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= f.mul(a, b)
        return Poly(f, out)

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder with deg(remainder) < deg(other)."""
        self._check(other)
        if other.is_zero:
            raise ValueError("division by zero polynomial")
        f = self.field
        db = other.degree
        r = list(self.coeffs)
        if len(r) <= db:
            return Poly(f), Poly(f, r)
        q = [0] * (len(r) - db)
        lead_inv = f.inv(other.coeffs[-1])
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db]
            if c == 0:
                continue
            t = f.mul(c, lead_inv)
            q[i] = t
            for j, b in enumerate(other.coeffs):
                if b:
                    r[i + j] ^= f.mul(t, b)
        return Poly(f, q), Poly(f, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        self._check(other)
        if other.is_zero:
            raise ValueError("gcd with the zero polynomial")
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        f = self.field
        inv = f.inv(lead)
        return Poly(f, [f.mul(inv, c) for c in self.coeffs])

    def scale(self, c: Coeff) -> "Poly":
        c = self.field.element(c).value
        return Poly(self.field, [self.field.mul(c, v) for v in self.coeffs])

    # -- evaluation ------------------------------------------------------------

    def eval(self, x: Coeff, emb: Embedding | None = None) -> FieldElement:
        """Horner evaluation; with emb, coefficients are first mapped into
        the extension and x must live there."""
        target = self.field if emb is None else emb.ext
        if emb is not None and emb.base != self.field:
            raise ValueError("embedding base does not match coefficient field")
        if isinstance(x, FieldElement):
            if x.field != target:
                raise ValueError("field mismatch")
            xv = x.value
        else:
            xv = int(x)
            if not 0 <= xv < target.order:
                raise ValueError(f"value {xv} out of range for {target!r}")
        acc = 0
        table = emb.table if emb is not None else None
        for c in reversed(self.coeffs):
            cv = table[c] if table is not None else c
            acc = target.mul(acc, xv) ^ cv
        return target.element(acc)

    # -- serialization ------------------------------------------------------

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(format(c, "x") for c in self.coeffs)

    @classmethod
    def from_string(cls, field: Field, text: str) -> "Poly":
        tokens = text.split(",")
        vals = []
        for t in tokens:
            try:
                v = int(t, 16)
            except ValueError:
                raise ValueError(f"bad coefficient {t!r}") from None
            if v < 0 or format(v, "x") != t:
                raise ValueError(f"non-canonical coefficient {t!r}")
            if v >= field.order:
                raise ValueError(f"coefficient {t!r} out of range for {field!r}")
            vals.append(v)
        if vals == [0]:
            return cls(field)
        if vals[-1] == 0:
            raise ValueError("trailing zero coefficient in serialized polynomial")
        return cls(field, vals)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, [{self.to_string()}])"


def x_pow_n_minus_1(field: Field, n: int) -> Poly:
    """x^n - 1, which in characteristic two is x^n + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return Poly(field, [1] + [0] * (n - 1) + [1])


def dual_generator(g: Poly, n: int) -> Poly:
    """Generator of the Euclidean dual of the cyclic code generated by g:
    the monic reversal x^k h(1/x) / h(0) of the check polynomial
    h = (x^n - 1) / g."""
    h, rem = x_pow_n_minus_1(g.field, n).divrem(g)
    if not rem.is_zero:
        raise ValueError("not a generator: g does not divide x^n - 1")
    f = g.field
    inv0 = f.inv(h.coeffs[0])  # h(0) != 0 since x does not divide x^n - 1
    return Poly(f, [f.mul(inv0, c) for c in reversed(h.coeffs)])


def conjugate_poly(p: Poly, q: int) -> Poly:
    """Raise every coefficient to the q-th power (q a power of two)."""
    f = p.field
    if q < 1 or q & (q - 1) or q > f.order:
        raise ValueError("q must be a power of two not exceeding the field order")
    k = q.bit_length() - 1
    return Poly(f, [f.frobenius(c, k) for c in p.coeffs])
