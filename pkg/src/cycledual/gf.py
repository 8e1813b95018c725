"""Arithmetic in GF(2^s): field construction, extension fields, subfield
embeddings, and roots of unity.

A field element is an ``int`` whose bit ``i`` is the coefficient of ``x^i``
in the polynomial basis, so GF(4) is {0, 1, 2, 3} with 2 = x and 3 = x + 1.
Addition is xor; multiplication reduces modulo an irreducible binary
polynomial stored the same way (x^2 + x + 1 is 0b111 = 7).

:class:`Field` operates on raw ints, which is what the rest of the library
uses internally.  :class:`FieldElement` binds a value to its owning field and
overloads the arithmetic operators, catching cross-field mixups.

Canonical choices (so that independent runs agree bit for bit):

* the default modulus for each degree comes from a fixed table, falling back
  to the lexicographically smallest irreducible polynomial;
* the primitive element of a field is the smallest element (as an integer)
  of full multiplicative order;
* a subfield embedding sends the base generator to the smallest root of the
  base modulus inside the extension.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

__all__ = [
    "Field",
    "FieldElement",
    "Embedding",
    "field_create",
    "extension_with_embedding",
    "nth_root_of_unity",
    "default_modulus",
    "is_irreducible",
]


def _gf2_degree(p: int) -> int:
    return p.bit_length() - 1


def _gf2_mod(a: int, b: int) -> int:
    """Remainder of binary-coefficient polynomial a modulo b."""
    db = _gf2_degree(b)
    while a and _gf2_degree(a) >= db:
        a ^= b << (_gf2_degree(a) - db)
    return a


def is_irreducible(modulus: int) -> bool:
    """Irreducibility over GF(2) by trial division against every binary
    polynomial of degree up to half the modulus degree."""
    deg = _gf2_degree(modulus)
    if deg < 1:
        return False
    if deg == 1:
        return True
    if not modulus & 1:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for div in range(1 << d, 1 << (d + 1)):
            if _gf2_mod(modulus, div) == 0:
                return False
    return True


# Fixed moduli for the common degrees; anything else is searched.
_DEFAULT_MODULI = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    8: 0b100011101,   # x^8 + x^4 + x^3 + x^2 + 1
}


def default_modulus(s: int) -> int:
    """The canonical degree-s irreducible modulus."""
    mod = _DEFAULT_MODULI.get(s)
    if mod is None:
        mod = next(
            c for c in range((1 << s) + 1, 1 << (s + 1), 2) if is_irreducible(c)
        )
    return mod


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


class Field:
    """The finite field GF(2^s), elements represented as s-bit integers."""

    __slots__ = ("s", "modulus", "order", "_factors", "_primitive")

    def __init__(self, s: int, modulus: int | None = None):
        if not 1 <= s <= 32:
            raise ValueError(f"field degree s={s} outside supported range 1..32")
        if modulus is None:
            modulus = default_modulus(s)
        if _gf2_degree(modulus) != s:
            raise ValueError(
                f"modulus degree mismatch: got degree {_gf2_degree(modulus)}, need {s}"
            )
        if not is_irreducible(modulus):
            raise ValueError("modulus not irreducible")
        self.s = s
        self.modulus = modulus
        self.order = 1 << s
        self._factors: tuple[int, ...] | None = None
        self._primitive: int | None = None

    # -- raw integer arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & self.order:
                a ^= self.modulus
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("division by zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, k: int) -> int:
        """a ** (2**k); the identity whenever k is a multiple of s."""
        if k < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        for _ in range(k % self.s):
            a = self.mul(a, a)
        return a

    # -- structure ---------------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def element(self, value: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("field mismatch")
            return value
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def group_factors(self) -> tuple[int, ...]:
        """Prime factors of the multiplicative group order 2^s - 1."""
        if self._factors is None:
            self._factors = _prime_factors(self.order - 1)
        return self._factors

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        t = self.order - 1
        for p in self.group_factors():
            while t % p == 0 and self.pow(a, t // p) == 1:
                t //= p
        return t

    def primitive_element(self) -> int:
        """Smallest element (by integer value) of order 2^s - 1."""
        if self._primitive is None:
            if self.order == 2:
                self._primitive = 1
            else:
                q1 = self.order - 1
                facs = self.group_factors()
                for v in range(2, self.order):
                    if all(self.pow(v, q1 // p) != 1 for p in facs):
                        self._primitive = v
                        break
                else:  # pragma: no cover - every finite field has one
                    raise RuntimeError("no primitive element found")
        return self._primitive

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.s == other.s
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.s, self.modulus))

    def __repr__(self) -> str:
        return f"GF(2^{self.s}, 0x{self.modulus:x})"


class FieldElement:
    """A field element bound to its owning field.

    Supports +, -, *, /, ** and frobenius; mixing elements of different
    fields raises ``ValueError``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        value = int(value)
        if not 0 <= value < field.order:
            raise ValueError(f"value {value} out of range for {field!r}")
        self.field = field
        self.value = value

    def _other(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("field mismatch")
        return other.value

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.value ^ self._other(other))

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self) -> "FieldElement":
        return self  # characteristic two

    def frobenius(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}:{self.value:x}"


@lru_cache(maxsize=None)
def _get_field(s: int, modulus: int | None) -> Field:
    return Field(s, modulus)


def field_create(s: int, modulus: int | None = None) -> Field:
    """Create (or fetch the cached) GF(2^s) with the given or default modulus."""
    if not 1 <= s <= 16:
        raise ValueError(f"s={s} outside supported range 1..16")
    return _get_field(s, modulus)


def _eval_binary_poly(ext: Field, bits: int, x: int) -> int:
    """Evaluate a binary-coefficient polynomial at x inside ext (Horner)."""
    acc = 0
    for i in range(_gf2_degree(bits), -1, -1):
        acc = ext.mul(acc, x) ^ ((bits >> i) & 1)
    return acc


class Embedding:
    """A ring embedding of GF(2^s) into GF(2^(s*m)).

    The full image table is stored so pullbacks are exact lookups; an element
    of the extension lies in the embedded subfield iff it appears there.
    """

    __slots__ = ("base", "ext", "table", "_inverse")

    def __init__(self, base: Field, ext: Field, table: tuple[int, ...]):
        self.base = base
        self.ext = ext
        self.table = table
        self._inverse = {img: v for v, img in enumerate(table)}

    def apply(self, value: Union[int, FieldElement]) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self.base:
                raise ValueError("field mismatch")
            value = value.value
        return self.ext.element(self.table[value])

    __call__ = apply

    def in_image(self, value: Union[int, FieldElement]) -> bool:
        if isinstance(value, FieldElement):
            value = value.value
        return value in self._inverse

    def pullback(self, value: Union[int, FieldElement]) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self.ext:
                raise ValueError("field mismatch")
            value = value.value
        try:
            return self.base.element(self._inverse[value])
        except KeyError:
            raise ValueError("element not in embedded subfield") from None

    def __repr__(self) -> str:
        return f"Embedding({self.base!r} -> {self.ext!r})"


@lru_cache(maxsize=None)
def _extension_with_embedding(base: Field, m: int) -> tuple[Field, Embedding]:
    if m == 1:
        return base, Embedding(base, base, tuple(range(base.order)))
    ext = _get_field(base.s * m, None)
    if base.s == 1:
        table: tuple[int, ...] = (0, 1)
    else:
        # The roots of the base modulus all lie in the subfield of size 2^s,
        # which is {0} plus the cyclic group generated by gamma^step.
        gamma = ext.primitive_element()
        step = (ext.order - 1) // (base.order - 1)
        sub_gen = ext.pow(gamma, step)
        candidates = [0]
        v = 1
        for _ in range(base.order - 1):
            candidates.append(v)
            v = ext.mul(v, sub_gen)
        roots = [c for c in candidates if _eval_binary_poly(ext, base.modulus, c) == 0]
        alpha_img = min(roots)
        powers = [1]
        for _ in range(base.s - 1):
            powers.append(ext.mul(powers[-1], alpha_img))
        images = []
        for val in range(base.order):
            acc = 0
            for i in range(base.s):
                if (val >> i) & 1:
                    acc ^= powers[i]
            images.append(acc)
        table = tuple(images)
    return ext, Embedding(base, ext, table)


def extension_with_embedding(base: Field, m: int) -> tuple[Field, Embedding]:
    """GF(2^(s*m)) together with the canonical embedding of the base field."""
    if m < 1:
        raise ValueError("extension degree must be positive")
    if base.s * m > 32:
        raise ValueError(f"extension field GF(2^{base.s * m}) exceeds the 2^32 limit")
    return _extension_with_embedding(base, m)


def nth_root_of_unity(ext: Field, n: int) -> FieldElement:
    """The canonical primitive n-th root of unity gamma^((2^s-1)/n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if (ext.order - 1) % n != 0:
        raise ValueError(f"no primitive n-th root: {n} does not divide {ext.order - 1}")
    gamma = ext.primitive_element()
    return ext.element(ext.pow(gamma, (ext.order - 1) // n))
