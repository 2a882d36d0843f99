"""Exact arithmetic in a number field Q[x]/(m(x)).

Elements are stored in the power basis 1, g, ..., g^(d-1) as integer
numerators over one positive common denominator, always fully reduced, so
equality and hashing are coefficient-wise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "FieldError",
    "FieldMismatchError",
    "ReducibleModulusError",
    "NumberField",
    "FieldElement",
    "QQ",
    "cyclotomic_polynomial",
    "cyclotomic_field",
    "field_add",
    "field_mul",
    "field_inv",
    "field_embed_rational",
]

Rational = Union[int, Fraction]


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


class ReducibleModulusError(FieldError):
    """Raised when inversion hits a zero divisor of Q[x]/(m)."""


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
    return q, _poly_trim(a)


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class NumberField:
    """The field Q[g]/(m(g)) for a monic m of degree >= 1.

    ``modulus`` lists the coefficients of m from the constant term up to the
    leading 1.  Irreducibility is not checked; a reducible modulus shows up
    as :class:`ReducibleModulusError` on inversion of a zero divisor.
    """

    __slots__ = ("modulus", "degree", "name", "generator", "generator_approx", "_int_mod", "_hash")

    def __init__(
        self,
        modulus: Sequence[Rational | str],
        name: str | None = None,
        generator: str = "g",
        generator_approx: str | None = None,
    ):
        mod = tuple(Fraction(c) for c in modulus)
        if len(mod) < 2:
            raise FieldError("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise FieldError(f"modulus must be monic, leading coefficient is {mod[-1]}")
        self.modulus = mod
        self.degree = len(mod) - 1
        self.generator = generator
        self.generator_approx = generator_approx
        self.name = name if name is not None else _default_name(mod, generator)
        # integral moduli allow reduction without denominators
        self._int_mod = tuple(int(c) for c in mod) if all(c.denominator == 1 for c in mod) else None
        self._hash = hash(mod)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"NumberField({self.name!r})"

    # constructors ---------------------------------------------------------

    def __call__(self, value: Union[Rational, str, "FieldElement", Sequence[Rational]]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field.name} used in {self.name}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        return self.from_coeffs(value)

    def rational(self, q: Rational) -> "FieldElement":
        q = Fraction(q)
        return FieldElement._make(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coeffs(self, coeffs: Iterable[Rational | str]) -> "FieldElement":
        """Element from power-basis coefficients (any length; reduced mod m)."""
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in fr)) if fr else 1
        nums = [int(c * den) for c in fr]
        return FieldElement._from_poly(self, nums, den)

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def one(self) -> "FieldElement":
        return self.rational(1)

    def gen(self) -> "FieldElement":
        return self.from_coeffs([0, 1])

    def parse(self, text: str) -> "FieldElement":
        return _Parser(self, text).parse()

    # serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {"modulus": [_frac_str(c) for c in self.modulus], "name": self.name}
        if self.generator != "g":
            out["generator"] = self.generator
        if self.generator_approx is not None:
            out["generator_approx"] = self.generator_approx
        return out

    @classmethod
    def from_json(cls, data: dict) -> "NumberField":
        unknown = set(data) - {"modulus", "name", "generator", "generator_approx"}
        if unknown:
            raise FieldError(f"unknown field keys: {sorted(unknown)}")
        return cls(
            data["modulus"],
            name=data.get("name"),
            generator=data.get("generator", "g"),
            generator_approx=data.get("generator_approx"),
        )

    def approx_generator(self) -> complex | None:
        if self.degree == 1:
            return complex(-float(self.modulus[0]))
        if self.generator_approx is None:
            return None
        return complex(self.generator_approx.replace(" ", "").replace("i", "j"))


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _default_name(mod: tuple[Fraction, ...], gen: str) -> str:
    if len(mod) == 2:
        return "QQ"
    terms = []
    for k in range(len(mod) - 1, -1, -1):
        c = mod[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (gen if k == 1 else f"{gen}^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = _frac_str(abs(c)) + (f"*{mono}" if mono else "")
        terms.append(("-" if c < 0 else "+", body))
    s = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return f"QQ[{gen}]/({s})"


QQ = NumberField([0, 1], name="QQ")


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "nums", "den", "_hash")

    field: NumberField
    nums: tuple[int, ...]
    den: int

    @classmethod
    def _make(cls, field: NumberField, nums: tuple[int, ...], den: int) -> "FieldElement":
        # nums has length field.degree; normalize sign and gcd
        if den < 0:
            nums = tuple(-n for n in nums)
            den = -den
        g = den
        for n in nums:
            if n:
                g = math.gcd(g, n)
                if g == 1:
                    break
        if not any(nums):
            den = 1
        elif g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        obj = object.__new__(cls)
        obj.field = field
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _from_poly(cls, field: NumberField, poly: list[int], den: int) -> "FieldElement":
        d = field.degree
        if len(poly) > d:
            if field._int_mod is not None:
                poly = list(poly)
                mod = field._int_mod
                for k in range(len(poly) - 1, d - 1, -1):
                    c = poly[k]
                    if c:
                        base = k - d
                        for i in range(d):
                            if mod[i]:
                                poly[base + i] -= c * mod[i]
                    poly.pop()
            else:
                fr = [Fraction(c, den) for c in poly]
                _, r = _poly_divmod(fr, list(field.modulus))
                return field.from_coeffs(r) if r else field.zero()
        if len(poly) < d:
            poly = list(poly) + [0] * (d - len(poly))
        return cls._make(field, tuple(poly), den)

    # accessors ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field.name} and {other.field.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FieldElement._make(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        den = self.den * o.den
        return FieldElement._make(
            self.field, tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)), den
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.field.degree == 1:
            return FieldElement._make(self.field, (self.nums[0] * o.nums[0],), self.den * o.den)
        if o.is_rational():
            c = o.nums[0]
            return FieldElement._make(self.field, tuple(a * c for a in self.nums), self.den * o.den)
        if self.is_rational():
            c = self.nums[0]
            return FieldElement._make(self.field, tuple(c * b for b in o.nums), self.den * o.den)
        return FieldElement._from_poly(self.field, _poly_mul(self.nums, o.nums), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return self.field.rational(Fraction(self.den, self.nums[0]))
        # extended Euclid: s*a + t*m = gcd
        a = _poly_trim([Fraction(n, self.den) for n in self.nums])
        m = list(self.field.modulus)
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if len(r0) != 1:
            raise ReducibleModulusError(
                f"{self} is a zero divisor: modulus {self.field.name} is reducible"
            )
        c = r0[0]
        # s0 * a = c (mod m)
        return self.field.from_coeffs([x / c for x in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.nums, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # display ----------------------------------------------------------------

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FieldElement({self.format()!r})"

    def format(self) -> str:
        """Canonical text form, e.g. ``(5 - 1*g)/10``; ``parse`` inverts it."""
        gen = self.field.generator
        terms = []
        for k, c in enumerate(self.nums):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            elif k == 1:
                body = f"{abs(c)}*{gen}"
            else:
                body = f"{abs(c)}*{gen}^{k}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        if self.den == 1:
            return s
        if len(terms) == 1 and "*" not in s:
            return f"{s}/{self.den}"
        return f"({s})/{self.den}"

    def approx(self) -> complex | None:
        """Decimal approximation from the field's declared generator value."""
        r = self.field.approx_generator()
        if r is None:
            return None
        total = 0j
        p = 1 + 0j
        for n in self.nums:
            total += n * p
            p *= r
        return total / self.den

    def approx_str(self, digits: int = 12) -> str:
        z = self.approx()
        if z is None:
            return "n/a"
        if abs(z.imag) < 10 ** (-digits):
            return f"{z.real:.{digits}g}"
        return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


class _Parser:
    """Recursive-descent parser for polynomial expressions in the generator."""

    _token = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")

    def __init__(self, field: NumberField, text: str):
        self.field = field
        self.text = text
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if m is None:
                break
            if m.group(1):
                self.tokens.append(("num", m.group(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2)))
            else:
                self.tokens.append(("op", m.group(3)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, msg: str):
        raise FieldError(f"cannot parse {self.text!r}: {msg}")

    def parse(self) -> FieldElement:
        if not self.tokens:
            self._fail("empty")
        val = self._expr()
        if self.i != len(self.tokens):
            self._fail(f"unexpected {self._peek()[1]!r}")
        return val

    def _expr(self) -> FieldElement:
        kind, tok = self._peek()
        if kind == "op" and tok in "+-":
            self._next()
            val = self._term()
            if tok == "-":
                val = -val
        else:
            val = self._term()
        while True:
            kind, tok = self._peek()
            if kind == "op" and tok in "+-":
                self._next()
                rhs = self._term()
                val = val + rhs if tok == "+" else val - rhs
            else:
                return val

    def _term(self) -> FieldElement:
        val = self._power()
        while True:
            kind, tok = self._peek()
            if kind == "op" and tok in "*/":
                self._next()
                rhs = self._power()
                val = val * rhs if tok == "*" else val / rhs
            else:
                return val

    def _power(self) -> FieldElement:
        base = self._atom()
        kind, tok = self._peek()
        if kind == "op" and tok == "^":
            self._next()
            sign = 1
            if self._peek() == ("op", "-"):
                self._next()
                sign = -1
            k, n = self._next()
            if k != "num":
                self._fail("exponent must be an integer")
            return base ** (sign * int(n))
        return base

    def _atom(self) -> FieldElement:
        kind, tok = self._next()
        if kind == "num":
            return self.field.rational(int(tok))
        if kind == "name":
            if tok != self.field.generator:
                self._fail(f"unknown symbol {tok!r}")
            return self.field.gen()
        if kind == "op" and tok == "(":
            val = self._expr()
            if self._next() != ("op", ")"):
                self._fail("missing ')'")
            return val
        if kind == "op" and tok == "-":
            return -self._atom()
        self._fail(f"unexpected {tok!r}")
        raise AssertionError  # unreachable


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    poly = [Fraction(c) for c in num]
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(poly, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not r
            poly = q
    return tuple(int(c) for c in poly)


def cyclotomic_field(m: int) -> NumberField:
    """Q(zeta_m) with generator zeta_m = exp(2 pi i / m)."""
    z = complex(math.cos(2 * math.pi / m), math.sin(2 * math.pi / m))
    approx = f"{z.real!r}{z.imag:+.17g}j"
    if m in (1, 2):
        return NumberField(cyclotomic_polynomial(m), name=f"QQ(zeta{m})", generator="z")
    return NumberField(cyclotomic_polynomial(m), name=f"QQ(zeta{m})", generator="z", generator_approx=approx)


# functional aliases -----------------------------------------------------------


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_embed_rational(q: Rational, field: NumberField) -> FieldElement:
    return field.rational(q)
