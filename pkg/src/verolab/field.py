"""Exact scalar arithmetic over GF(p^m) and Q.

Elements of GF(p^m) are represented by an integer index in [0, p^m).  The
base-p digits of the index, least significant first, are the coefficients
of the element written over the power basis 1, x, ..., x^(m-1) of
GF(p)[x] / (modulus).  Index 0 is the zero element and index 1 the one
element, and enumeration by increasing index is the canonical element
order used everywhere downstream (fixture files store these indices).

Elements of Q are represented by fractions.Fraction, which keeps every
value in lowest terms with a positive denominator.

A FieldSpec owns the arithmetic: it exposes raw operations (add, mul,
neg, inv, ...) on the underlying representation, and the Scalar wrapper
gives them operator syntax plus field-mismatch checking.  For small
finite fields (q <= 64) the raw operations are table lookups built once
at construction; larger prime fields fall back to modular integer
arithmetic and larger extension fields to on-the-fly polynomial
arithmetic modulo the field's irreducible polynomial.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InfiniteField, NonPrimeP

_TABLE_LIMIT = 64  # build full op tables for q up to this order


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ----------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients low-to-high as tuples
# ----------------------------------------------------------------------

def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul_mod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rem = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(rem) >= len(b) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - len(b)
        factor = (rem[-1] * inv_lead) % p
        q[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        rem.pop()
    return _poly_trim(q), _poly_trim(rem)


def _poly_is_irreducible(g: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(g)//2."""
    deg = len(g) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            cand = tuple(tail) + (1,)
            _, rem = _poly_divmod_p(g, cand, p)
            if not rem:
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Coefficient tuples (c0, ..., c_{m-1}) are compared low-degree-first,
    so the choice is deterministic across runs and platforms.
    """
    for tail in itertools.product(range(p), repeat=m):
        cand = tuple(tail) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


# ----------------------------------------------------------------------
# FieldSpec
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """A field: GF(p^m) for prime p and m >= 1, or the rationals.

    Raw operation attributes (add, sub, mul, neg, inv, div) act on the
    internal representation: int indices for finite fields, Fraction for
    Q.  They are installed at construction and excluded from equality.
    """

    kind: str  # "finite" | "rational"
    p: int | None = None
    m: int | None = None
    modulus: tuple[int, ...] | None = None  # monic, low-to-high, only for m >= 2

    def __post_init__(self) -> None:
        if self.kind == "rational":
            object.__setattr__(self, "q", 0)
            self._install_rational_ops()
            return
        if self.kind != "finite":
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.p is None or not _is_prime(self.p):
            raise NonPrimeP(f"p={self.p} is not prime")
        if self.m is None or self.m < 1:
            raise NonPrimeP(f"extension degree m={self.m} must be >= 1")
        if self.m >= 2:
            mod = self.modulus
            if mod is None or len(mod) != self.m + 1 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _poly_is_irreducible(mod, self.p):
                raise ValueError("modulus is reducible")
        object.__setattr__(self, "q", self.p ** self.m)
        self._install_finite_ops()

    # -- identity ------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def char(self) -> int:
        return self.p if self.kind == "finite" else 0

    @property
    def name(self) -> str:
        return f"F{self.q}" if self.kind == "finite" else "Q"

    def __repr__(self) -> str:
        return f"FieldSpec({self.name})"

    # -- element digit codecs -------------------------------------------

    def _digits(self, idx: int) -> tuple[int, ...]:
        p, m = self.p, self.m
        out = []
        for _ in range(m):
            idx, r = divmod(idx, p)
            out.append(r)
        return tuple(out)

    def _index(self, digits) -> int:
        p = self.p
        idx = 0
        for c in reversed(tuple(digits)):
            idx = idx * p + (c % p)
        return idx

    # -- raw op installation ---------------------------------------------

    def _install_rational_ops(self) -> None:
        zero, one = Fraction(0), Fraction(1)

        def inv(a: Fraction) -> Fraction:
            if not a:
                raise DivisionByZero("inverse of 0")
            return 1 / a

        def div(a: Fraction, b: Fraction) -> Fraction:
            if not b:
                raise DivisionByZero("division by 0")
            return a / b

        for nm, fn in (
            ("add", lambda a, b: a + b),
            ("sub", lambda a, b: a - b),
            ("mul", lambda a, b: a * b),
            ("neg", lambda a: -a),
            ("inv", inv),
            ("div", div),
        ):
            object.__setattr__(self, nm, fn)
        object.__setattr__(self, "zero_raw", zero)
        object.__setattr__(self, "one_raw", one)

    def _install_finite_ops(self) -> None:
        p, m, q = self.p, self.m, self.q
        if q <= _TABLE_LIMIT:
            self._install_table_ops()
        elif m == 1:
            def inv(a: int) -> int:
                if a == 0:
                    raise DivisionByZero("inverse of 0")
                return pow(a, p - 2, p)

            def div(a: int, b: int) -> int:
                return (a * inv(b)) % p

            for nm, fn in (
                ("add", lambda a, b: (a + b) % p),
                ("sub", lambda a, b: (a - b) % p),
                ("mul", lambda a, b: (a * b) % p),
                ("neg", lambda a: (-a) % p),
                ("inv", inv),
                ("div", div),
            ):
                object.__setattr__(self, nm, fn)
        else:
            self._install_generic_ext_ops()
        object.__setattr__(self, "zero_raw", 0)
        object.__setattr__(self, "one_raw", 1)

    def _raw_mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul_mod_p(_poly_trim(list(self._digits(a))), _poly_trim(list(self._digits(b))), self.p)
        if self.m >= 2:
            _, prod = _poly_divmod_p(prod, self.modulus, self.p)
        return self._index(prod + (0,) * (self.m - len(prod)))

    def _install_table_ops(self) -> None:
        p, m, q = self.p, self.m, self.q
        if m == 1:
            add_t = [[(a + b) % p for b in range(p)] for a in range(p)]
            mul_t = [[(a * b) % p for b in range(p)] for a in range(p)]
            neg_t = [(-a) % p for a in range(p)]
        else:
            digits = [self._digits(i) for i in range(q)]
            add_t = [
                [self._index((x + y) % p for x, y in zip(digits[a], digits[b])) for b in range(q)]
                for a in range(q)
            ]
            neg_t = [self._index((-x) % p for x in digits[a]) for a in range(q)]
            mul_t = [[self._raw_mul_poly(a, b) for b in range(q)] for a in range(q)]
        inv_t: list[int | None] = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul_t[a][b] == 1:
                    inv_t[a] = b
                    break

        def inv(a: int) -> int:
            r = inv_t[a]
            if r is None:
                raise DivisionByZero("inverse of 0")
            return r

        def div(a: int, b: int) -> int:
            return mul_t[a][inv(b)]

        for nm, fn in (
            ("add", lambda a, b: add_t[a][b]),
            ("sub", lambda a, b: add_t[a][neg_t[b]]),
            ("mul", lambda a, b: mul_t[a][b]),
            ("neg", lambda a: neg_t[a]),
            ("inv", inv),
            ("div", div),
        ):
            object.__setattr__(self, nm, fn)

    def _install_generic_ext_ops(self) -> None:
        p = self.p
        inv_cache: dict[int, int] = {}

        def add(a: int, b: int) -> int:
            return self._index((x + y) % p for x, y in zip(self._digits(a), self._digits(b)))

        def sub(a: int, b: int) -> int:
            return self._index((x - y) % p for x, y in zip(self._digits(a), self._digits(b)))

        def neg(a: int) -> int:
            return self._index((-x) % p for x in self._digits(a))

        def inv(a: int) -> int:
            if a == 0:
                raise DivisionByZero("inverse of 0")
            r = inv_cache.get(a)
            if r is None:
                # a^(q-2) by square and multiply
                r, base, e = 1, a, self.q - 2
                while e:
                    if e & 1:
                        r = self._raw_mul_poly(r, base)
                    base = self._raw_mul_poly(base, base)
                    e >>= 1
                inv_cache[a] = r
            return r

        def div(a: int, b: int) -> int:
            return self._raw_mul_poly(a, inv(b))

        for nm, fn in (
            ("add", add),
            ("sub", sub),
            ("mul", self._raw_mul_poly),
            ("neg", neg),
            ("inv", inv),
            ("div", div),
        ):
            object.__setattr__(self, nm, fn)

    # -- Scalar constructors ---------------------------------------------

    def scalar(self, raw) -> Scalar:
        return Scalar(self, raw)

    def zero(self) -> Scalar:
        return Scalar(self, self.zero_raw)

    def one(self) -> Scalar:
        return Scalar(self, self.one_raw)


# ----------------------------------------------------------------------
# Scalar
# ----------------------------------------------------------------------

class Scalar:
    """An immutable field element: a FieldSpec plus its raw value."""

    __slots__ = ("f", "v")

    def __init__(self, f: FieldSpec, v) -> None:
        self.f = f
        self.v = v

    @property
    def value(self):
        """Coefficient vector over GF(p) for finite fields, Fraction for Q."""
        if self.f.is_finite:
            return self.f._digits(self.v)
        return self.v

    def _check(self, other: Scalar) -> None:
        if self.f is not other.f and self.f != other.f:
            raise FieldMismatch(f"{self.f.name} vs {other.f.name}")

    def __add__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.f, self.f.add(self.v, other.v))

    def __sub__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.f, self.f.sub(self.v, other.v))

    def __mul__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.f, self.f.mul(self.v, other.v))

    def __truediv__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.f, self.f.div(self.v, other.v))

    def __neg__(self) -> Scalar:
        return Scalar(self.f, self.f.neg(self.v))

    def inv(self) -> Scalar:
        return Scalar(self.f, self.f.inv(self.v))

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inv() ** (-e)
        out, base = self.f.one_raw, self.v
        mul = self.f.mul
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return Scalar(self.f, out)

    def __bool__(self) -> bool:
        return self.v != self.f.zero_raw

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.f == other.f and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.f, self.v))

    def __repr__(self) -> str:
        return f"{self.f.name}:{self}"

    def __str__(self) -> str:
        if self.f.is_finite:
            return str(self.v)
        return f"{self.v.numerator}/{self.v.denominator}"


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _field_make_cached(kind: str, p: int | None, m: int | None) -> FieldSpec:
    if kind == "rational":
        return FieldSpec(kind="rational")
    if m is not None and m >= 2:
        modulus = _smallest_irreducible(p, m)
        return FieldSpec(kind="finite", p=p, m=m, modulus=modulus)
    return FieldSpec(kind="finite", p=p, m=m)


def field_make(kind: str, p: int | None = None, m: int | None = None) -> FieldSpec:
    """Build a field spec; finite fields get the lexicographically smallest
    monic irreducible modulus, so element encodings are reproducible."""
    if kind == "finite":
        if p is None or not _is_prime(p):
            raise NonPrimeP(f"p={p} is not prime")
        if m is None or m == 0:
            raise NonPrimeP(f"m={m} must be >= 1")
    return _field_make_cached(kind, p, m)


def rationals() -> FieldSpec:
    return _field_make_cached("rational", None, None)


def parse_field(text: str) -> FieldSpec:
    """Parse the field syntax used by fixtures and the CLI: "Q" or "F<q>"."""
    text = text.strip()
    if text == "Q":
        return rationals()
    if not text.startswith("F") or not text[1:].isdigit():
        raise NonPrimeP(f"bad field spec {text!r}")
    q = int(text[1:])
    if q < 2:
        raise NonPrimeP(f"bad field order {q}")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q  # q itself is prime
    m = 0
    n = q
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise NonPrimeP(f"{q} is not a prime power")
    return field_make("finite", p, m)


def enumerate_elements(f: FieldSpec) -> list[Scalar]:
    """All q elements in index order: 0 first, 1 second, then the rest in
    lexicographic order of their coefficient vectors."""
    if not f.is_finite:
        raise InfiniteField("cannot enumerate Q")
    return [Scalar(f, i) for i in range(f.q)]


def int_in_field(f: FieldSpec, n: int) -> Scalar:
    """The image of the integer n in f, i.e. n times the identity."""
    if f.is_finite:
        return Scalar(f, n % f.p)
    return Scalar(f, Fraction(n))


def scalar_from_str(f: FieldSpec, text: str) -> Scalar:
    """Parse the fixture form of a scalar: an element index for finite
    fields, "a/b" (or a bare integer) for Q."""
    text = text.strip()
    if f.is_finite:
        idx = int(text)
        if not 0 <= idx < f.q:
            raise ValueError(f"scalar index {idx} out of range for {f.name}")
        return Scalar(f, idx)
    return Scalar(f, Fraction(text))
