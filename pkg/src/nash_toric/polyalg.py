"""Sparse polynomials over the semigroup ring k[S_sigma], with k = Q or F_p.

Exponents live in ambient coordinates of M = Z^d.  A polynomial is a dict
from exponent tuples to nonzero coefficients; coefficients are ``Fraction``
over Q and reduced ``int`` over F_p.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy import isprime

from . import lattice
from .errors import ToricError
from .lattice import Vector, dot
from .semigroups import AffineSemigroup

Exponent = Vector


class RationalField:
    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / x

    def reduce(self, x):
        return x

    def to_json(self, x: Fraction):
        return str(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if not 2 <= p < 1 << 61 or not isprime(p):
            raise ToricError(f"{p} is not a prime below 2^61")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.characteristic) % self.characteristic
        return int(x) % self.characteristic

    def inv(self, x: int) -> int:
        return pow(x, -1, self.characteristic)

    def reduce(self, x: int) -> int:
        return x % self.characteristic

    def to_json(self, x: int):
        return x

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("GF", self.characteristic))

    def __repr__(self) -> str:
        return self.name


QQ = RationalField()


def field_from_string(s: str | int | None):
    """'QQ', '0' or None give Q; a prime p (or 'GF(p)') gives F_p."""
    if s is None:
        return QQ
    s = str(s).strip()
    if s.upper() in ("QQ", "Q", "0", "RATIONAL"):
        return QQ
    if s.upper().startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    try:
        return PrimeField(int(s))
    except ValueError:
        raise ToricError(f"unknown coefficient field {s!r}") from None


@dataclass(frozen=True)
class SemigroupRing:
    semigroup: AffineSemigroup
    field: object = QQ

    @property
    def dim(self) -> int:
        return self.semigroup.dim

    def poly(self, terms: Mapping[Sequence[int], object] | Iterable[tuple]) -> "Poly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for e, c in items:
            e = lattice.as_vector(e)
            if len(e) != self.dim:
                raise ToricError("exponent has the wrong dimension")
            if e not in self.semigroup:
                raise ToricError(f"exponent {e} is not in the semigroup")
            out[e] = self.field.reduce(out.get(e, 0) + self.field(c))
        return Poly(self, {e: c for e, c in out.items() if c})

    def monomial(self, e: Sequence[int], c=1) -> "Poly":
        return self.poly({tuple(e): c})

    def one(self) -> "Poly":
        return self.monomial((0,) * self.dim)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def generators(self) -> list["Poly"]:
        return [self.monomial(a) for a in self.semigroup.hilbert_basis]

    def divides(self, a: Exponent, b: Exponent) -> bool:
        """Whether x^a divides x^b, i.e. b - a lies in S."""
        return tuple(x - y for x, y in zip(b, a)) in self.semigroup


class Poly:
    """Element of k[S]; treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SemigroupRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @property
    def field(self):
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _combine(self, other: "Poly", sign: int) -> "Poly":
        red = self.field.reduce
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = red(out.get(e, 0) + sign * c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __add__(self, other: "Poly") -> "Poly":
        return self._combine(other, 1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self._combine(other, -1)

    def __neg__(self) -> "Poly":
        red = self.field.reduce
        return Poly(self.ring, {e: red(-c) for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        red = self.field.reduce
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = red(out.get(e, 0) + c1 * c2)
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    def __pow__(self, k: int) -> "Poly":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale_shift(self, c, shift: Exponent) -> "Poly":
        """c * x^shift * self."""
        red = self.field.reduce
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, shift)): red(c * v)
                                for e, v in self.terms.items()})

    def leading(self, order: "MonomialOrder") -> tuple[Exponent, object]:
        if not self.terms:
            raise ToricError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: "MonomialOrder") -> "Poly":
        _, c = self.leading(order)
        inv = self.field.inv(c)
        red = self.field.reduce
        return Poly(self.ring, {e: red(v * inv) for e, v in self.terms.items()})

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coeff": self.field.to_json(self.terms[e])}
                          for e in sorted(self.terms)]}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{self.terms[e]}*x^{list(e)}" for e in sorted(self.terms, reverse=True))


def poly_from_json(ring: SemigroupRing, obj) -> Poly:
    try:
        return ring.poly([(t["exp"], Fraction(str(t["coeff"]))) for t in obj["terms"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ToricError(f"malformed polynomial: {exc}") from None


class MonomialOrder:
    """A matrix order: compare exponents by successive weight rows, then lexicographically.

    ``weight_then(w, tiebreak)`` is the order "w . u first, ties broken by
    ``tiebreak``".  The trailing lexicographic comparison makes every matrix
    order total.
    """

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(r) for r in rows)
        if len({len(r) for r in self.rows}) > 1:
            raise ToricError("order rows have different lengths")
        self._cache: dict = {}

    @classmethod
    def matrix(cls, rows: Sequence[Sequence]) -> "MonomialOrder":
        return cls(rows)

    @classmethod
    def weight_then(cls, w: Sequence, tiebreak: "MonomialOrder") -> "MonomialOrder":
        return cls((tuple(w),) + tiebreak.rows)

    def key(self, u: Exponent) -> tuple:
        k = self._cache.get(u)
        if k is None:
            k = tuple(dot(r, u) for r in self.rows) + u
            self._cache[u] = k
        return k

    def compare(self, u: Exponent, v: Exponent) -> int:
        """-1, 0 or 1 as u is less than, equal to or greater than v."""
        ku, kv = self.key(tuple(u)), self.key(tuple(v))
        return (ku > kv) - (ku < kv)

    def validate(self, semigroup: AffineSemigroup) -> None:
        """Reject orders that do not make every nonzero element of S positive.

        Positivity on the Hilbert basis implies a well-order compatible with
        addition, which division and Buchberger need to terminate.
        """
        zero = self.key((0,) * semigroup.dim)
        for h in semigroup.hilbert_basis:
            if self.key(h) <= zero:
                raise ToricError(f"monomial order is not positive on semigroup generator {h}")

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"MonomialOrder({[list(r) for r in self.rows]})"


def default_tiebreak(semigroup: AffineSemigroup) -> MonomialOrder:
    """Graded lexicographic order, graded by the interior vector sum(rays of sigma)."""
    return MonomialOrder([semigroup.sigma.interior_point()])


TOH_YAMA_ORDER = MonomialOrder([(2, -1), (1, 1)])


def initial_form(f: Poly, w: Sequence) -> Poly:
    """Sum of the terms of f whose exponent maximizes w . u."""
    if f.is_zero():
        raise ToricError("zero polynomial")
    best = max(dot(w, e) for e in f.terms)
    return Poly(f.ring, {e: c for e, c in f.terms.items() if dot(w, e) == best})
