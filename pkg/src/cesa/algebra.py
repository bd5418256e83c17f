"""Semigroup algebras FS as sparse formal linear combinations.

A *carrier* supplies the semigroup: either a finite :class:`CayleyTable`
(optionally contracted, so the zero θ becomes the algebra's 0) or one of the
presented nilpotent families.  :class:`SemigroupAlgebra` pairs a carrier with
a field and manufactures :class:`AlgebraElement` values.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from . import nilpotent as nil
from . import semigroup as sg
from .scalars import FieldElement, FieldSpec, nullspace

Word = Hashable


class CarrierMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# carriers


class TableCarrier:
    """A finite semigroup; with ``contracted=True`` the zero θ is identified with 0."""

    is_finite = True

    def __init__(self, table: sg.CayleyTable, contracted: bool = False):
        if contracted and table.zero is None:
            raise ValueError("contracted algebra needs a designated zero")
        self.table = table
        self.contracted = contracted
        self._m = table.table
        # theta is identified with 0 in the contracted algebra
        self._zero = self.theta = table.zero if contracted else None
        self.basis = [s for s in range(table.n) if s != self._zero]
        self._cancellative = sg.is_cancellative(table).both

    def __eq__(self, other):
        return (isinstance(other, TableCarrier) and self.contracted == other.contracted
                and (self.table is other.table or self.table == other.table))

    def __hash__(self):
        return hash((self.table, self.contracted))

    def mul(self, u: int, v: int) -> int | None:
        w = self._m[u][v]
        return None if w == self._zero else w

    def generators(self) -> list[int]:
        return self.basis

    def key(self, w: int):
        return w

    def format(self, w: int) -> str:
        return self.table.names[w]

    def parse(self, name: str) -> int:
        w = self.table.index(name)
        if w == self._zero:
            raise ValueError(f"{name!r} is zero in the contracted algebra")
        return w

    @property
    def identity(self) -> int | None:
        return sg.find_identity(self.table)

    def words_within(self, bound: int | None = None) -> list[int]:
        return self.basis

    def random_word(self, bound: int, rng: random.Random) -> int:
        return rng.choice(self.basis)

    def describe(self) -> str:
        kind = "contracted algebra" if self.contracted else "semigroup algebra"
        return f"{kind} of a {self.table.n}-element table"

    @property
    def cancellative(self) -> bool:
        return self._cancellative


class FamilyCarrier:
    """One of the presented nilpotent semigroups (or its group of fractions)."""

    is_finite = False
    theta = None

    def __init__(self, family: str, variant: str = nil.SEMIGROUP):
        self.family = family
        self.variant = variant
        self.gens = nil.generators(family, variant)

    def __eq__(self, other):
        return (isinstance(other, FamilyCarrier) and self.family == other.family
                and self.variant == other.variant)

    def __hash__(self):
        return hash((self.family, self.variant))

    def mul(self, u: nil.NilWord, v: nil.NilWord) -> nil.NilWord:
        return nil.mul(u, v)

    def generators(self) -> list[nil.NilWord]:
        # x, y, z generate S; in the group of fractions commuting with a
        # generator already means commuting with its inverse
        return [self.gens["x"], self.gens["y"], self.gens["z"]]

    def key(self, w: nil.NilWord):
        return w.sort_key()

    def format(self, w: nil.NilWord) -> str:
        return nil.format_word(w)

    def parse(self, text: str) -> nil.NilWord:
        return nil.parse_word(text, self.family, self.variant)

    @property
    def identity(self) -> nil.NilWord:
        return nil.identity(self.family, self.variant)

    @property
    def cancellative(self) -> bool:
        return True

    def words_within(self, bound: int) -> list[nil.NilWord]:
        return nil.words_within(self.family, self.variant, bound)

    def random_word(self, bound: int, rng: random.Random) -> nil.NilWord:
        return nil.random_word(self.family, self.variant, bound, rng)

    def describe(self) -> str:
        return f"{self.family} {self.variant}"

    def embedded(self, variant: str) -> "FamilyCarrier":
        return FamilyCarrier(self.family, variant)


Carrier = TableCarrier | FamilyCarrier


# ---------------------------------------------------------------------------
# elements


class AlgebraElement:
    """Finite-support linear combination; zero coefficients are never stored."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "SemigroupAlgebra", coeffs: dict):
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def carrier(self):
        return self.algebra.carrier

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def _check(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise CarrierMismatch(f"{self.algebra} vs {other.algebra}")

    def support(self) -> list:
        return sorted(self.coeffs, key=self.carrier.key)

    def coefficient(self, w) -> FieldElement:
        return FieldElement(self.field, self.coeffs.get(w, self.field.zero))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        F = self.field
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = F.add(out.get(w, F.zero), c)
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> "AlgebraElement":
        F = self.field
        return AlgebraElement(self.algebra, {w: F.neg(c) for w, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, k) -> "AlgebraElement":
        F = self.field
        k = F.coerce(k)
        if not k:
            return AlgebraElement(self.algebra, {})
        return AlgebraElement(self.algebra, {w: F.mul(k, c) for w, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        reduce = self.field.reduce
        mul = self.carrier.mul
        out: dict = {}
        get = out.get
        # accumulate unreduced products, reduce once per word
        for u, a in self.coeffs.items():
            for v, b in other.coeffs.items():
                w = mul(u, v)
                if w is not None:
                    out[w] = get(w, 0) + a * b
        out = {w: reduce(c) for w, c in out.items()}
        return AlgebraElement(self.algebra, {w: c for w, c in out.items() if c})

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def terms(self) -> list[tuple]:
        return [(w, self.coeffs[w]) for w in self.support()]

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for w, c in self.terms():
            name = self.carrier.format(w)
            if c == F.one:
                parts.append(name)
            else:
                parts.append(f"{F.format(c)}*{name}" if " " not in name else f"{F.format(c)}*({name})")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"

    def to_json(self) -> list[dict]:
        F = self.field
        return [{"word": self.carrier.format(w), "coeff": F.format(c)} for w, c in self.terms()]


@dataclass(frozen=True, eq=False)
class SemigroupAlgebra:
    carrier: Carrier
    field: FieldSpec

    def __eq__(self, other):
        return (isinstance(other, SemigroupAlgebra) and self.field == other.field
                and self.carrier == other.carrier)

    def __hash__(self):
        return hash((self.carrier, self.field))

    def __str__(self):
        return f"{self.field}[{self.carrier.describe()}]"

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def word(self, w, coeff=1) -> AlgebraElement:
        c = self.field.coerce(coeff)
        return AlgebraElement(self, {w: c} if c and w != self.carrier.theta else {})

    def one(self) -> AlgebraElement:
        e = self.carrier.identity
        if e is None:
            raise ValueError(f"{self} has no identity word")
        return self.word(e)

    def element(self, coeffs: dict | Iterable[tuple]) -> AlgebraElement:
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        F = self.field
        out: dict = {}
        theta = self.carrier.theta
        for w, c in items:
            if w != theta:
                out[w] = F.add(out.get(w, F.zero), F.coerce(c))
        return AlgebraElement(self, {w: c for w, c in out.items() if c})

    def from_vector(self, words: Sequence, vec: Sequence) -> AlgebraElement:
        return AlgebraElement(self, {w: c for w, c in zip(words, vec) if c})

    def sum(self, elements: Iterable[AlgebraElement]) -> AlgebraElement:
        out = self.zero()
        for e in elements:
            out = out + e
        return out

    def random(self, rng: random.Random, bound: int = 3, max_terms: int = 4,
               nonzero: bool = True) -> AlgebraElement:
        """Random element with up to ``max_terms`` words inside the support bound."""
        while True:
            k = rng.randint(1, max_terms)
            a = self.element([(self.carrier.random_word(bound, rng),
                               self.field.random_nonzero(rng)) for _ in range(k)])
            if a or not nonzero:
                return a

    def from_json(self, items: list[dict]) -> AlgebraElement:
        return self.element([(self.carrier.parse(d["word"]), d["coeff"]) for d in items])



def embed(a: AlgebraElement, target: SemigroupAlgebra, word_map) -> AlgebraElement:
    """Push ``a`` along a word-level map into another algebra over the same field."""
    return target.element([(word_map(w), c) for w, c in a.coeffs.items()])


def to_group_algebra(a: AlgebraElement) -> AlgebraElement:
    """FS -> FG_S for the nilpotent families (identity on exponents)."""
    A = SemigroupAlgebra(a.carrier.embedded(nil.GROUP), a.field)
    return AlgebraElement(A, {nil.group_of_fractions_embed(w): c for w, c in a.coeffs.items()})


def to_semigroup_algebra(a: AlgebraElement) -> AlgebraElement:
    """FG_S -> FS on elements whose support already lies in S."""
    A = SemigroupAlgebra(a.carrier.embedded(nil.SEMIGROUP), a.field)
    return AlgebraElement(A, {nil.to_semigroup(w): c for w, c in a.coeffs.items()})


# ---------------------------------------------------------------------------
# centre


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def is_central(a: AlgebraElement) -> bool:
    """``[g, a] = 0`` for every generator g of the carrier."""
    if not a.coeffs:
        return True
    carrier = a.carrier
    reduce = a.field.reduce
    mul = carrier.mul
    for g in carrier.generators():
        left: dict = {}
        right: dict = {}
        for u, c in a.coeffs.items():
            w = mul(g, u)
            if w is not None:
                left[w] = left.get(w, 0) + c
            w = mul(u, g)
            if w is not None:
                right[w] = right.get(w, 0) + c
        left = {w: c for w, c in ((w, reduce(c)) for w, c in left.items()) if c}
        right = {w: c for w, c in ((w, reduce(c)) for w, c in right.items()) if c}
        if left != right:
            return False
    return True


@dataclass(frozen=True)
class ClassSum:
    # None marks a centre basis vector obtained by linear solve rather than
    # as a sum over a conjugacy set
    representative: Word | None
    element: AlgebraElement

    def __str__(self):
        return str(self.element)


def coordinate_matrix(columns: Sequence[AlgebraElement]) -> tuple[list, list[list]]:
    """Rows indexed by the union of supports, one column per element."""
    if not columns:
        return [], []
    carrier = columns[0].carrier
    F = columns[0].field
    words = sorted({w for c in columns for w in c.coeffs}, key=carrier.key)
    M = [[col.coeffs.get(w, F.zero) for col in columns] for w in words]
    return words, M


def centrality_matrix(columns: Sequence[AlgebraElement]) -> list[list]:
    """Stacked coordinates of ``[g, col]`` over all generators g.

    A combination ``sum lam_i col_i`` is central iff ``M lam = 0``.
    """
    if not columns:
        return []
    A = columns[0].algebra
    rows: list[list] = []
    for g in A.carrier.generators():
        gw = A.word(g)
        _, M = coordinate_matrix([commutator(gw, col) for col in columns])
        rows.extend(M)
    return rows


def combine(columns: Sequence[AlgebraElement], lam: Sequence) -> AlgebraElement:
    A = columns[0].algebra
    F = A.field
    out: dict = {}
    for col, l in zip(columns, lam):
        if not l:
            continue
        for w, c in col.coeffs.items():
            out[w] = F.add(out.get(w, F.zero), F.mul(l, c))
    return AlgebraElement(A, {w: c for w, c in out.items() if c})


def center_by_solve(A: SemigroupAlgebra) -> list[AlgebraElement]:
    """Basis of Z(FS) for a finite carrier by solving ``[g, c] = 0`` directly."""
    if not A.carrier.is_finite:
        raise ValueError("brute-force centre needs a finite carrier")
    basis = [A.word(w) for w in A.carrier.basis]
    M = centrality_matrix(basis)
    return [combine(basis, v) for v in nullspace(M, A.field, len(basis))]


def center_basis(A: SemigroupAlgebra, support_bound: int = 4) -> list[ClassSum]:
    """Class sums spanning Z(FS).

    Finite cancellative tables (groups) give conjugacy-class sums; finite
    non-cancellative tables fall back to :func:`center_by_solve`.  For the
    nilpotent families only words inside ``support_bound`` are used.
    """
    carrier = A.carrier
    if isinstance(carrier, TableCarrier):
        if not carrier.cancellative:
            return [ClassSum(None, c) for c in center_by_solve(A)]
        delta = sg.delta_set(carrier.table)
        seen, out = set(), []
        for s in carrier.basis:
            cls = frozenset(delta[s].conjugates)
            if cls in seen:
                continue
            seen.add(cls)
            out.append(ClassSum(s, A.element([(t, 1) for t in cls])))
        return out
    seen, out = set(), []
    for s in carrier.words_within(support_bound):
        words = nil.class_sum_words(s)
        if words is None or words in seen:
            continue
        seen.add(words)
        out.append(ClassSum(words[0], A.element([(t, 1) for t in words])))
    return out


def contracted_algebra(T: sg.CayleyTable, field: FieldSpec) -> SemigroupAlgebra:
    """F_0 S: basis S minus θ, products landing on θ become 0."""
    if T.zero is None:
        raise ValueError("table has no designated zero")
    return SemigroupAlgebra(TableCarrier(T, contracted=True), field)


def table_algebra(T: sg.CayleyTable, field: FieldSpec) -> SemigroupAlgebra:
    return SemigroupAlgebra(TableCarrier(T), field)


def family_algebra(family: str, variant: str, field: FieldSpec) -> SemigroupAlgebra:
    return SemigroupAlgebra(FamilyCarrier(family, variant), field)


# ---------------------------------------------------------------------------
# expression syntax: "2*x*y + z", "e + z", "x^-1 - 1/2*y"


def _split_terms(text: str) -> list[tuple[str, str]]:
    """Split on top-level + and -, keeping the minus of an exponent like ``x^-1``."""
    terms, sign, buf = [], "+", ""
    for ch in text:
        if ch in "+-" and not buf.rstrip().endswith("^"):
            if buf.strip():
                terms.append((sign, buf.strip()))
                sign, buf = ch, ""
            else:
                sign = "-" if (sign == "-") != (ch == "-") else "+"
            continue
        buf += ch
    if not buf.strip():
        raise ValueError(f"dangling sign in {text!r}")
    terms.append((sign, buf.strip()))
    return terms


def parse_element(A: SemigroupAlgebra, text: str) -> AlgebraElement:
    """Parse ``"2*x*y + z"``-style sums of scalar multiples of words."""
    if not text.strip():
        raise ValueError("empty expression")
    F = A.field
    out = A.zero()
    for sign, term in _split_terms(text):
        coeff = F.one
        words = []
        for f in (f.strip() for f in term.split("*")):
            if not f:
                raise ValueError(f"empty factor in {term!r}")
            if _SCALAR.fullmatch(f):
                coeff = F.mul(coeff, F.coerce(f))
            else:
                words.append(f)
        if sign == "-":
            coeff = F.neg(coeff)
        if not words:
            out = out + A.one().scale(coeff)
            continue
        w = _parse_word_product(A, words)
        if w is not None:
            out = out + A.word(w, coeff)
    return out


_SCALAR = re.compile(r"\d+(/\d+)?")


def _parse_word_product(A: SemigroupAlgebra, factors: list[str]):
    carrier = A.carrier
    if isinstance(carrier, FamilyCarrier):
        return carrier.parse(" ".join(factors))
    w = None
    for f in factors:
        for name in f.split():
            v = carrier.table.index(name)
            w = v if w is None else carrier.table.mul(w, v)
    if w is None:
        raise ValueError("empty word")
    if carrier.contracted and w == carrier.table.zero:
        return None
    return w
