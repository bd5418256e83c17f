"""The semigroups <x, y, z | z central, xy = zyx> with and without z^2 = e.

Every element has the unique normal form ``z^a y^b x^c``, stored as the
exponent triple ``(a, b, c)``.  Moving x^c past y^e produces z^(c e), which
gives the product rule

    (a, b, c) . (d, e, f) = (a + d + c e, b + e, c + f).

``EX22`` adds ``z^2 = e`` (a is taken mod 2); ``EX23`` leaves z free.  The
*semigroup* variant keeps nonnegative exponents (and includes e, so it is a
monoid); the *group* variant is the group of fractions.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

EX22 = "ex22"
EX23 = "ex23"
SEMIGROUP = "semigroup"
GROUP = "group"
FAMILIES = (EX22, EX23)
VARIANTS = (SEMIGROUP, GROUP)


class UndefinedConjugate(ArithmeticError):
    pass


class DecompositionError(ArithmeticError):
    pass


@dataclass(frozen=True, slots=True)
class NilWord:
    family: str
    variant: str
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.family == EX22 and not 0 <= self.a < 2:
            object.__setattr__(self, "a", self.a % 2)
        if self.variant == SEMIGROUP and (self.b < 0 or self.c < 0 or self.a < 0):
            raise ValueError(f"{self.exponents} is not in the {self.family} semigroup")

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    @property
    def exponents(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def __mul__(self, other: "NilWord") -> "NilWord":
        return mul(self, other)

    def __str__(self):
        return format_word(self)

    def sort_key(self):
        return (abs(self.b) + abs(self.c) + abs(self.a), self.c, self.b, self.a)


def word(family: str, variant: str, a: int = 0, b: int = 0, c: int = 0) -> NilWord:
    return NilWord(family, variant, a, b, c)


def identity(family: str, variant: str) -> NilWord:
    return NilWord(family, variant, 0, 0, 0)


def generators(family: str, variant: str) -> dict[str, NilWord]:
    return {"x": NilWord(family, variant, 0, 0, 1),
            "y": NilWord(family, variant, 0, 1, 0),
            "z": NilWord(family, variant, 1, 0, 0)}


def _check_same(u: NilWord, v: NilWord):
    if u.family != v.family or u.variant != v.variant:
        raise ValueError(f"cannot combine {u.family}/{u.variant} with {v.family}/{v.variant}")


def mul(u: NilWord, v: NilWord) -> NilWord:
    _check_same(u, v)
    a = u.a + v.a + u.c * v.b
    if u.family == EX22:
        a %= 2
    return NilWord(u.family, u.variant, a, u.b + v.b, u.c + v.c)


def power(u: NilWord, k: int) -> NilWord:
    if k < 0:
        return power(inverse(u), -k)
    out = identity(u.family, u.variant)
    for _ in range(k):
        out = mul(out, u)
    return out


def inverse(u: NilWord) -> NilWord:
    """Group inverse: (z^a y^b x^c)^-1 = x^-c y^-b z^-a = z^(bc - a) y^-b x^-c."""
    if u.variant != GROUP:
        if u.b == u.c == 0 and (u.family == EX22 or u.a == 0):
            return NilWord(u.family, u.variant, -u.a % 2 if u.family == EX22 else 0, 0, 0)
        raise ValueError(f"{u} has no inverse in the semigroup")
    return NilWord(u.family, u.variant, u.b * u.c - u.a, -u.b, -u.c)


def conjugate_exponent(s: NilWord, x: NilWord) -> int:
    """z-exponent of the t with ``x s = t x`` (before reduction or domain checks)."""
    return s.a + x.c * s.b - x.b * s.c


def conjugate(s: NilWord, x: NilWord) -> NilWord:
    """The element t with ``x s = t x``.

    Raises :class:`UndefinedConjugate` in the EX23 semigroup when the required
    z-exponent is negative.
    """
    _check_same(s, x)
    a = conjugate_exponent(s, x)
    if s.family == EX23 and s.variant == SEMIGROUP and a < 0:
        raise UndefinedConjugate(f"{s}^{x} would need z^{a}")
    return NilWord(s.family, s.variant, a, s.b, s.c)


def is_central(s: NilWord) -> bool:
    if s.family == EX22:
        return s.b % 2 == 0 and s.c % 2 == 0
    return s.b == 0 and s.c == 0


@dataclass(frozen=True)
class DeltaMembership:
    in_delta: bool
    # None means the conjugate set is infinite or some s^x is undefined
    conjugates: frozenset[NilWord] | None
    reason: str


def delta_membership(s: NilWord) -> DeltaMembership:
    if s.family == EX22:
        if s.b % 2 or s.c % 2:
            zs = NilWord(s.family, s.variant, s.a + 1, s.b, s.c)
            return DeltaMembership(True, frozenset({s, zs}), "conjugates differ by z")
        return DeltaMembership(True, frozenset({s}), "central")
    if s.b == 0 and s.c == 0:
        return DeltaMembership(True, frozenset({s}), "central")
    if s.variant == SEMIGROUP and s.c > 0:
        return DeltaMembership(False, None, "s^y needs a negative z-exponent")
    return DeltaMembership(False, None, "z-exponents of conjugates are unbounded")


def class_sum_words(s: NilWord) -> tuple[NilWord, ...] | None:
    d = delta_membership(s)
    if not d.in_delta:
        return None
    return tuple(sorted(d.conjugates, key=NilWord.sort_key))


def group_of_fractions_embed(s: NilWord) -> NilWord:
    return NilWord(s.family, GROUP, s.a, s.b, s.c)


def to_semigroup(g: NilWord) -> NilWord:
    """Inverse of the embedding; raises ValueError when g is not in S."""
    return NilWord(g.family, SEMIGROUP, g.a, g.b, g.c)


def in_semigroup(g: NilWord) -> bool:
    return g.b >= 0 and g.c >= 0 and (g.family == EX22 or g.a >= 0)


def central_decompose(g: NilWord) -> tuple[NilWord, NilWord]:
    """Write a group element as ``s t^-1`` with s in S and t central in S.

    EX22: t = x^(2m) y^(2n) with the least m, n making s = g t land in S.
    EX23: the centre of S is only the powers of z, so this is possible exactly
    when the y- and x-exponents of g are nonnegative.
    """
    fam = g.family
    if g.variant != GROUP:
        g = group_of_fractions_embed(g)
    if fam == EX22:
        m = -(-max(0, -g.c) // 2)
        n = -(-max(0, -g.b) // 2)
        t = mul(power(word(fam, GROUP, c=1), 2 * m), power(word(fam, GROUP, b=1), 2 * n))
    else:
        if g.b < 0 or g.c < 0:
            raise DecompositionError(f"{g} is not in S Z(S)^-1 for {fam}")
        t = word(fam, GROUP, a=max(0, -g.a))
    s = mul(g, t)
    if not in_semigroup(s):
        raise DecompositionError(f"central decomposition of {g} failed")
    return to_semigroup(s), to_semigroup(t)


def words_within(family: str, variant: str, bound: int) -> list[NilWord]:
    """All words with max(|a|, |b|, |c|) <= bound, in sort_key order."""
    lo = 0 if variant == SEMIGROUP else -bound
    a_range = range(2) if family == EX22 else range(lo, bound + 1)
    out = [NilWord(family, variant, a, b, c)
           for a in a_range for b in range(lo, bound + 1) for c in range(lo, bound + 1)]
    out.sort(key=NilWord.sort_key)
    return out


def random_word(family: str, variant: str, bound: int, rng: random.Random) -> NilWord:
    lo = 0 if variant == SEMIGROUP else -bound
    a = rng.randrange(2) if family == EX22 else rng.randint(lo, bound)
    return NilWord(family, variant, a, rng.randint(lo, bound), rng.randint(lo, bound))


# ---------------------------------------------------------------------------
# text form


def format_word(w: NilWord) -> str:
    parts = []
    for g, k in (("z", w.a), ("y", w.b), ("x", w.c)):
        if k == 1:
            parts.append(g)
        elif k:
            parts.append(f"{g}^{k}")
    return " ".join(parts) or "e"


_FACTOR = re.compile(r"\s*([exyz])\s*(?:\^\s*(-?\d+))?\s*")


def parse_word(text: str, family: str, variant: str) -> NilWord:
    """Parse a product of generators such as ``"z y^2 x"`` or ``"x*y^-1"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    gens = generators(family, GROUP)
    acc = identity(family, GROUP)
    pos = 0
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        g, k = m.group(1), int(m.group(2) or 1)
        if g != "e":
            acc = mul(acc, power(gens[g], k))
        pos = m.end()
        if pos < len(text) and text[pos] == "*":
            pos += 1
    if variant == SEMIGROUP:
        if not in_semigroup(acc):
            raise ValueError(f"{format_word(acc)} is not in the semigroup")
        return to_semigroup(acc)
    return acc
