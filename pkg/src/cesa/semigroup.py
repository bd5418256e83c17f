"""Finite semigroups given by Cayley table, and their structural checks."""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path


class TableError(ValueError):
    """Raised when a Cayley table fails validation."""


@dataclass(frozen=True, eq=False)
class CayleyTable:
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    zero: int | None = None
    identity: int | None = None

    def __post_init__(self):
        n = len(self.names)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if len(set(self.names)) != n:
            raise TableError("element names are not distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise TableError(f"table must be {n}x{n}")
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise TableError(f"entry ({i},{j}) = {v!r} out of range [0,{n})")
        if self.zero is not None:
            z = self.zero
            if any(self.table[z][s] != z or self.table[s][z] != z for s in range(n)):
                raise TableError(f"{self.names[z]!r} does not act as zero")
        if self.identity is not None:
            e = self.identity
            if any(self.table[e][s] != s or self.table[s][e] != s for s in range(n)):
                raise TableError(f"{self.names[e]!r} does not act as identity")

    @property
    def n(self) -> int:
        return len(self.names)

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise TableError(f"unknown element {name!r}") from None

    def validate(self) -> "CayleyTable":
        """Raise :class:`TableError` unless the table is associative."""
        bad = associativity_violation(self)
        if bad is not None:
            a, b, c = (self.names[i] for i in bad)
            raise TableError(f"not associative: ({a}{b}){c} != {a}({b}{c})")
        return self

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (self.names, self.table, self.zero, self.identity) == (
            other.names, other.table, other.zero, other.identity)

    def __hash__(self):
        return hash((self.names, self.table, self.zero, self.identity))

    # serialization

    def to_dict(self) -> dict:
        d = {"names": list(self.names), "table": [list(r) for r in self.table]}
        if self.zero is not None:
            d["zero"] = self.names[self.zero]
        if self.identity is not None:
            d["identity"] = self.names[self.identity]
        return d

    def to_json(self) -> str:
        rows = ",\n    ".join(json.dumps(list(r)) for r in self.table)
        parts = [f'  "names": {json.dumps(list(self.names), ensure_ascii=False)}',
                 f'  "table": [\n    {rows}\n  ]']
        if self.zero is not None:
            parts.append(f'  "zero": {json.dumps(self.names[self.zero], ensure_ascii=False)}')
        if self.identity is not None:
            parts.append(f'  "identity": {json.dumps(self.names[self.identity], ensure_ascii=False)}')
        return "{\n" + ",\n".join(parts) + "\n}\n"

    @classmethod
    def from_dict(cls, d: dict, validate: bool = True) -> "CayleyTable":
        if not isinstance(d, dict) or "names" not in d or "table" not in d:
            raise TableError('expected an object with "names" and "table"')
        names = list(d["names"])
        t = cls(names, d["table"], zero=_lookup(names, d.get("zero")),
                identity=_lookup(names, d.get("identity")))
        return t.validate() if validate else t

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> "CayleyTable":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return cls.from_dict(d, validate)

    @classmethod
    def load(cls, path: str | Path, validate: bool = True) -> "CayleyTable":
        return cls.from_json(Path(path).read_text(encoding="utf-8"), validate)


def _lookup(names: list[str], name: str | None) -> int | None:
    if name is None:
        return None
    if name not in names:
        raise TableError(f"designated element {name!r} not among names")
    return names.index(name)


# ---------------------------------------------------------------------------
# structural checks


def associativity_violation(T: CayleyTable) -> tuple[int, int, int] | None:
    m = T.table
    r = range(T.n)
    for a in r:
        ma = m[a]
        for b in r:
            ab = ma[b]
            mab, mb = m[ab], m[b]
            for c in r:
                if mab[c] != ma[mb[c]]:
                    return a, b, c
    return None


def is_associative(T: CayleyTable) -> bool:
    return associativity_violation(T) is None


@dataclass(frozen=True)
class Cancellativity:
    left: bool
    right: bool

    @property
    def both(self) -> bool:
        return self.left and self.right


def is_cancellative(T: CayleyTable) -> Cancellativity:
    """Left: ``ca = cb => a = b`` (rows injective).  Right: columns injective."""
    n = T.n
    left = all(len(set(row)) == n for row in T.table)
    right = all(len({T.table[a][c] for a in range(n)}) == n for c in range(n))
    return Cancellativity(left, right)


@dataclass(frozen=True)
class OreConditions:
    right: bool
    left: bool


def ore_condition(T: CayleyTable) -> OreConditions:
    """Right: ``sS & tS`` nonempty for all s, t.  Left: ``Ss & St``."""
    n = T.n
    right_ideals = [set(T.table[s]) for s in range(n)]
    left_ideals = [{T.table[x][s] for x in range(n)} for s in range(n)]
    right = all(right_ideals[s] & right_ideals[t] for s in range(n) for t in range(s, n))
    left = all(left_ideals[s] & left_ideals[t] for s in range(n) for t in range(s, n))
    return OreConditions(right, left)


def center_of_semigroup(T: CayleyTable) -> frozenset[int]:
    m = T.table
    return frozenset(s for s in range(T.n) if all(m[s][t] == m[t][s] for t in range(T.n)))


class ConjugationStatus(enum.Enum):
    DEFINED = "defined"
    UNDEFINED = "undefined"
    # several t with x s = t x; only possible without right cancellation
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class Conjugation:
    status: ConjugationStatus
    value: int | None = None
    candidates: tuple[int, ...] = ()

    @property
    def defined(self) -> bool:
        return self.status is ConjugationStatus.DEFINED


def conjugate(T: CayleyTable, s: int, x: int) -> Conjugation:
    """The element t with ``x s = t x``, scanning every t for uniqueness."""
    target = T.table[x][s]
    ts = tuple(t for t in range(T.n) if T.table[t][x] == target)
    if not ts:
        return Conjugation(ConjugationStatus.UNDEFINED)
    if len(ts) > 1:
        return Conjugation(ConjugationStatus.AMBIGUOUS, None, ts)
    return Conjugation(ConjugationStatus.DEFINED, ts[0], ts)


@dataclass(frozen=True)
class ConjugacyData:
    s: int
    conjugates: frozenset[int]
    defined_for_all: bool
    ambiguous_at: tuple[int, ...] = ()
    undefined_at: tuple[int, ...] = ()


def conjugacy_data(T: CayleyTable, s: int) -> ConjugacyData:
    conj, amb, undef = set(), [], []
    for x in range(T.n):
        c = conjugate(T, s, x)
        if c.defined:
            conj.add(c.value)
        elif c.status is ConjugationStatus.AMBIGUOUS:
            amb.append(x)
        else:
            undef.append(x)
    return ConjugacyData(s, frozenset(conj), not amb and not undef, tuple(amb), tuple(undef))


def delta_set(T: CayleyTable) -> dict[int, ConjugacyData]:
    """Members of Delta(S) with their conjugate sets D_S(s).

    For a finite table the finiteness requirement is automatic, so membership
    is exactly "s^x is (uniquely) defined for every x".
    """
    out = {}
    for s in range(T.n):
        data = conjugacy_data(T, s)
        if data.defined_for_all:
            out[s] = data
    return out


def find_identity(T: CayleyTable) -> int | None:
    if T.identity is not None:
        return T.identity
    m = T.table
    for e in range(T.n):
        if all(m[e][s] == s and m[s][e] == s for s in range(T.n)):
            return e
    return None


def find_zero(T: CayleyTable) -> int | None:
    if T.zero is not None:
        return T.zero
    m = T.table
    for z in range(T.n):
        if all(m[z][s] == z and m[s][z] == z for s in range(T.n)):
            return z
    return None


def is_group(T: CayleyTable) -> bool:
    e = find_identity(T)
    if e is None:
        return False
    m = T.table
    return all(any(m[s][t] == e and m[t][s] == e for t in range(T.n)) for s in range(T.n))


def inverse(T: CayleyTable, s: int) -> int:
    e = find_identity(T)
    for t in range(T.n):
        if e is not None and T.table[s][t] == e and T.table[t][s] == e:
            return t
    raise TableError(f"{T.names[s]!r} has no inverse")


@dataclass
class StructureReport:
    associative: bool
    cancellative: Cancellativity
    ore: OreConditions
    group: bool
    center: frozenset[int]
    delta: dict[int, ConjugacyData] = field(default_factory=dict)
    ambiguous_conjugation: bool = False

    def to_dict(self, T: CayleyTable) -> dict:
        nm = T.names
        return {
            "associative": self.associative,
            "cancellative": {"left": self.cancellative.left, "right": self.cancellative.right},
            "ore": {"right": self.ore.right, "left": self.ore.left},
            "group": self.group,
            "center": [nm[s] for s in sorted(self.center)],
            "delta": {nm[s]: sorted(nm[t] for t in d.conjugates)
                      for s, d in sorted(self.delta.items())},
            # conjugation outside cancellative tables extends the usual definition
            "ambiguous_conjugation": self.ambiguous_conjugation,
        }


def structure(T: CayleyTable) -> StructureReport:
    canc = is_cancellative(T)
    delta = delta_set(T)
    amb = any(conjugate(T, s, x).status is ConjugationStatus.AMBIGUOUS
              for s in range(T.n) for x in range(T.n))
    return StructureReport(is_associative(T), canc, ore_condition(T), is_group(T),
                           center_of_semigroup(T), delta, amb)


# ---------------------------------------------------------------------------
# standard tables


def _from_mul(names, mul, identity=None, zero=None) -> CayleyTable:
    n = len(names)
    return CayleyTable(names, [[mul(i, j) for j in range(n)] for i in range(n)],
                       zero=zero, identity=identity)


def cyclic_group(n: int) -> CayleyTable:
    names = ["e"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return _from_mul(names, lambda i, j: (i + j) % n, identity=0)


def dihedral_group(n: int = 4) -> CayleyTable:
    """Symmetries of the n-gon, order 2n.  Element k < n is r^k, n + k is f r^k."""
    def name(k):
        rot = k % n
        r = "" if rot == 0 else "r" if rot == 1 else f"r{rot}"
        if k < n:
            return r or "e"
        return "f" + r

    def mul(i, j):
        # (f^a r^b)(f^c r^d) = f^(a+c) r^(d + (-1)^c b)
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        rot = (d + (b if c == 0 else -b)) % n
        return ((a + c) % 2) * n + rot

    return _from_mul([name(k) for k in range(2 * n)], mul, identity=0)


def quaternion_group() -> CayleyTable:
    names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    # unit quaternion products on (sign, axis)
    basic = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def mul(i, j):
        si, ai = (1 if i < 4 else -1), i % 4
        sj, aj = (1 if j < 4 else -1), j % 4
        s, a = basic[ai, aj]
        s *= si * sj
        return a if s == 1 else a + 4

    return _from_mul(names, mul, identity=0)


def left_zero_semigroup(n: int) -> CayleyTable:
    return _from_mul([f"l{k}" for k in range(n)], lambda i, j: i)


def right_zero_semigroup(n: int) -> CayleyTable:
    return _from_mul([f"r{k}" for k in range(n)], lambda i, j: j)


def direct_product(A: CayleyTable, B: CayleyTable) -> CayleyTable:
    names = [f"({a},{b})" for a in A.names for b in B.names]
    nb = B.n

    def mul(i, j):
        return A.table[i // nb][j // nb] * nb + B.table[i % nb][j % nb]

    ident = None
    ea, eb = find_identity(A), find_identity(B)
    if ea is not None and eb is not None:
        ident = ea * nb + eb
    return _from_mul(names, mul, identity=ident)


def transformation_semigroup(generators: list[tuple[int, ...]]) -> CayleyTable:
    """Closure of the given maps on {0..k-1} under composition.

    Maps act on the right: ``(f g)(i) = g(f(i))``.
    """
    elems: list[tuple[int, ...]] = []
    seen = set()
    frontier = [tuple(g) for g in generators]
    while frontier:
        f = frontier.pop()
        if f in seen:
            continue
        seen.add(f)
        elems.append(f)
        for g in generators:
            h = tuple(g[i] for i in f)
            if h not in seen:
                frontier.append(h)
    elems.sort()
    index = {f: i for i, f in enumerate(elems)}
    names = ["".join(map(str, f)) for f in elems]
    return _from_mul(names, lambda i, j: index[tuple(elems[j][x] for x in elems[i])])


def random_table(n: int, rng: random.Random) -> CayleyTable:
    return CayleyTable([f"s{k}" for k in range(n)],
                       [[rng.randrange(n) for _ in range(n)] for _ in range(n)])


def random_associative_table(rng: random.Random, max_points: int = 3) -> CayleyTable:
    """A random small associative table drawn from a mix of constructions."""
    kind = rng.randrange(4)
    if kind == 0:
        # rejection sampling over all tables of order 1..3
        n = rng.randint(1, 3)
        while True:
            T = random_table(n, rng)
            if is_associative(T):
                return T
    if kind == 1:
        # permutations only: a permutation group
        k = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(1, 2)):
            p = list(range(k))
            rng.shuffle(p)
            gens.append(tuple(p))
        return transformation_semigroup(gens)
    if kind == 2:
        k = rng.randint(2, max_points)
        gens = [tuple(rng.randrange(k) for _ in range(k)) for _ in range(rng.randint(1, 2))]
        return transformation_semigroup(gens)
    A = random_associative_table(rng, max_points) if rng.random() < 0.5 else cyclic_group(rng.randint(1, 3))
    B = cyclic_group(rng.randint(1, 3)) if rng.random() < 0.5 else left_zero_semigroup(2)
    if A.n * B.n > 30:
        return A
    return direct_product(A, B)


def all_associative_tables(n: int):
    """Every associative table on n labelled points (n <= 3 is practical)."""
    names = [f"s{k}" for k in range(n)]
    for flat in product(range(n), repeat=n * n):
        T = CayleyTable(names, [flat[i * n:(i + 1) * n] for i in range(n)])
        if is_associative(T):
            yield T
