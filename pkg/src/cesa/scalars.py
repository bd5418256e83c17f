"""Exact scalars over a prime field F_p or the rationals, plus row reduction.

Internally every other module works with *raw* values (``int`` residues for
F_p, :class:`fractions.Fraction` for Q) and routes arithmetic through the
:class:`FieldSpec`.  :class:`FieldElement` is the boxed public form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

PRIME_FIELD = "prime-field"
RATIONALS = "rationals"


class FieldMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inverse_mod(x: int, p: int) -> int:
    """Inverse of ``x`` modulo ``p`` by the extended Euclidean algorithm."""
    r0, r1 = p, x % p
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(f"{x} is not invertible mod {p}")
    return s0 % p


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        elif self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def from_char(cls, char: int) -> "FieldSpec":
        """``0`` gives Q, a prime gives F_p."""
        return cls.rationals() if char == 0 else cls.prime(char)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME_FIELD else 0

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def size(self) -> int | None:
        return self.p

    def __str__(self):
        return f"F_{self.p}" if self.is_finite else "Q"

    # raw-value arithmetic

    @property
    def zero(self):
        return 0 if self.is_finite else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_finite else Fraction(1)

    def coerce(self, x):
        """Canonical raw value for an int, Fraction, decimal string or FieldElement."""
        if isinstance(x, FieldElement):
            if x.spec != self:
                raise FieldMismatch(f"{x.spec} element used over {self}")
            return x.value
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.is_finite:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"denominator {x.denominator} vanishes in {self}")
                return x.numerator * inverse_mod(x.denominator, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def reduce(self, x):
        """Canonical raw value of an unreduced int (or Fraction over Q)."""
        return x % self.p if self.is_finite else Fraction(x)

    def add(self, x, y):
        return (x + y) % self.p if self.is_finite else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.is_finite else x - y

    def neg(self, x):
        return -x % self.p if self.is_finite else -x

    def mul(self, x, y):
        return x * y % self.p if self.is_finite else x * y

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("division by zero")
        return inverse_mod(x, self.p) if self.is_finite else 1 / x

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def format(self, x) -> str:
        return str(x)

    def elements(self) -> Iterator:
        if not self.is_finite:
            raise ValueError("Q is not enumerable")
        return iter(range(self.p))

    def random(self, rng: random.Random, height: int = 3):
        """Uniform residue for F_p; small-height fraction for Q."""
        if self.is_finite:
            return rng.randrange(self.p)
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def random_nonzero(self, rng: random.Random, height: int = 3):
        while True:
            x = self.random(rng, height)
            if x:
                return x

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: object

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"cannot combine {self.spec} and {other.spec}")
            return other.value
        return self.spec.coerce(other)

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.spec.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FieldElement({self.spec}, {self.value})"


# ---------------------------------------------------------------------------
# linear algebra


@dataclass
class LinearSolution:
    particular: list
    nullspace: list[list]


def rref(A: Sequence[Sequence], field: FieldSpec) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.

    The pivot in each column is the first row (from the top of the unreduced
    block) with a nonzero entry, so results are reproducible.
    """
    M = [[field.coerce(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = field.inv(M[r][c])
        M[r] = [field.mul(inv, x) for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: Sequence[Sequence], field: FieldSpec) -> int:
    return len(rref(A, field)[1]) if A else 0


def nullspace(A: Sequence[Sequence], field: FieldSpec, ncols: int | None = None) -> list[list]:
    """Basis of ``{x : A x = 0}``, one vector per free column in column order."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(A, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in enumerate(pivots):
            if R[row][free]:
                v[pc] = field.neg(R[row][free])
        basis.append(v)
    return basis


def solve_linear(A: Sequence[Sequence], b: Sequence, field: FieldSpec) -> LinearSolution | None:
    """Solve ``A x = b`` exactly; ``None`` when the system is inconsistent."""
    if len(A) != len(b):
        raise ValueError(f"A has {len(A)} rows but b has {len(b)} entries")
    ncols = len(A[0]) if A else 0
    if any(len(row) != ncols for row in A):
        raise ValueError("A is not rectangular")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    if not aug:
        return LinearSolution([], nullspace([], field, ncols))
    R, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in enumerate(pivots):
        x[pc] = R[row][ncols]
    return LinearSolution(x, nullspace(A, field, ncols))


def mat_vec(A: Sequence[Sequence], x: Sequence, field: FieldSpec) -> list:
    out = []
    for row in A:
        acc = field.zero
        for a, b in zip(row, x):
            if a and b:
                acc = field.add(acc, field.mul(field.coerce(a), field.coerce(b)))
        out.append(acc)
    return out


def enumerate_vectors(field: FieldSpec, n: int) -> Iterable[tuple]:
    """All of F_p^n in lexicographic order of residues."""
    return product(range(field.p), repeat=n)
