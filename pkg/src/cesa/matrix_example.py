"""The seven-parameter subring of 7x7 matrices and its semigroup with zero.

A :class:`ShapeMatrix` is determined by (alpha, a, b, c, d, e, f); each
parameter occupies a fixed set of positions (1-based (row, col)):

    alpha: the diagonal      a: (1,2) (5,7)     b: (1,3) (2,4) (6,7)
    c: (1,4)   d: (1,5) (2,7)   e: (1,6) (3,7)   f: (1,7)

The single-parameter matrices together with 0 form an 8-element semigroup
S; the ring of shape matrices is the contracted algebra F_0 S.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import semigroup as sg
from .algebra import (AlgebraElement, SemigroupAlgebra, center_by_solve, contracted_algebra,
                      is_central, table_algebra)
from .essentiality import (EssentialityVerdict, NoWitness, Status, decide_exhaustive,
                           element_witness)
from .scalars import FieldSpec, rank

LETTERS = ("alpha", "a", "b", "c", "d", "e", "f")
NAMES = ("e_α", "e_a", "e_b", "e_c", "e_d", "e_e", "e_f", "θ")
ZERO_NAME = "θ"

POSITIONS: dict[str, tuple[tuple[int, int], ...]] = {
    "alpha": tuple((i, i) for i in range(1, 8)),
    "a": ((1, 2), (5, 7)),
    "b": ((1, 3), (2, 4), (6, 7)),
    "c": ((1, 4),),
    "d": ((1, 5), (2, 7)),
    "e": ((1, 6), (3, 7)),
    "f": ((1, 7),),
}


class ClosureViolation(AssertionError):
    pass


def _matmul(X, Y, F: FieldSpec):
    n = len(X)
    out = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            x = X[i][k]
            if not x:
                continue
            row = Y[k]
            for j in range(n):
                if row[j]:
                    out[i][j] = F.add(out[i][j], F.mul(x, row[j]))
    return out


@dataclass(frozen=True)
class ShapeMatrix:
    field: FieldSpec
    params: tuple  # raw values in LETTERS order

    @classmethod
    def from_params(cls, field: FieldSpec, **kw) -> "ShapeMatrix":
        return cls(field, tuple(field.coerce(kw.get(k, 0)) for k in LETTERS))

    @classmethod
    def unit(cls, field: FieldSpec, letter: str) -> "ShapeMatrix":
        return cls.from_params(field, **{letter: 1})

    @classmethod
    def random(cls, field: FieldSpec, rng: random.Random) -> "ShapeMatrix":
        return cls(field, tuple(field.random(rng) for _ in LETTERS))

    def realize(self) -> list[list]:
        F = self.field
        M = [[F.zero] * 7 for _ in range(7)]
        for letter, v in zip(LETTERS, self.params):
            for i, j in POSITIONS[letter]:
                M[i - 1][j - 1] = v
        return M

    @classmethod
    def read(cls, field: FieldSpec, M: list[list]) -> "ShapeMatrix":
        """Inverse of :meth:`realize`; raises ClosureViolation off the pattern."""
        params = []
        covered = set()
        for letter in LETTERS:
            vals = {M[i - 1][j - 1] for i, j in POSITIONS[letter]}
            if len(vals) != 1:
                raise ClosureViolation(f"parameter {letter} inconsistent: {sorted(map(str, vals))}")
            params.append(vals.pop())
            covered.update(POSITIONS[letter])
        for i in range(1, 8):
            for j in range(1, 8):
                if (i, j) not in covered and M[i - 1][j - 1]:
                    raise ClosureViolation(f"nonzero entry at ({i},{j}) outside the shape")
        return cls(field, tuple(params))

    def __mul__(self, other: "ShapeMatrix") -> "ShapeMatrix":
        return shape_mul(self, other)

    def __add__(self, other: "ShapeMatrix") -> "ShapeMatrix":
        F = self.field
        return ShapeMatrix(F, tuple(F.add(x, y) for x, y in zip(self.params, other.params)))

    def is_zero(self) -> bool:
        return not any(self.params)

    def as_dict(self) -> dict[str, str]:
        return {k: str(v) for k, v in zip(LETTERS, self.params)}


def shape_mul(M: ShapeMatrix, N: ShapeMatrix) -> ShapeMatrix:
    if M.field != N.field:
        raise ValueError("shape matrices over different fields")
    return ShapeMatrix.read(M.field, _matmul(M.realize(), N.realize(), M.field))


def extract_semigroup(field: FieldSpec | None = None) -> sg.CayleyTable:
    """Multiply the single-letter matrices; anything not a letter must be 0 (θ)."""
    F = field or FieldSpec.prime(2)
    units = [ShapeMatrix.unit(F, k).realize() for k in LETTERS]
    theta = len(LETTERS)
    table = []
    for X in units:
        row = []
        for Y in units:
            P = _matmul(X, Y, F)
            if not any(any(r) for r in P):
                row.append(theta)
                continue
            try:
                row.append(units.index(P))
            except ValueError:
                raise ClosureViolation("product of letters is neither a letter nor 0") from None
        row.append(theta)
        table.append(row)
    table.append([theta] * (theta + 1))
    return sg.CayleyTable(NAMES, table, zero=theta, identity=0).validate()


def golden_json() -> str:
    return extract_semigroup().to_json()


def to_contracted(M: ShapeMatrix, A: SemigroupAlgebra) -> AlgebraElement:
    return A.element([(i, v) for i, v in enumerate(M.params)])


def from_contracted(a: AlgebraElement) -> ShapeMatrix:
    F = a.field
    return ShapeMatrix(F, tuple(a.coeffs.get(i, F.zero) for i in range(len(LETTERS))))


@dataclass
class IsoProof:
    field: str
    comparisons: list[dict]
    dimension: tuple[int, int]

    @property
    def ok(self) -> bool:
        return all(c["match"] for c in self.comparisons) and self.dimension[0] == self.dimension[1]


def verify_iso_contracted(field: FieldSpec) -> IsoProof:
    """Structure constants of the shape ring against F_0 S on all 49 basis pairs."""
    T = extract_semigroup(field)
    A = contracted_algebra(T, field)
    rows = []
    for i, x in enumerate(LETTERS):
        for j, y in enumerate(LETTERS):
            lhs = shape_mul(ShapeMatrix.unit(field, x), ShapeMatrix.unit(field, y))
            rhs = from_contracted(A.word(i) * A.word(j))
            rows.append({"left": NAMES[i], "right": NAMES[j], "matrix": lhs.as_dict(),
                         "contracted": rhs.as_dict(), "match": lhs == rhs})
    return IsoProof(str(field), rows, (len(LETTERS), len(A.carrier.basis)))


@dataclass
class DirectSumProof:
    field: str
    pairs_checked: int
    mismatches: list[tuple[str, str]]
    transition_rank: int

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.transition_rank == len(NAMES)


def _split(a: AlgebraElement, A0: SemigroupAlgebra):
    """FS -> F + F_0 S: s -> (1, s mod θ), extended linearly."""
    F = a.field
    aug = F.zero
    for c in a.coeffs.values():
        aug = F.add(aug, c)
    theta = a.carrier.table.zero
    return aug, A0.element([(w, c) for w, c in a.coeffs.items() if w != theta])


def verify_direct_sum(field: FieldSpec) -> DirectSumProof:
    T = extract_semigroup(field)
    FS = table_algebra(T, field)
    A0 = contracted_algebra(T, field)
    bad = []
    for s in range(T.n):
        for t in range(T.n):
            lhs = _split(FS.word(s) * FS.word(t), A0)
            (x1, y1), (x2, y2) = _split(FS.word(s), A0), _split(FS.word(t), A0)
            rhs = (field.mul(x1, x2), y1 * y2)
            if lhs != rhs:
                bad.append((T.names[s], T.names[t]))
    # rows: images of the 8 basis words in the 1 + 7 coordinates
    M = []
    for s in range(T.n):
        x, y = _split(FS.word(s), A0)
        M.append([x] + [y.coeffs.get(w, field.zero) for w in A0.carrier.basis])
    return DirectSumProof(str(field), T.n * T.n, bad, rank(M, field))


@dataclass
class MatrixVerdict:
    field: str
    noncommutative: bool
    contracted: EssentialityVerdict
    full: EssentialityVerdict
    center_dim: int
    center_basis: list[dict]

    @property
    def ok(self) -> bool:
        good = (Status.CENTRALLY_ESSENTIAL,)
        return self.noncommutative and self.contracted.status in good and self.full.status in good


def _sampled(A: SemigroupAlgebra, trials: int, rng: random.Random) -> EssentialityVerdict:
    Z = center_by_solve(A)
    witnesses = []
    failures = []
    while len(witnesses) + len(failures) < trials:
        a = A.random(rng, max_terms=len(A.carrier.basis))
        if is_central(a):
            continue
        r = element_witness(a, Z)
        if isinstance(r, NoWitness):
            failures.append(a)
        else:
            witnesses.append(r)
    if failures:
        return EssentialityVerdict(Status.NOT_CENTRALLY_ESSENTIAL, witnesses, failures[0],
                                   {"samples": trials, "failures": len(failures)})
    return EssentialityVerdict(Status.CENTRALLY_ESSENTIAL, witnesses, None,
                               {"samples": trials, "center_dim": len(Z)}, exact=False,
                               notes=[f"witnessed on {trials} samples; exact in characteristic 2"])


def verify_centrally_essential_matrix(field: FieldSpec, trials: int = 1000,
                                      rng: random.Random | None = None) -> MatrixVerdict:
    rng = rng or random.Random(0)
    T = extract_semigroup(field)
    A0 = contracted_algebra(T, field)
    FS = table_algebra(T, field)
    ea, eb = A0.word(1), A0.word(2)
    noncomm = ea * eb != eb * ea
    if field.is_finite:
        v0, v1 = decide_exhaustive(A0), decide_exhaustive(FS)
    else:
        v0, v1 = _sampled(A0, trials, rng), _sampled(FS, trials, rng)
    Z = center_by_solve(A0)
    return MatrixVerdict(str(field), noncomm, v0, v1, len(Z), [z.to_json() for z in Z])
