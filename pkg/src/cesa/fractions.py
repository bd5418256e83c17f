"""Classical ring of fractions with central denominators.

Every regular ``s`` can be pushed onto a central denominator: find a regular
``g`` with ``s g = t`` central, then ``s^-1 = g t^-1``.  Fractions are
therefore stored as ``num * den^-1`` with ``den`` central and regular, and
equality is plain cross-multiplication.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import nilpotent as nil
from .algebra import (AlgebraElement, FamilyCarrier, SemigroupAlgebra, TableCarrier,
                      centrality_matrix, coordinate_matrix, is_central, to_group_algebra)
from .essentiality import InvalidWitness, Witness, transfer_fg_to_fs, witness_for
from .scalars import nullspace, solve_linear

DEFAULT_BOUND = 2


class Regularity(str, enum.Enum):
    REGULAR = "regular"
    ZERO_DIVISOR = "zero-divisor"
    REGULAR_UP_TO_BOUND = "regular-up-to-bound"


@dataclass(frozen=True)
class RegularityReport:
    status: Regularity
    bound: int | None = None
    cofactor: AlgebraElement | None = None
    # "right" means b * cofactor = 0, "left" means cofactor * b = 0
    side: str | None = None
    right_kernel_dim: int = 0
    left_kernel_dim: int = 0

    @property
    def regular(self) -> bool:
        return self.status is not Regularity.ZERO_DIVISOR

    def to_json(self) -> dict:
        return {"status": self.status.value, "bound": self.bound,
                "cofactor": None if self.cofactor is None else self.cofactor.to_json(),
                "side": self.side, "right_kernel_dim": self.right_kernel_dim,
                "left_kernel_dim": self.left_kernel_dim}


def _kernel(b: AlgebraElement, words: list, right: bool) -> list[AlgebraElement]:
    A = b.algebra
    cols = [b * A.word(w) if right else A.word(w) * b for w in words]
    _, M = coordinate_matrix(cols)
    return [A.from_vector(words, v) for v in nullspace(M, A.field, len(words))]


def is_regular(b: AlgebraElement, bound: int = DEFAULT_BOUND) -> RegularityReport:
    """Exact for finite carriers and single words; bounded kernel solve otherwise."""
    if not b:
        return RegularityReport(Regularity.ZERO_DIVISOR, None, b.algebra.word(b.carrier.identity), "right")
    carrier = b.carrier
    if carrier.cancellative and len(b.coeffs) == 1:
        # translation by a word of a cancellative semigroup is injective
        return RegularityReport(Regularity.REGULAR)
    if carrier.is_finite:
        words, exact = carrier.basis, True
    else:
        words, exact = carrier.words_within(bound), False
    rk = _kernel(b, words, right=True)
    lk = _kernel(b, words, right=False)
    if rk or lk:
        side, cof = ("right", rk[0]) if rk else ("left", lk[0])
        return RegularityReport(Regularity.ZERO_DIVISOR, None if exact else bound, cof, side,
                                len(rk), len(lk))
    return RegularityReport(Regularity.REGULAR if exact else Regularity.REGULAR_UP_TO_BOUND,
                            None if exact else bound)


# ---------------------------------------------------------------------------
# central multipliers


@dataclass(frozen=True)
class CentralMultiplier:
    """``b z = t`` (or ``z b = t`` on the left) with z regular and t central."""

    b: AlgebraElement
    z: AlgebraElement
    t: AlgebraElement
    side: str = "right"
    bound: int | None = None

    def check(self) -> "CentralMultiplier":
        prod = self.b * self.z if self.side == "right" else self.z * self.b
        if prod != self.t:
            raise InvalidWitness("b z != t")
        if not is_central(self.t) or not self.t:
            raise InvalidWitness(f"{self.t} is not a nonzero central element")
        if not is_regular(self.z, self.bound or DEFAULT_BOUND).regular:
            raise InvalidWitness(f"{self.z} is a zero-divisor")
        return self


def _finite_multiplier(b: AlgebraElement, side: str) -> CentralMultiplier | None:
    # Q_cl(FS) = FS for a finite-dimensional algebra: invert b outright
    A = b.algebra
    words = A.carrier.basis
    one = A.one()
    cols = [b * A.word(w) if side == "right" else A.word(w) * b for w in words]
    rows, M = coordinate_matrix(cols + [one])
    M = [r[:-1] for r in M]
    rhs = [one.coeffs.get(w, A.field.zero) for w in rows]
    sol = solve_linear(M, rhs, A.field) if M else None
    if sol is None:
        return None
    z = A.from_vector(words, sol.particular)
    return CentralMultiplier(b, z, one, side).check()


def central_multiplier(b: AlgebraElement, bound: int = DEFAULT_BOUND,
                       side: str = "right") -> CentralMultiplier | None:
    """Regular z in FS with ``b z`` central; None when the bounded search fails.

    For the nilpotent families the search runs in FG_S: solve for x on words
    within the bound with ``b x`` central and regular, then clear x's central
    denominators so that z = x T lies in FS.
    """
    reg = is_regular(b, bound)
    if not reg.regular:
        raise ValueError(f"{b} is a zero-divisor (cofactor {reg.cofactor})")
    A = b.algebra
    if is_central(b) and A.carrier.identity is not None:
        return CentralMultiplier(b, A.one(), b, side, bound).check()
    if isinstance(A.carrier, TableCarrier):
        return _finite_multiplier(b, side)
    bg = to_group_algebra(b) if A.carrier.variant == nil.SEMIGROUP else b
    G = bg.algebra
    if len(bg.coeffs) == 1:
        (w, c), = bg.coeffs.items()
        candidates = [G.word(nil.inverse(w), A.field.inv(c))]
    else:
        candidates = None
    for k in range(1, bound + 1):
        if candidates is None:
            words = G.carrier.words_within(k)
            cols = [bg * G.word(w) if side == "right" else G.word(w) * bg for w in words]
            kernel = nullspace(centrality_matrix(cols), A.field, len(words))
            found = [G.from_vector(words, v) for v in kernel]
            found.sort(key=lambda x: (len(x.coeffs), max(G.carrier.key(w) for w in x.coeffs)))
            if len(found) > 1:
                found.append(G.sum(found))
        else:
            found = candidates
        for x in found:
            y = bg * x if side == "right" else x * bg
            if not y or not is_regular(y, bound).regular or not is_regular(x, bound).regular:
                continue
            try:
                cl = transfer_fg_to_fs(x)
            except nil.DecompositionError:
                continue
            z = cl.a_prime
            if A.carrier.variant == nil.GROUP:
                z = to_group_algebra(z)
            t = b * z if side == "right" else z * b
            return CentralMultiplier(b, z, t, side, bound).check()
        if candidates is not None:
            break
    return None


# ---------------------------------------------------------------------------
# fractions


@dataclass(frozen=True, eq=False)
class CentralFraction:
    num: AlgebraElement
    den: AlgebraElement
    regular_bound: int | None = None

    def __post_init__(self):
        if self.num.algebra != self.den.algebra:
            raise ValueError("numerator and denominator live in different algebras")
        if not is_central(self.den):
            raise ValueError(f"denominator {self.den} is not central")
        reg = is_regular(self.den, self.regular_bound or DEFAULT_BOUND)
        if not reg.regular:
            raise ValueError(f"denominator {self.den} is a zero-divisor")
        if reg.status is Regularity.REGULAR_UP_TO_BOUND and self.regular_bound is None:
            object.__setattr__(self, "regular_bound", reg.bound)

    @property
    def algebra(self) -> SemigroupAlgebra:
        return self.num.algebra

    @classmethod
    def embed(cls, a: AlgebraElement) -> "CentralFraction":
        return cls(a, a.algebra.one())

    def __bool__(self):
        return bool(self.num)

    def _bound(self, other: "CentralFraction") -> int | None:
        bs = [b for b in (self.regular_bound, other.regular_bound) if b is not None]
        return min(bs) if bs else None

    def __add__(self, other: "CentralFraction") -> "CentralFraction":
        return CentralFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den, self._bound(other)).reduced()

    def __neg__(self):
        return CentralFraction(-self.num, self.den, self.regular_bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "CentralFraction") -> "CentralFraction":
        # central denominators commute past the other numerator
        return CentralFraction(self.num * other.num, self.den * other.den,
                               self._bound(other)).reduced()

    def __eq__(self, other):
        if not isinstance(other, CentralFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_central(self) -> bool:
        # [g, a t^-1] = [g, a] t^-1 and t is regular
        return is_central(self.num)

    def reduced(self) -> "CentralFraction":
        """Cancel a single-word denominator when it divides the numerator exactly."""
        A = self.algebra
        if not self.num:
            return CentralFraction(self.num, A.one(), self.regular_bound)
        if self.num == self.den:
            return CentralFraction(A.one(), A.one(), self.regular_bound)
        if len(self.den.coeffs) != 1 or not isinstance(A.carrier, FamilyCarrier):
            return self
        (t, c), = self.den.coeffs.items()
        if t == A.carrier.identity and c == A.field.one:
            return self
        tinv = nil.inverse(nil.group_of_fractions_embed(t))
        cinv = A.field.inv(c)
        out = {}
        for w, k in self.num.coeffs.items():
            q = nil.mul(nil.group_of_fractions_embed(w), tinv)
            if A.carrier.variant == nil.SEMIGROUP:
                if not nil.in_semigroup(q):
                    return self
                q = nil.to_semigroup(q)
            out[q] = A.field.mul(k, cinv)
        return CentralFraction(A.element(out), A.one(), self.regular_bound)

    def __str__(self):
        return f"({self.num}) * ({self.den})^-1"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json(),
                "den_certificate": {"central": True, "regular_bound": self.regular_bound}}


def qcl_add(p: CentralFraction, q: CentralFraction) -> CentralFraction:
    return p + q


def qcl_mul(p: CentralFraction, q: CentralFraction) -> CentralFraction:
    return p * q


def qcl_eq(p: CentralFraction, q: CentralFraction) -> bool:
    return p == q


def from_group_element(a: AlgebraElement) -> CentralFraction:
    """Realize a in FG_S as a' T^-1 with a' in FS and T central."""
    cl = transfer_fg_to_fs(a)
    FS = cl.a_prime.algebra
    return CentralFraction(cl.a_prime, FS.word(cl.multiplier))


def from_regular(a: AlgebraElement, s: AlgebraElement,
                 bound: int = DEFAULT_BOUND) -> CentralFraction:
    """``a s^-1`` for regular s, rewritten as ``(a g) t^-1`` with ``s g = t`` central."""
    m = central_multiplier(s, bound)
    if m is None:
        raise LookupError(f"no central multiplier for {s} within bound {bound}")
    return CentralFraction(a * m.z, m.t, bound)


@dataclass(frozen=True)
class FractionWitness:
    q: CentralFraction
    c: CentralFraction
    d: CentralFraction

    def check(self) -> "FractionWitness":
        if not self.c or not self.d:
            raise InvalidWitness("zero in fraction witness")
        if not self.c.is_central() or not self.d.is_central():
            raise InvalidWitness("fraction witness not central")
        if self.q * self.c != self.d:
            raise InvalidWitness("q c != d")
        return self


def qcl_witness(q: CentralFraction, bound: int = 4) -> FractionWitness:
    """Central c, d in Q_cl with q c = d, from a witness for the numerator in FS.

    With ``q = a t^-1`` and ``a c' = d'`` in FS, take ``c = c' t``; then
    ``q c = a c' = d'`` with denominator e.
    """
    if not q:
        raise ValueError("q must be nonzero")
    A = q.algebra
    one = A.one()
    if q.is_central():
        return FractionWitness(q, CentralFraction(one, one), q).check()
    w = witness_for(q.num, bound)
    if w is None:
        raise LookupError(f"no witness for numerator {q.num} within bound {bound}")
    c = CentralFraction(w.c * q.den, one)
    d = CentralFraction(w.d, one)
    return FractionWitness(q, c, d).check()


def qcl_center_descent(q: CentralFraction, bound: int = DEFAULT_BOUND) -> tuple[AlgebraElement, AlgebraElement]:
    """Central (eta, eps) in FS with q = eta eps^-1, for central q.

    ``eps = den g`` and ``eta = num g`` where ``den g`` is central; eta is then
    central because q and eps are.
    """
    if not q.is_central():
        raise ValueError(f"{q} is not central")
    m = central_multiplier(q.den, bound)
    if m is None:
        raise LookupError(f"no central multiplier for {q.den}")
    eps = q.den * m.z
    eta = q.num * m.z
    if not is_central(eps) or not is_central(eta):
        raise InvalidWitness("descent produced non-central parts")
    if CentralFraction(eta, eps, q.regular_bound) != q:
        raise InvalidWitness("descent does not reproduce q")
    return eta, eps


@dataclass(frozen=True)
class Descent:
    """From ``s t = r`` in Q_cl with t = c d^-1, r = m n^-1: ``s (c n) = m d``."""

    s: AlgebraElement
    c: AlgebraElement
    d: AlgebraElement
    m: AlgebraElement
    n: AlgebraElement

    @property
    def multiplier(self) -> AlgebraElement:
        return self.c * self.n

    @property
    def product(self) -> AlgebraElement:
        return self.m * self.d

    def witness(self) -> Witness:
        if self.s * self.multiplier != self.product:
            raise InvalidWitness("s (c n) != m d")
        return Witness(self.s, self.multiplier, self.product).checked()


def descend_witness(s: AlgebraElement, t: CentralFraction, r: CentralFraction,
                    bound: int = DEFAULT_BOUND) -> Descent:
    """Turn a central Q_cl witness (t, r) for s into one inside FS."""
    if CentralFraction.embed(s) * t != r:
        raise ValueError("s t != r")
    if not r:
        raise ValueError("r must be nonzero")
    c, d = qcl_center_descent(t, bound)
    m, n = qcl_center_descent(r, bound)
    out = Descent(s, c, d, m, n)
    out.witness()
    return out


def finite_regular_is_invertible(b: AlgebraElement) -> bool:
    """Over a finite-dimensional algebra, a regular element has a two-sided inverse."""
    A = b.algebra
    if not isinstance(A.carrier, TableCarrier):
        raise ValueError("needs a finite carrier")
    r = _finite_multiplier(b, "right")
    l = _finite_multiplier(b, "left")
    return r is not None and l is not None and r.z == l.z


def regular_one_sided_agree(b: AlgebraElement, bound: int = DEFAULT_BOUND) -> bool:
    """Right and left kernels are both trivial or both nontrivial."""
    rep = is_regular(b, bound)
    if rep.status is not Regularity.ZERO_DIVISOR:
        return True
    return bool(rep.right_kernel_dim) == bool(rep.left_kernel_dim)

