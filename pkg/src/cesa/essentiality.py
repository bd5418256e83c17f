"""Deciding and witnessing the centrally essential property.

A ring is centrally essential when it is commutative or every non-central
``a`` admits nonzero central ``c`` and ``d`` with ``a c = d``.  A triple
``(a, c, d)`` of that kind is a :class:`Witness`; every witness produced here
is re-verified before it is returned.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import nilpotent as nil
from .algebra import (AlgebraElement, FamilyCarrier, SemigroupAlgebra, centrality_matrix,
                      center_basis, center_by_solve, combine, is_central, to_group_algebra,
                      to_semigroup_algebra)
from .scalars import enumerate_vectors, nullspace

DEFAULT_CAP = 2 ** 24


class Status(str, enum.Enum):
    COMMUTATIVE = "commutative"
    CENTRALLY_ESSENTIAL = "centrally-essential"
    NOT_CENTRALLY_ESSENTIAL = "not-centrally-essential"
    INCONCLUSIVE = "inconclusive-at-bound"


class CapExceeded(RuntimeError):
    pass


class InvalidWitness(AssertionError):
    pass


@dataclass(frozen=True)
class Witness:
    a: AlgebraElement
    c: AlgebraElement
    d: AlgebraElement

    def problems(self) -> list[str]:
        out = []
        if not self.c:
            out.append("c = 0")
        if not self.d:
            out.append("d = 0")
        if not is_central(self.c):
            out.append("c not central")
        if not is_central(self.d):
            out.append("d not central")
        if self.a * self.c != self.d:
            out.append("a*c != d")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def checked(self) -> "Witness":
        bad = self.problems()
        if bad:
            raise InvalidWitness(f"witness for {self.a} fails: {', '.join(bad)}")
        return self

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "c": self.c.to_json(), "d": self.d.to_json()}

    def render(self) -> str:
        return f"a = {self.a}, c = {self.c}, d = a*c = {self.d} is central and nonzero"


@dataclass
class EssentialityVerdict:
    status: Status
    witnesses: list[Witness] = field(default_factory=list)
    counterexample: AlgebraElement | None = None
    certificate: dict = field(default_factory=dict)
    exact: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json(self, max_witnesses: int = 5) -> dict:
        return {
            "status": self.status.value,
            "exact": self.exact,
            "witness_count": len(self.witnesses),
            "witnesses": [w.to_json() for w in self.witnesses[:max_witnesses]],
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "certificate": self.certificate,
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# one element against a span of central elements


@dataclass(frozen=True)
class NoWitness:
    """Every central combination ``c`` of the searched span has ``a c`` non-central or 0."""

    columns: int
    kernel_dim: int
    image_rank: int

    def to_json(self) -> dict:
        return {"span_dim": self.columns, "centrality_kernel_dim": self.kernel_dim,
                "rank_of_a_times_kernel": self.image_rank}


def element_witness(a: AlgebraElement, central: Sequence[AlgebraElement]) -> Witness | NoWitness:
    """Find ``c`` in span(central) with ``a c`` central and nonzero.

    Solves the linear condition ``[g, a c] = 0`` for the coefficients of c,
    then looks for a kernel vector on which ``a c`` does not vanish.
    """
    if not central:
        return NoWitness(0, 0, 0)
    products = [a * c for c in central]
    M = centrality_matrix(products)
    kernel = nullspace(M, a.field, len(central)) if M else nullspace([], a.field, len(central))
    key = a.carrier.key
    found = []
    for v in kernel:
        d = combine(products, v)
        if d:
            c = combine(central, v)
            found.append((max(key(w) for w in c.coeffs), len(c.coeffs), len(found), c, d))
    if not found:
        return NoWitness(len(central), len(kernel), 0)
    # deterministic preference for witnesses on the shortest words
    _, _, _, c, d = min(found, key=lambda t: t[:3])
    return Witness(a, c, d).checked()


def is_commutative(A: SemigroupAlgebra) -> bool:
    if A.carrier.is_finite:
        return all(is_central(A.word(w)) for w in A.carrier.basis)
    return False


# ---------------------------------------------------------------------------
# finite carriers


def decide_exhaustive(A: SemigroupAlgebra, cap: int = DEFAULT_CAP) -> EssentialityVerdict:
    """Exact decision over a finite carrier and finite field by full enumeration."""
    if not A.carrier.is_finite:
        raise ValueError("decide_exhaustive needs a finite carrier")
    F = A.field
    if not F.is_finite:
        raise ValueError("decide_exhaustive needs a finite field; use decide_sampled over Q")
    words = A.carrier.basis
    n = len(words)
    if F.p ** n > cap:
        raise CapExceeded(f"|F|^n = {F.p}^{n} exceeds cap {cap}; use decide_witness_search")
    if is_commutative(A):
        return EssentialityVerdict(Status.COMMUTATIVE, certificate={"dimension": n})
    Z = center_by_solve(A)
    witnesses = []
    checked = 0
    for vec in enumerate_vectors(F, n):
        a = A.from_vector(words, vec)
        if not a or is_central(a):
            continue
        checked += 1
        r = element_witness(a, Z)
        if isinstance(r, NoWitness):
            cert = {"dimension": n, "center_dim": len(Z), **r.to_json(),
                    "enumerated": F.p ** n, "non_central_checked": checked}
            return EssentialityVerdict(Status.NOT_CENTRALLY_ESSENTIAL, witnesses, a, cert)
        witnesses.append(r)
    cert = {"dimension": n, "center_dim": len(Z), "enumerated": F.p ** n,
            "non_central_checked": checked}
    return EssentialityVerdict(Status.CENTRALLY_ESSENTIAL, witnesses, None, cert)


def _candidate_elements(A: SemigroupAlgebra, Z: list[AlgebraElement], rng: random.Random,
                        trials: int) -> Iterable[AlgebraElement]:
    """Structured candidates first (word times central combination), then random ones."""
    words = [A.word(w) for w in A.carrier.basis]
    one = A.one() if A.carrier.identity is not None else None
    for g in words:
        for c in Z:
            yield g * c
            if one is not None:
                yield g * (one - c)
    for _ in range(trials):
        yield A.random(rng, max_terms=len(words))


def decide_sampled(A: SemigroupAlgebra, trials: int = 1000,
                   rng: random.Random | None = None) -> EssentialityVerdict:
    """Finite carrier over Q: exact centre, per-element witness solving.

    A failing element gives an exact counterexample; success on every sample
    is reported as non-exact.
    """
    rng = rng or random.Random(0)
    if is_commutative(A):
        return EssentialityVerdict(Status.COMMUTATIVE, certificate={"dimension": len(A.carrier.basis)})
    Z = center_by_solve(A)
    witnesses = []
    for a in _candidate_elements(A, Z, rng, trials):
        if not a or is_central(a):
            continue
        r = element_witness(a, Z)
        if isinstance(r, NoWitness):
            cert = {"dimension": len(A.carrier.basis), "center_dim": len(Z), **r.to_json()}
            return EssentialityVerdict(Status.NOT_CENTRALLY_ESSENTIAL, witnesses, a, cert)
        witnesses.append(r)
    return EssentialityVerdict(
        Status.CENTRALLY_ESSENTIAL, witnesses, None,
        {"dimension": len(A.carrier.basis), "center_dim": len(Z), "samples": len(witnesses)},
        exact=False, notes=[f"witnessed on {len(witnesses)} non-central samples"])


def witness_for_finite(A: SemigroupAlgebra, a: AlgebraElement) -> Witness | NoWitness:
    return element_witness(a, center_by_solve(A))


# ---------------------------------------------------------------------------
# bounded search over class sums


def decide_witness_search(a: AlgebraElement, bound: int = 4) -> Witness | None:
    """Search span(class sums within ``bound``) for a witness; None when none exists there."""
    if not a:
        raise ValueError("a must be nonzero")
    if is_central(a) and a.carrier.identity is not None:
        return Witness(a, a.algebra.one(), a).checked()
    r = element_witness(a, [cs.element for cs in center_basis(a.algebra, bound)])
    return r if isinstance(r, Witness) else None


def search_certificate(a: AlgebraElement, bound: int) -> NoWitness | Witness:
    return element_witness(a, [cs.element for cs in center_basis(a.algebra, bound)])


def ex23_certificate(a: AlgebraElement, bounds: Iterable[int] = range(1, 9)) -> dict:
    """Structural proof that ``a`` has no witness in the ex23 algebras.

    Delta(S) consists of the powers of z, so Z(FS) is spanned by single
    z-powers and central elements are supported on them.  Take the slice of
    ``a`` at a (y, x)-exponent pair other than (0, 0): multiplying by a
    nonzero c in F[z] keeps that slice nonzero (F[z] has no zero divisors),
    so ``a c`` is never central.  The bounded searches are recorded as rank
    certificates alongside.
    """
    carrier = a.carrier
    if not isinstance(carrier, FamilyCarrier) or carrier.family != nil.EX23:
        raise ValueError("structural certificate applies to ex23 only")
    if is_central(a):
        raise ValueError("a is central")
    slices: dict[tuple[int, int], list] = {}
    for w in a.support():
        slices.setdefault((w.b, w.c), []).append(w)
    off = sorted(k for k in slices if k != (0, 0))
    if not off:
        raise InvalidWitness("non-central element supported on z-powers")
    key = off[0]
    for w in slices[key]:
        if nil.delta_membership(w).in_delta:
            raise InvalidWitness(f"{w} unexpectedly in Delta(S)")
    searches = {}
    for b in bounds:
        r = search_certificate(a, b)
        if isinstance(r, Witness):
            raise InvalidWitness(f"bounded search found {r.render()} contradicting the certificate")
        searches[str(b)] = r.to_json()
    return {
        "kind": "structural",
        "center": "span of z^k (Delta(S) = {z^k}, all class sums singletons)",
        "offending_slice": {"y": key[0], "x": key[1],
                            "words": [nil.format_word(w) for w in slices[key]]},
        "argument": "slice of a*c at this (y, x) pair equals slice(a)*c in the domain F[z^(+-1)]; "
                    "nonzero for c != 0, and its words lie outside Delta(S)",
        "bounded_searches": searches,
    }


def decide_family(a: AlgebraElement, bounds: Iterable[int] = range(1, 9)) -> EssentialityVerdict:
    """Per-element verdict over a nilpotent family: witness, certificate, or inconclusive."""
    bounds = list(bounds)
    for b in bounds:
        w = decide_witness_search(a, b)
        if w is not None:
            return EssentialityVerdict(Status.CENTRALLY_ESSENTIAL, [w],
                                       certificate={"bound": b}, exact=False,
                                       notes=["witness for this element only"])
    if a.carrier.family == nil.EX23:
        return EssentialityVerdict(Status.NOT_CENTRALLY_ESSENTIAL, [], a, ex23_certificate(a, bounds))
    return EssentialityVerdict(Status.INCONCLUSIVE, [], a, {"bounds": bounds}, exact=False)


# ---------------------------------------------------------------------------
# ex22 in characteristic 2


def hat(A: SemigroupAlgebra) -> AlgebraElement:
    """e + z, the sum over the commutator subgroup {e, z}."""
    gens = nil.generators(A.carrier.family, A.carrier.variant)
    return A.word(nil.identity(A.carrier.family, A.carrier.variant)) + A.word(gens["z"])


@dataclass(frozen=True)
class HatWitness:
    c: AlgebraElement
    d: AlgebraElement
    # only meaningful when d = 0: then a lies in FG (e + z) and is central
    a_central: bool

    def witness(self, a: AlgebraElement) -> Witness | None:
        return Witness(a, self.c, self.d).checked() if self.d else None


def hat_witness(a: AlgebraElement) -> HatWitness:
    carrier = a.carrier
    if not isinstance(carrier, FamilyCarrier) or carrier.family != nil.EX22:
        raise ValueError("hat_witness needs the ex22 family")
    if a.field.characteristic != 2:
        raise ValueError("hat_witness needs characteristic 2")
    c = hat(a.algebra)
    d = a * c
    if not is_central(d):
        raise InvalidWitness(f"{a}*(e+z) = {d} is not central")
    a_central = is_central(a) if not d else False
    if not d and not a_central:
        raise InvalidWitness(f"{a}*(e+z) = 0 but {a} is not central")
    return HatWitness(c, d, a_central)


def witness_for(a: AlgebraElement, bound: int = 4) -> Witness | None:
    """Any valid witness for ``a`` (central a uses c = e)."""
    if is_central(a) and a and a.carrier.identity is not None:
        return Witness(a, a.algebra.one(), a).checked()
    carrier = a.carrier
    if (isinstance(carrier, FamilyCarrier) and carrier.family == nil.EX22
            and a.field.characteristic == 2):
        return hat_witness(a).witness(a)
    return decide_witness_search(a, bound)


# ---------------------------------------------------------------------------
# moving witnesses between FS and FG_S


@dataclass(frozen=True)
class Cleared:
    """``a' = a T`` in FS, with each word g_i of a written as s_i t_i^-1."""

    a: AlgebraElement
    a_prime: AlgebraElement
    multiplier: nil.NilWord
    decomposition: tuple[tuple[nil.NilWord, nil.NilWord, nil.NilWord], ...]


def _product(words: Iterable[nil.NilWord], family: str, variant: str) -> nil.NilWord:
    out = nil.identity(family, variant)
    for w in words:
        out = nil.mul(out, w)
    return out


def transfer_fg_to_fs(a: AlgebraElement) -> Cleared:
    """Clear central denominators: a' = sum alpha_i s_i t_1..(t_i omitted)..t_n."""
    carrier = a.carrier
    if not isinstance(carrier, FamilyCarrier):
        raise ValueError("transfer needs a nilpotent family carrier")
    if not a:
        raise ValueError("a must be nonzero")
    fam = carrier.family
    if carrier.variant == nil.SEMIGROUP:
        a = to_group_algebra(a)
    terms = a.terms()
    decomp = tuple((g, *nil.central_decompose(g)) for g, _ in terms)
    ts = [t for _, _, t in decomp]
    out_words = []
    for i, (g, s, t) in enumerate(decomp):
        out_words.append(nil.mul(s, _product(ts[:i] + ts[i + 1:], fam, nil.SEMIGROUP)))
    if len(set(out_words)) != len(out_words):
        raise nil.DecompositionError("cleared words collide")
    FS = SemigroupAlgebra(FamilyCarrier(fam, nil.SEMIGROUP), a.field)
    a_prime = FS.element([(w, c) for w, (_, c) in zip(out_words, terms)])
    T = _product(ts, fam, nil.SEMIGROUP)
    if to_group_algebra(a_prime) != a * to_group_algebra(FS.word(T)):
        raise nil.DecompositionError("a' != a T")
    return Cleared(a, a_prime, T, decomp)


def transfer_fs_to_fg(cleared: Cleared, w: Witness) -> Witness:
    """A witness (c', d') for a' in FS gives (T c', d') for a in FG_S."""
    if w.a != cleared.a_prime:
        raise ValueError("witness is not for the cleared element")
    FG = cleared.a.algebra
    c2 = FG.word(nil.group_of_fractions_embed(cleared.multiplier)) * to_group_algebra(w.c)
    return Witness(cleared.a, c2, to_group_algebra(w.d)).checked()


def transfer_fg_witness_to_fs(a: AlgebraElement, w: Witness) -> Witness:
    """A witness (c, d) in FG_S for a in FS gives (c y t, d y t) in FS.

    y and t are the products of the central denominators of the words of c
    and of d respectively.
    """
    fam = a.carrier.family
    ys = [nil.central_decompose(g)[1] for g in w.c.support()]
    ts = [nil.central_decompose(h)[1] for h in w.d.support()]
    yt = nil.group_of_fractions_embed(_product(ys + ts, fam, nil.SEMIGROUP))
    FG = w.c.algebra
    c2 = to_semigroup_algebra(w.c * FG.word(yt))
    d2 = to_semigroup_algebra(w.d * FG.word(yt))
    return Witness(a, c2, d2).checked()


def group_witness(a: AlgebraElement, bound: int = 4) -> tuple[Cleared, Witness]:
    """FS centrally essential => FG_S: witness for a in FG_S via its cleared a'."""
    cl = transfer_fg_to_fs(a)
    w = witness_for(cl.a_prime, bound)
    if w is None:
        raise InvalidWitness(f"no witness for {cl.a_prime} in FS")
    return cl, transfer_fs_to_fg(cl, w)
