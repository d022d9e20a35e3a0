"""Involutive divisions on finite monomial sets.

A division assigns every monomial u of a finite set U a partition of the
variables into multiplicative and nonmultiplicative ones; u then involutively
divides v when u divides v and the quotient v/u uses only variables
multiplicative for u.  Two families are provided:

* divisions generated pairwise by a total monomial ordering (Janet is the
  lex-generated instance; an "alex"-generated variant differs from Janet
  exactly because its generator is not admissible), and
* the Thomas division, which compares exponents coordinate by coordinate.

The module also has two monomial-completion routines and a checker for the
three defining axioms of an involutive division.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import (
    GREATER,
    LESS,
    Monomial,
    Ordering,
    UsageError,
    VarSet,
    alex,
    lex,
    mono_div,
    mono_mul,
    mono_var,
)

JANET = "janet"
THOMAS = "thomas"
ALEX_DIVISION = "alex"

DIVISION_NAMES = (JANET, THOMAS, ALEX_DIVISION)


@dataclass(frozen=True)
class Division:
    """An involutive division, either Thomas or generated by an ordering."""

    kind: str
    vars: VarSet
    base: Ordering | None = None

    def __post_init__(self):
        if self.kind == THOMAS:
            if self.base is not None:
                raise UsageError("the Thomas division takes no base ordering")
        elif self.kind == "order":
            if self.base is None:
                raise UsageError("order-generated division requires a base ordering")
            if self.base.vars != self.vars:
                raise UsageError("base ordering is over a different variable set")
        else:
            raise UsageError("unknown division kind %r" % (self.kind,))

    @property
    def name(self) -> str:
        if self.kind == THOMAS:
            return THOMAS
        assert self.base is not None
        return JANET if self.base.kind == "lex" else self.base.kind

    def nm_pair(self, u: Monomial, v: Monomial) -> frozenset[int]:
        """Nonmultiplicative variable indices of u induced by the pair {u, v}."""
        if u == v:
            return frozenset()
        if self.kind == THOMAS:
            return frozenset(
                i for i, (a, b) in enumerate(zip(u.exps, v.exps)) if a < b
            )
        c = self.base.cmp(u, v)
        if c == GREATER:
            return frozenset()
        if c == LESS and v.divides(u):
            return frozenset()
        # Scan positions in priority order; the first strict exponent deficit
        # of u against v yields the single nonmultiplicative variable.
        for i in self.vars.priority:
            if u.exps[i] < v.exps[i]:
                return frozenset((i,))
        raise AssertionError("unreachable: u < v with no exponent deficit")

    def nm_set(self, u: Monomial, U) -> frozenset[int]:
        """Nonmultiplicative variables of u relative to the whole set U."""
        out: set[int] = set()
        for v in U:
            if v != u:
                out |= self.nm_pair(u, v)
        return frozenset(out)

    def partition(self, U) -> Partition:
        return Partition(self, tuple(U))


def janet(vars: VarSet) -> Division:
    return Division("order", vars, lex(vars))


def alex_division(vars: VarSet) -> Division:
    return Division("order", vars, alex(vars))


def thomas_division(vars: VarSet) -> Division:
    return Division(THOMAS, vars)


def division_by_name(name: str, vars: VarSet) -> Division:
    if name == JANET:
        return janet(vars)
    if name == THOMAS:
        return thomas_division(vars)
    if name == ALEX_DIVISION:
        return alex_division(vars)
    raise UsageError("unknown division %r (expected one of %s)" % (name, ", ".join(DIVISION_NAMES)))


class Partition:
    """Cached multiplicative/nonmultiplicative split for one fixed set U."""

    __slots__ = ("division", "monomials", "_nm")

    def __init__(self, division: Division, monomials: tuple[Monomial, ...]):
        self.division = division
        self.monomials = monomials
        self._nm = {u: division.nm_set(u, monomials) for u in set(monomials)}

    def nonmult(self, u: Monomial) -> frozenset[int]:
        try:
            return self._nm[u]
        except KeyError:
            raise UsageError("monomial %r is not in the partitioned set" % (u,)) from None

    def mult(self, u: Monomial) -> frozenset[int]:
        nm = self.nonmult(u)
        return frozenset(i for i in range(self.division.vars.n) if i not in nm)

    def allows(self, u: Monomial, quotient: Monomial) -> bool:
        """Whether u involutively divides u*quotient, i.e. the quotient is
        built from multiplicative variables of u only."""
        nm = self.nonmult(u)
        return all(quotient.exps[i] == 0 for i in nm)

    def inv_divides(self, u: Monomial, m: Monomial) -> bool:
        q = mono_div(m, u)
        return q is not None and self.allows(u, q)


def inv_divisor(
    partition: Partition, m: Monomial, order: Ordering | None = None
) -> Monomial | None:
    """An involutive divisor of m within the partitioned set, or None.

    When several elements qualify, the smallest under `order` wins; with no
    order (or on ties) the earliest listed one does.
    """
    best = None
    best_key = None
    for u in partition.monomials:
        if not partition.inv_divides(u, m):
            continue
        if order is None:
            return u if best is None else best
        k = order.key(u)
        if best is None or k < best_key:
            best, best_key = u, k
    return best


def thomas_completion(U) -> frozenset[Monomial]:
    """All monomials of the monoid ideal of U inside the box bounded by the
    coordinatewise maxima of U.  This is the (finite) Thomas completion."""
    U = tuple(U)
    if not U:
        raise UsageError("cannot complete an empty monomial set")
    n = len(U[0].exps)
    bounds = tuple(max(u.exps[i] for u in U) for i in range(n))
    out = set()
    for exps in itertools.product(*(range(b + 1) for b in bounds)):
        m = Monomial(exps)
        if any(u.divides(m) for u in U):
            out.add(m)
    return frozenset(out)


def minimal_completion(
    division: Division, U, order: Ordering, max_steps: int = 100000
) -> frozenset[Monomial]:
    """Complete U to an involutively autocomplete set by repeatedly adjoining
    the smallest nonmultiplicative prolongation that lacks an involutive
    divisor.  Smallest-first insertion keeps the result minimal for
    divisions that admit completion at all."""
    if not order.admissible:
        raise UsageError("monomial completion needs an admissible ordering")
    current = set(U)
    if not current:
        raise UsageError("cannot complete an empty monomial set")
    for _ in range(max_steps):
        part = division.partition(sorted(current, key=order.key))
        candidate = None
        candidate_key = None
        for u in current:
            for i in part.nonmult(u):
                m = mono_mul(u, mono_var(i, division.vars.n))
                if inv_divisor(part, m) is not None:
                    continue
                k = order.key(m)
                if candidate is None or k < candidate_key:
                    candidate, candidate_key = m, k
        if candidate is None:
            return frozenset(current)
        current.add(candidate)
    raise UsageError("monomial completion did not terminate within %d steps" % max_steps)


@dataclass(frozen=True)
class AxiomsReport:
    """Outcome of checking the involutive-division axioms on one set."""

    ok: bool
    condition: int | None = None
    witness: tuple | None = None
    message: str = ""


def axioms_check(
    division: Division,
    U,
    nm_fn=None,
    rng: random.Random | None = None,
    subset_samples: int = 0,
) -> AxiomsReport:
    """Check the three axioms of an involutive division on the finite set U.

    1. Distinct cones never overlap unless one element involutively divides
       the other (checked on a bounded monomial universe).
    2. If v lies in the cone of u then every variable multiplicative for v
       is multiplicative for u.
    3. Shrinking the set never shrinks a surviving element's multiplicative
       variables (checked on all single-removal subsets, plus optional
       random subsets when `subset_samples` > 0).

    `nm_fn(u, V) -> set of nonmultiplicative indices` overrides the
    division's own partition; the checker then validates that assignment
    instead, which is how deliberately corrupted partitions are exercised.
    """
    U = tuple(dict.fromkeys(U))
    if not U:
        raise UsageError("cannot check axioms of an empty monomial set")
    n = division.vars.n
    if nm_fn is None:
        nm_fn = division.nm_set

    nm = {u: frozenset(nm_fn(u, U)) for u in U}

    def inv_div(u: Monomial, m: Monomial, nm_u: frozenset[int]) -> bool:
        q = mono_div(m, u)
        return q is not None and all(q.exps[i] == 0 for i in nm_u)

    # Universe for condition 1: the box out to the coordinatewise maxima,
    # padded by one so cone escapes along every axis are visible.
    bounds = tuple(max(u.exps[i] for u in U) + 1 for i in range(n))
    for m_exps in itertools.product(*(range(b + 1) for b in bounds)):
        m = Monomial(m_exps)
        holders = [u for u in U if inv_div(u, m, nm[u])]
        for a, b in itertools.combinations(holders, 2):
            if not (inv_div(a, b, nm[a]) or inv_div(b, a, nm[b])):
                return AxiomsReport(
                    False,
                    1,
                    (a, b, m),
                    "cones of %r and %r overlap at %r but neither involutively divides the other"
                    % (a.exps, b.exps, m.exps),
                )

    for u in U:
        for v in U:
            if v == u or not inv_div(u, v, nm[u]):
                continue
            if not nm[u] <= nm[v]:
                bad = sorted(nm[u] - nm[v])
                return AxiomsReport(
                    False,
                    2,
                    (u, v, tuple(bad)),
                    "%r lies in the cone of %r yet is multiplicative in variables %r "
                    "where the cone owner is not" % (v.exps, u.exps, bad),
                )

    subsets: list[tuple[Monomial, ...]] = []
    if len(U) > 1:
        for drop in range(len(U)):
            subsets.append(tuple(u for i, u in enumerate(U) if i != drop))
    if rng is not None and subset_samples > 0 and len(U) > 2:
        for _ in range(subset_samples):
            size = rng.randrange(1, len(U))
            subsets.append(tuple(sorted(rng.sample(U, size), key=lambda x: x.exps)))
    for sub in subsets:
        sub_nm = {u: frozenset(nm_fn(u, sub)) for u in sub}
        for u in sub:
            if not sub_nm[u] <= nm[u]:
                bad = sorted(sub_nm[u] - nm[u])
                return AxiomsReport(
                    False,
                    3,
                    (u, sub, tuple(bad)),
                    "restricting the set made variables %r nonmultiplicative for %r"
                    % (bad, u.exps),
                )

    return AxiomsReport(True)
