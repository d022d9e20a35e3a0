"""Exact monomial and polynomial arithmetic over the rationals.

Monomials are exponent tuples over a fixed variable set.  Polynomials keep
their terms sorted in strictly descending monomial order, with coefficients
stored as `fractions.Fraction`, so every value has one canonical form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

LESS, EQUAL, GREATER = -1, 0, 1

LEX = "lex"
DEGREVLEX = "degrevlex"
ALEX = "alex"

ORDER_KINDS = (LEX, DEGREVLEX, ALEX)


class UsageError(ValueError):
    """A caller broke an operation contract (bad dimension, empty input, ...)."""


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names plus a comparison priority.

    `priority` lists variable indices from most significant to least
    significant.  The default is declaration order, so the first declared
    variable is the greatest one under every ordering built on this set.
    """

    names: tuple[str, ...]
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise UsageError("variable set must not be empty")
        if len(set(names)) != len(names):
            raise UsageError("duplicate variable names: %r" % (names,))
        pr = tuple(self.priority) if self.priority is not None else tuple(range(len(names)))
        if sorted(pr) != list(range(len(names))):
            raise UsageError("priority must be a permutation of variable indices")
        object.__setattr__(self, "priority", pr)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError("unknown variable %r" % name) from None


class Monomial:
    """Immutable power product, stored as an exponent tuple."""

    __slots__ = ("exps", "deg")

    def __init__(self, exps: Iterable[int]):
        e = tuple(exps)
        for v in e:
            if not isinstance(v, int) or v < 0:
                raise UsageError("exponents must be non-negative integers: %r" % (e,))
        self.exps = e
        self.deg = sum(e)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return "Monomial(%r)" % (self.exps,)

    @property
    def is_one(self) -> bool:
        return self.deg == 0

    @property
    def variables(self) -> tuple[int, ...]:
        """Indices of variables that occur with positive exponent."""
        return tuple(i for i, e in enumerate(self.exps) if e > 0)

    def divides(self, other: Monomial) -> bool:
        _check_dim(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))


def mono_one(n: int) -> Monomial:
    return Monomial((0,) * n)


def mono_var(i: int, n: int) -> Monomial:
    """The monomial consisting of the single variable with index `i`."""
    if not 0 <= i < n:
        raise UsageError("variable index %d out of range for %d variables" % (i, n))
    return Monomial(tuple(1 if j == i else 0 for j in range(n)))


def _check_dim(a: Monomial, b: Monomial) -> None:
    if len(a.exps) != len(b.exps):
        raise UsageError("monomial dimension mismatch: %d vs %d" % (len(a.exps), len(b.exps)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_dim(a, b)
    return Monomial(tuple(x + y for x, y in zip(a.exps, b.exps)))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """Exact quotient a/b, or None when b does not divide a."""
    _check_dim(a, b)
    out = []
    for x, y in zip(a.exps, b.exps):
        if x < y:
            return None
        out.append(x - y)
    return Monomial(tuple(out))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dim(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


@dataclass(frozen=True)
class Ordering:
    """A total monomial ordering of one of the supported kinds.

    `lex` and `degrevlex` are admissible (1 is minimal and the ordering is
    compatible with multiplication).  `alex` compares by total degree
    ascending and breaks ties lexicographically descending; it is not
    admissible (1 is the unique greatest monomial) and is only meant to
    generate an involutive division, never to order a polynomial.
    """

    kind: str
    vars: VarSet

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise UsageError("unknown ordering kind %r" % (self.kind,))

    @property
    def admissible(self) -> bool:
        return self.kind in (LEX, DEGREVLEX)

    def key(self, m: Monomial):
        """Sort key; bigger key means greater monomial."""
        e = m.exps
        pr = self.vars.priority
        if len(e) != self.vars.n:
            raise UsageError("monomial dimension mismatch: %d vs %d" % (len(e), self.vars.n))
        if self.kind == LEX:
            return tuple(e[i] for i in pr)
        if self.kind == DEGREVLEX:
            return (m.deg, tuple(-e[i] for i in reversed(pr)))
        # alex: smaller total degree wins, then lex
        return (-m.deg, tuple(e[i] for i in pr))

    def cmp(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LESS
        if ka > kb:
            return GREATER
        return EQUAL


def lex(vars: VarSet) -> Ordering:
    return Ordering(LEX, vars)


def degrevlex(vars: VarSet) -> Ordering:
    return Ordering(DEGREVLEX, vars)


def alex(vars: VarSet) -> Ordering:
    return Ordering(ALEX, vars)


def ordering_by_name(kind: str, vars: VarSet) -> Ordering:
    return Ordering(kind, vars)


def mono_cmp(order: Ordering, a: Monomial, b: Monomial) -> int:
    """Compare two monomials under `order`; returns LESS, EQUAL or GREATER."""
    _check_dim(a, b)
    return order.cmp(a, b)


class Polynomial:
    """Sparse polynomial with Fraction coefficients and canonical term order.

    `terms` is a tuple of (coefficient, monomial) pairs sorted strictly
    descending under `order`; no zero coefficients, no repeated monomials.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: Ordering, terms: Iterable[tuple[Fraction, Monomial]] = ()):
        self.order = order
        self.terms = _canonical_terms(order, terms)

    @classmethod
    def _raw(cls, order: Ordering, terms: tuple) -> Polynomial:
        """Internal constructor for terms already in canonical form."""
        p = object.__new__(cls)
        p.order = order
        p.terms = terms
        if __debug__:
            p._assert_canonical()
        return p

    @classmethod
    def zero(cls, order: Ordering) -> Polynomial:
        return cls._raw(order, ())

    @classmethod
    def one(cls, order: Ordering) -> Polynomial:
        return cls._raw(order, ((Fraction(1), mono_one(order.vars.n)),))

    def _assert_canonical(self) -> None:
        prev = None
        for c, m in self.terms:
            assert isinstance(c, Fraction) and c != 0, "non-canonical coefficient"
            assert len(m.exps) == self.order.vars.n, "monomial dimension mismatch"
            k = self.order.key(m)
            assert prev is None or k < prev, "terms out of order"
            prev = k

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return self.terms[0][1]

    @property
    def lc(self) -> Fraction:
        if not self.terms:
            raise UsageError("zero polynomial has no leading coefficient")
        return self.terms[0][0]

    @property
    def lt(self) -> tuple[Fraction, Monomial]:
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms[0]

    @property
    def degree(self) -> int:
        """Largest total degree of any term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.deg for _, m in self.terms)

    def __iter__(self) -> Iterator[tuple[Fraction, Monomial]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.order, tuple((-c, m) for c, m in self.terms))

    def __add__(self, other: Polynomial) -> Polynomial:
        if self.order != other.order:
            raise UsageError("cannot combine polynomials under different orderings")
        return Polynomial._raw(self.order, _merge(self.order, self.terms, other.terms))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.order != other.order:
            raise UsageError("cannot combine polynomials under different orderings")
        acc: dict[Monomial, Fraction] = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.order, ((c, m) for m, c in acc.items()))

    def mul_term(self, coeff, mono: Monomial) -> Polynomial:
        """Multiply by a single term coeff*mono."""
        c = Fraction(coeff)
        if c == 0:
            return Polynomial.zero(self.order)
        return Polynomial._raw(
            self.order, tuple((tc * c, mono_mul(tm, mono)) for tc, tm in self.terms)
        )

    def scale(self, coeff) -> Polynomial:
        c = Fraction(coeff)
        if c == 0:
            return Polynomial.zero(self.order)
        return Polynomial._raw(self.order, tuple((tc * c, tm) for tc, tm in self.terms))

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def drop_lt(self) -> Polynomial:
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return Polynomial._raw(self.order, self.terms[1:])

    def coefficient(self, mono: Monomial) -> Fraction:
        for c, m in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return "<Polynomial %s>" % (render_polynomial(self),)


def _canonical_terms(order: Ordering, terms) -> tuple:
    acc: dict[Monomial, Fraction] = {}
    for c, m in terms:
        c = Fraction(c)
        if c == 0:
            continue
        if len(m.exps) != order.vars.n:
            raise UsageError("monomial dimension mismatch: %d vs %d" % (len(m.exps), order.vars.n))
        acc[m] = acc.get(m, Fraction(0)) + c
    out = [(c, m) for m, c in acc.items() if c != 0]
    out.sort(key=lambda t: order.key(t[1]), reverse=True)
    return tuple(out)


def _merge(order: Ordering, a: tuple, b: tuple) -> tuple:
    """Merge two canonical term tuples, adding coefficients."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    key = order.key
    while i < na and j < nb:
        ca, ma = a[i]
        cb, mb = b[j]
        if ma == mb:
            c = ca + cb
            if c != 0:
                out.append((c, ma))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def render_monomial(m: Monomial, names: tuple[str, ...]) -> str:
    parts = []
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append("%s^%d" % (names[i], e))
    return "*".join(parts)


def render_polynomial(p: Polynomial) -> str:
    """Canonical text form, e.g. ``x^2 - 3/2*y^2``."""
    if p.is_zero:
        return "0"
    names = p.order.vars.names
    pieces = []
    for pos, (c, m) in enumerate(p.terms):
        neg = c < 0
        mag = -c if neg else c
        body = render_monomial(m, names)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = "%s*%s" % (mag, body)
        if pos == 0:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial (lcm/lt(f))*f - (lcm/lt(g))*g of two nonzero polynomials."""
    if f.is_zero or g.is_zero:
        raise UsageError("spoly requires nonzero polynomials")
    if f.order != g.order:
        raise UsageError("cannot combine polynomials under different orderings")
    l = mono_lcm(f.lm, g.lm)
    uf = mono_div(l, f.lm)
    ug = mono_div(l, g.lm)
    return f.mul_term(1 / f.lc, uf) - g.mul_term(1 / g.lc, ug)
