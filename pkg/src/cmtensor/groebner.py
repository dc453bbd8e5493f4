"""Reduced Groebner bases and the ideal calculus built on them.

Buchberger's algorithm with the normal selection strategy and both pair
criteria (coprime leading monomials, chain), full multivariate division,
and the derived operations: membership, equality, sum, product,
intersection via a tag variable, quotient, and elimination.

Every operation is pure given its inputs.  An :class:`IdealPresentation`
caches its reduced basis write-once, so concurrent readers of one ideal at
worst duplicate the same computation and publish identical results.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import AmbientMismatchError, StepBudgetExceeded
from .polyring import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolyRing,
    block_order,
    map_variables,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    restrict_variables,
)

DEFAULT_STEP_BUDGET = 1_000_000


class _StepCounter:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise StepBudgetExceeded(
                f"reduction step budget of {self.limit} exhausted"
            )


def _check_ring(ring: PolyRing, polys: Iterable[Polynomial]):
    for g in polys:
        if g.ring != ring:
            raise AmbientMismatchError(
                f"polynomial over {g.ring.names} used in {ring.names}"
            )


def _basis_entry(g: Polynomial, order: MonomialOrder):
    lm, lc = g.leading_term(order)
    return lm, g.ring.field.inv(lc), g.terms


def _reduce_terms(ring, f_terms, basis_data, order, counter):
    """Full division remainder of the term map `f_terms` by `basis_data`.

    Deterministic: the leading reducible term is always cancelled against
    the first basis entry whose leading monomial divides it.
    """
    p = ring.field.p
    key = order.key
    work = dict(f_terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for lm, inv_lc, g_terms in basis_data:
            if mono_divides(lm, m):
                hit = (lm, inv_lc, g_terms)
                break
        if hit is None:
            rem[m] = c
            continue
        counter.spend()
        lm, inv_lc, g_terms = hit
        shift = mono_div(m, lm)
        factor = (c * inv_lc) % p
        for gm, gc in g_terms.items():
            if gm == lm:
                continue
            t = mono_mul(gm, shift)
            v = (work.get(t, 0) - factor * gc) % p
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    return rem


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    step_budget: int | None = None,
) -> Polynomial:
    """Remainder of f under full division by `basis`.

    No term of the result is divisible by a basis leading monomial, and
    f minus the result lies in the ideal the basis generates.
    """
    ring = f.ring
    nz = [g for g in basis if g.terms]
    _check_ring(ring, nz)
    counter = _StepCounter(step_budget or DEFAULT_STEP_BUDGET)
    data = [_basis_entry(g, order) for g in nz]
    return Polynomial(ring, _reduce_terms(ring, f.terms, data, order, counter), _trusted=True)


def _spoly_terms(gi, gj, lmi, lmj, p):
    """S-polynomial term map of two monic polynomials."""
    L = mono_lcm(lmi, lmj)
    si = mono_div(L, lmi)
    sj = mono_div(L, lmj)
    res = {}
    for m, c in gi.terms.items():
        t = mono_mul(m, si)
        res[t] = c
    for m, c in gj.terms.items():
        t = mono_mul(m, sj)
        v = (res.get(t, 0) - c) % p
        if v:
            res[t] = v
        else:
            res.pop(t, None)
    return res


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    step_budget: int | None = None,
) -> list:
    """The unique reduced Groebner basis of the ideal the generators span.

    Zero generators are ignored; the zero ideal yields the empty basis.
    Pairs are selected by minimal lcm degree (normal strategy) and skipped
    via the coprime-leading-monomial and chain criteria.  The returned
    basis is monic, auto-reduced, and sorted ascending by leading monomial.
    """
    nonzero = [g for g in gens if g.terms]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    _check_ring(ring, nonzero)
    p = ring.field.p
    counter = _StepCounter(step_budget or DEFAULT_STEP_BUDGET)

    G = [g.monic(order) for g in nonzero]
    lms = [g.leading_monomial(order) for g in G]
    data = [_basis_entry(g, order) for g in G]

    pending: dict = {}

    def enqueue(i, j):
        L = mono_lcm(lms[i], lms[j])
        pending[(i, j)] = (L, (mono_degree(L), order.key(L), i, j))

    for j in range(len(G)):
        for i in range(j):
            enqueue(i, j)

    while pending:
        (i, j) = min(pending, key=lambda ij: pending[ij][1])
        L, _ = pending.pop((i, j))
        if mono_mul(lms[i], lms[j]) == L:
            continue  # coprime leading monomials: S-poly reduces to zero
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if mono_divides(lms[k], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True  # chain criterion
                    break
        if skip:
            continue
        counter.spend()
        s_terms = _spoly_terms(G[i], G[j], lms[i], lms[j], p)
        rem = _reduce_terms(ring, s_terms, data, order, counter)
        if rem:
            r = Polynomial(ring, rem, _trusted=True).monic(order)
            new = len(G)
            G.append(r)
            lms.append(r.leading_monomial(order))
            data.append(_basis_entry(r, order))
            for t in range(new):
                enqueue(t, new)

    return _reduced_form(G, order, counter)


def _reduced_form(G, order, counter):
    """Minimalize and interreduce a Groebner basis into its reduced form."""
    ring = G[0].ring
    ordered = sorted(G, key=lambda g: order.key(g.leading_monomial(order)))
    kept = []
    kept_lms = []
    for g in ordered:
        lm = g.leading_monomial(order)
        if any(mono_divides(kl, lm) for kl in kept_lms):
            continue
        kept.append(g)
        kept_lms.append(lm)
    out = []
    for idx, g in enumerate(kept):
        others = [_basis_entry(h, order) for t, h in enumerate(kept) if t != idx]
        rem = _reduce_terms(ring, g.terms, others, order, counter)
        out.append(Polynomial(ring, rem, _trusted=True))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


class IdealPresentation:
    """Generators plus a lazily cached reduced Groebner basis.

    Zero generators are dropped at construction, so the zero ideal is the
    presentation with no generators.  The cache is write-once.
    """

    __slots__ = ("ring", "generators", "order", "_basis")

    def __init__(
        self,
        ring: PolyRing,
        generators: Iterable[Polynomial] = (),
        order: MonomialOrder = GREVLEX,
    ):
        gens = tuple(g for g in generators if g.terms)
        _check_ring(ring, gens)
        self.ring = ring
        self.generators = gens
        self.order = order
        self._basis = None

    def reduced_basis(self, step_budget: int | None = None) -> tuple:
        if self._basis is None:
            self._basis = tuple(buchberger(self.generators, self.order, step_budget))
        return self._basis

    def contains(self, f: Polynomial, step_budget: int | None = None) -> bool:
        return not normal_form(
            f, self.reduced_basis(step_budget), self.order, step_budget
        ).terms

    def contains_one(self, step_budget: int | None = None) -> bool:
        basis = self.reduced_basis(step_budget)
        return bool(basis) and basis[0].total_degree() == 0

    def is_zero(self) -> bool:
        return not self.generators

    def describe(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(g.render() for g in self.generators) + ")"

    def __repr__(self):
        return f"<ideal {self.describe()} of {self.ring.describe()}>"


def _common_ring(I1: IdealPresentation, I2: IdealPresentation) -> PolyRing:
    if I1.ring != I2.ring:
        raise AmbientMismatchError(
            f"ideals over {I1.ring.names} and {I2.ring.names}"
        )
    return I1.ring


def ideal_membership(
    f: Polynomial, I: IdealPresentation, step_budget: int | None = None
) -> bool:
    if f.ring != I.ring:
        raise AmbientMismatchError("membership across different ambients")
    return I.contains(f, step_budget)


def ideal_equal(
    I1: IdealPresentation, I2: IdealPresentation, step_budget: int | None = None
) -> bool:
    """Whether both presentations generate the same ideal.

    Compares reduced bases under I1's order (recomputing I2's basis when
    its stored order differs).
    """
    _common_ring(I1, I2)
    b1 = list(I1.reduced_basis(step_budget))
    if I2.order == I1.order:
        b2 = list(I2.reduced_basis(step_budget))
    else:
        b2 = buchberger(I2.generators, I1.order, step_budget)
    return b1 == b2


def ideal_sum(I1: IdealPresentation, I2: IdealPresentation) -> IdealPresentation:
    ring = _common_ring(I1, I2)
    return IdealPresentation(ring, I1.generators + I2.generators, I1.order)


def ideal_product(I1: IdealPresentation, I2: IdealPresentation) -> IdealPresentation:
    ring = _common_ring(I1, I2)
    gens = [f * g for f in I1.generators for g in I2.generators]
    return IdealPresentation(ring, gens, I1.order)


def _pad_into(ext: PolyRing, f: Polynomial) -> Polynomial:
    return map_variables(f, ext, range(f.ring.nvars))


def ideal_intersection(
    I1: IdealPresentation, I2: IdealPresentation, step_budget: int | None = None
) -> IdealPresentation:
    """I1 ∩ I2 via the tag-variable construction t*I1 + (1-t)*I2.

    The tag variable is appended to the ambient, eliminated with a block
    order, and never leaks into the result.
    """
    ring = _common_ring(I1, I2)
    if not I1.generators or not I2.generators:
        return IdealPresentation(ring, (), I1.order)
    ext = ring.extended(ring.fresh_name("_t"))
    ti = ext.nvars - 1
    t = ext.var(ti)
    one_minus_t = ext.one - t
    gens = [t * _pad_into(ext, f) for f in I1.generators]
    gens += [one_minus_t * _pad_into(ext, g) for g in I2.generators]
    basis = buchberger(gens, block_order((ti,)), step_budget)
    back = [
        restrict_variables(g, ring, range(ring.nvars))
        for g in basis
        if ti not in g.support()
    ]
    return IdealPresentation(ring, back, I1.order)


def _exact_quotient(h: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """h / g for h a multiple of g."""
    ring = h.ring
    p = ring.field.p
    lm, lc = g.leading_term(order)
    inv_lc = ring.field.inv(lc)
    work = dict(h.terms)
    quo = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not mono_divides(lm, m):
            raise ArithmeticError("exact division failed; intersection is inconsistent")
        shift = mono_div(m, lm)
        factor = (c * inv_lc) % p
        quo[shift] = factor
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            t = mono_mul(gm, shift)
            v = (work.get(t, 0) - factor * gc) % p
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    return Polynomial(ring, quo, _trusted=True)


def ideal_quotient(
    I: IdealPresentation, J: IdealPresentation, step_budget: int | None = None
) -> IdealPresentation:
    """(I : J) = {f : f*J ⊆ I}.

    Computed generator by generator: (I : g) is (I ∩ (g)) divided by g,
    and (I : J) is the intersection of those over J's generators.  The
    quotient by the zero ideal is the whole ring.
    """
    ring = _common_ring(I, J)
    if not J.generators:
        return IdealPresentation(ring, (ring.one,), I.order)
    parts = []
    for g in J.generators:
        Ig = ideal_intersection(I, IdealPresentation(ring, (g,), I.order), step_budget)
        parts.append(
            IdealPresentation(
                ring,
                tuple(_exact_quotient(h, g, I.order) for h in Ig.generators),
                I.order,
            )
        )
    acc = parts[0]
    for nxt in parts[1:]:
        acc = ideal_intersection(acc, nxt, step_budget)
    return acc


def eliminate(
    I: IdealPresentation,
    front: Iterable[str],
    step_budget: int | None = None,
) -> IdealPresentation:
    """Generators of I ∩ k[remaining variables], presented in the same ambient.

    Recomputes a basis under block(front, grevlex) and keeps the elements
    free of the front variables.
    """
    idxs = sorted({I.ring.index(nm) for nm in front})
    if not idxs:
        return I
    basis = buchberger(I.generators, block_order(idxs), step_budget)
    fs = set(idxs)
    keep = tuple(g for g in basis if not (g.support() & fs))
    return IdealPresentation(I.ring, keep, I.order)
