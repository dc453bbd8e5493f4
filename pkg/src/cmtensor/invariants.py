"""Ring-theoretic invariants of presented algebras.

Krull dimension comes from the leading-term ideal: the dimension is the
largest variable subset meeting no basis leading-monomial support, which
equals the variable count minus a minimum hitting set of those supports.
Grade is computed by extending a regular sequence inside the ideal until
the annihilator stop test fires: (stage : I) strictly above stage yields
the witness a with a ∉ stage and I*a ⊆ stage, which certifies maximality.
The stop test is deterministic, so the random choice of nonzerodivisors
can change certificates but never the grade (Las Vegas, not Monte Carlo).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Sequence
from dataclasses import dataclass

from .algebra import AlgebraIdeal, AlgebraPresentation, require_proper
from .errors import (
    CertificateError,
    GradedOnlyError,
    ImproperIdealError,
    NzdSearchExhausted,
    PermutationBoundExceeded,
    ZeroRingError,
)
from .groebner import IdealPresentation, buchberger, ideal_quotient, normal_form
from .polyring import Polynomial

PERMUTATION_BOUND = 5
NZD_RETRY_CAP = 64


# ---------------------------------------------------------------------------
# Dimension

def _min_hitting_set(sets: list) -> int:
    """Minimum number of variables meeting every support set."""
    work = []
    for s in sorted(set(sets), key=len):
        if not any(t <= s for t in work):
            work.append(s)
    best = len({x for s in work for x in s})

    def descend(remaining, chosen):
        nonlocal best
        if chosen >= best:
            return
        if not remaining:
            best = chosen
            return
        branch = min(remaining, key=len)
        for x in sorted(branch):
            descend([t for t in remaining if x not in t], chosen + 1)

    descend(work, 0)
    return best


def _dim_from_basis(nvars: int, basis, order) -> int:
    supports = []
    for g in basis:
        if g.total_degree() == 0:
            raise ZeroRingError("presentation collapsed to the zero ring")
        lm = g.leading_monomial(order)
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    if not supports:
        return nvars
    return nvars - _min_hitting_set(supports)


def krull_dim(A: AlgebraPresentation, step_budget: int | None = None) -> int:
    """Krull dimension, from the leading terms of the reduced relations basis."""
    rels = A.relations
    return _dim_from_basis(A.ring.nvars, rels.reduced_basis(step_budget), rels.order)


def dim_quotient(
    A: AlgebraPresentation, I: AlgebraIdeal, step_budget: int | None = None
) -> int:
    """Dimension of A/I."""
    if not I.is_proper(step_budget):
        raise ImproperIdealError(f"zero quotient: {I.describe()} is improper")
    return _dim_from_basis(A.ring.nvars, I.lift.reduced_basis(step_budget), I.lift.order)


def height(
    A: AlgebraPresentation, P: AlgebraIdeal, step_budget: int | None = None
) -> int:
    """dim A - dim A/P; the caller asserts equidimensionality of A."""
    return krull_dim(A, step_budget) - dim_quotient(A, P, step_budget)


# ---------------------------------------------------------------------------
# Zerodivisors and regular sequences

def _colon(base: IdealPresentation, gens, step_budget):
    other = IdealPresentation(base.ring, gens, base.order)
    return ideal_quotient(base, other, step_budget)


def _extension_witness(base: IdealPresentation, Q: IdealPresentation, step_budget):
    """A reduced generator of Q outside `base`, or None when Q ⊆ base.

    Q always contains `base` here (it is a colon ideal of it), so this
    decides Q = base.
    """
    basis = base.reduced_basis(step_budget)
    for g in Q.generators:
        r = normal_form(g, basis, base.order, step_budget)
        if r.terms:
            return r.monic(base.order)
    return None


def is_zerodivisor(
    A: AlgebraPresentation, f: Polynomial, step_budget: int | None = None
):
    """Whether f is a zerodivisor of A; on True also a witness g with f*g = 0.

    An f lying in the relations (f = 0 in A) is a zerodivisor with witness 1.
    """
    J = A.relations
    Q = _colon(J, (f,), step_budget)
    w = _extension_witness(J, Q, step_budget)
    return (True, w) if w is not None else (False, None)


def ideal_in_zerodivisors(
    A: AlgebraPresentation, I: AlgebraIdeal, step_budget: int | None = None
):
    """Whether every element of I is a zerodivisor, with the annihilator witness.

    True exactly when some a outside the relations satisfies I*a ⊆ relations.
    """
    require_proper(I, "ideal", step_budget)
    J = A.relations
    Q = ideal_quotient(J, I.lift, step_budget)
    w = _extension_witness(J, Q, step_budget)
    return (True, w) if w is not None else (False, None)


def _is_nzd_mod(stage: IdealPresentation, f: Polynomial, step_budget) -> bool:
    r = normal_form(f, stage.reduced_basis(step_budget), stage.order, step_budget)
    if not r.terms:
        # f = 0 modulo stage: a zerodivisor unless the stage ring is zero.
        return stage.contains_one(step_budget)
    Q = _colon(stage, (r,), step_budget)
    return _extension_witness(stage, Q, step_budget) is None


def is_regular_sequence(
    A: AlgebraPresentation, seq: Sequence[Polynomial], step_budget: int | None = None
) -> bool:
    """Each element a nonzerodivisor modulo its predecessors, final quotient nonzero."""
    stage = A.relations
    for f in seq:
        if not _is_nzd_mod(stage, f, step_budget):
            return False
        stage = IdealPresentation(A.ring, stage.generators + (f,), stage.order)
    return not stage.contains_one(step_budget)


def is_permutable_regular_sequence(
    A: AlgebraPresentation,
    seq: Sequence[Polynomial],
    step_budget: int | None = None,
    bound: int = PERMUTATION_BOUND,
) -> bool:
    """Regularity under every permutation; lengths past `bound` are refused."""
    if len(seq) > bound:
        raise PermutationBoundExceeded(
            f"sequence of length {len(seq)} exceeds the permutation bound {bound}"
        )
    return all(
        is_regular_sequence(A, perm, step_budget)
        for perm in itertools.permutations(seq)
    )


# ---------------------------------------------------------------------------
# Grade

@dataclass(frozen=True)
class GradeCertificate:
    """A maximal regular sequence in the ideal plus the annihilator witness.

    `stage_ideals` is the generator chain: relations, then relations plus
    each sequence prefix.  The witness a satisfies a ∉ final stage and
    I*a ⊆ final stage, which proves no further extension exists.
    """

    sequence: tuple
    witness: Polynomial
    stage_ideals: tuple
    grade: int

    def to_dict(self) -> dict:
        return {
            "grade": self.grade,
            "sequence": [f.render() for f in self.sequence],
            "witness": self.witness.render(),
            "stages": [[g.render() for g in stage] for stage in self.stage_ideals],
        }


def _find_nonzerodivisor(stage, candidates, rng, retries, step_budget):
    ring = stage.ring
    p = ring.field.p
    basis = stage.reduced_basis(step_budget)
    reduced = [normal_form(g, basis, stage.order, step_budget) for g in candidates]
    for r in reduced:
        if r.terms and _is_nzd_mod(stage, r, step_budget):
            return r
    pool = [r for r in reduced if r.terms]
    for _ in range(retries):
        f = ring.zero
        for r in pool:
            f = f + rng.randrange(p) * r
        if f.terms and _is_nzd_mod(stage, f, step_budget):
            return f
    raise NzdSearchExhausted(
        f"no nonzerodivisor found in {retries} draws; "
        "raise the retry cap or use a larger prime"
    )


def grade(
    A: AlgebraPresentation,
    I: AlgebraIdeal,
    seed: int = 0,
    *,
    step_budget: int | None = None,
    nzd_retries: int = NZD_RETRY_CAP,
) -> GradeCertificate:
    """Grade of the proper ideal I, with a certificate.

    Extends a regular sequence inside I while the stop test
    (stage : I) = stage holds; when it fails, the witness element proves
    every element of I is a zerodivisor modulo the stage, so the sequence
    is maximal.  The integer is independent of the seed.
    """
    require_proper(I, "ideal", step_budget)
    rng = random.Random(seed)
    stage = A.relations
    stages = [stage.generators]
    sequence = []
    while True:
        Q = ideal_quotient(stage, I.lift, step_budget)
        w = _extension_witness(stage, Q, step_budget)
        if w is not None:
            return GradeCertificate(tuple(sequence), w, tuple(stages), len(sequence))
        f = _find_nonzerodivisor(stage, I.gens, rng, nzd_retries, step_budget)
        sequence.append(f)
        stage = IdealPresentation(A.ring, stage.generators + (f,), stage.order)
        stages.append(stage.generators)


def validate_grade_certificate(
    A: AlgebraPresentation,
    I: AlgebraIdeal,
    cert: GradeCertificate,
    step_budget: int | None = None,
) -> None:
    """Independent revalidation from raw generators; raises CertificateError.

    Uses only normal forms and ideal quotients over freshly built
    presentations, never state left over from the grade run.
    """
    ring = A.ring
    order = A.relations.order
    if cert.grade != len(cert.sequence):
        raise CertificateError("grade differs from the sequence length")
    if len(cert.stage_ideals) != cert.grade + 1:
        raise CertificateError("stage chain length is inconsistent")
    if cert.stage_ideals[0] != A.relations.generators:
        raise CertificateError("stage chain does not start at the relations")
    for i, f in enumerate(cert.sequence):
        if cert.stage_ideals[i + 1] != cert.stage_ideals[i] + (f,):
            raise CertificateError(f"stage {i + 1} is not the previous stage plus f_{i + 1}")

    lift_basis = buchberger(I.lift.generators, order, step_budget)
    for i, f in enumerate(cert.sequence):
        if normal_form(f, lift_basis, order, step_budget).terms:
            raise CertificateError(f"sequence element f_{i + 1} lies outside the ideal")

    for i, f in enumerate(cert.sequence):
        base = IdealPresentation(ring, cert.stage_ideals[i], order)
        Q = ideal_quotient(base, IdealPresentation(ring, (f,), order), step_budget)
        basis = base.reduced_basis(step_budget)
        for g in Q.generators:
            if normal_form(g, basis, order, step_budget).terms:
                raise CertificateError(
                    f"f_{i + 1} is a zerodivisor modulo stage {i}"
                )

    final = IdealPresentation(ring, cert.stage_ideals[-1], order)
    final_basis = final.reduced_basis(step_budget)
    if not normal_form(cert.witness, final_basis, order, step_budget).terms:
        raise CertificateError("witness lies in the final stage")
    for g in I.lift.generators:
        if normal_form(cert.witness * g, final_basis, order, step_budget).terms:
            raise CertificateError("witness does not annihilate the ideal")


# ---------------------------------------------------------------------------
# Cohen-Macaulay

@dataclass(frozen=True)
class CmVerdict:
    """Dimension versus depth at the irrelevant maximal ideal."""

    algebra: AlgebraPresentation
    dim: int
    depth: int
    is_cm: bool
    certificate: GradeCertificate


def is_cohen_macaulay(
    A: AlgebraPresentation,
    seed: int = 0,
    *,
    step_budget: int | None = None,
    nzd_retries: int = NZD_RETRY_CAP,
) -> CmVerdict:
    """CM test for graded connected presentations.

    Depth is the grade of the irrelevant ideal (all variables); for a
    homogeneous presentation the algebra is Cohen-Macaulay exactly when
    that depth equals the Krull dimension.
    """
    if not A.homogeneous:
        raise GradedOnlyError(
            "Cohen-Macaulay check supports homogeneous presentations only"
        )
    irrelevant = AlgebraIdeal(A, A.ring.gens())
    cert = grade(A, irrelevant, seed, step_budget=step_budget, nzd_retries=nzd_retries)
    dim = krull_dim(A, step_budget)
    return CmVerdict(A, dim, cert.grade, dim == cert.grade, cert)
