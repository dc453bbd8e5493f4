"""Finitely presented algebras, their tensor products, and ideal transport.

An algebra is a polynomial ring modulo a relations ideal; every ideal of
the algebra is stored as its full preimage (lift) in the ambient ring, so
the whole ideal calculus happens at the polynomial level with the
relations absorbed.  The tensor product of two presentations is the
presentation on the disjoint union of the variables with both relation
sets; clashing right-factor names are suffixed with a fresh index and the
renaming is kept for reports.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import AmbientMismatchError, ImproperIdealError, KernelError, ZeroRingError
from .groebner import IdealPresentation, eliminate, normal_form
from .polyring import GREVLEX, MonomialOrder, Polynomial, PolyRing, map_variables, restrict_variables


@dataclass(eq=False)
class AlgebraPresentation:
    """A nonzero algebra F_p[vars]/J; build through :func:`make_algebra`."""

    ring: PolyRing
    relations: IdealPresentation
    homogeneous: bool

    def describe(self) -> str:
        base = self.ring.describe()
        if self.relations.generators:
            return f"{base}/{self.relations.describe()}"
        return base

    def __repr__(self):
        return f"<algebra {self.describe()}>"


def make_algebra(
    ring: PolyRing,
    relations: Iterable[Polynomial] = (),
    order: MonomialOrder = GREVLEX,
    step_budget: int | None = None,
) -> AlgebraPresentation:
    """Validated presentation: rejects the zero ring, flags homogeneity."""
    rels = IdealPresentation(ring, relations, order)
    if rels.contains_one(step_budget):
        raise ZeroRingError(f"relations {rels.describe()} present the zero ring")
    homogeneous = all(g.is_homogeneous() for g in rels.generators)
    return AlgebraPresentation(ring, rels, homogeneous)


@dataclass(eq=False)
class TensorAlgebra(AlgebraPresentation):
    """A tensor presentation; remembers its factors and the renaming table."""

    left: AlgebraPresentation = None
    right: AlgebraPresentation = None
    renaming: dict = field(default_factory=dict)

    @property
    def left_positions(self) -> range:
        return range(self.left.ring.nvars)

    @property
    def right_positions(self) -> range:
        n = self.left.ring.nvars
        return range(n, n + self.right.ring.nvars)

    def describe(self) -> str:
        base = super().describe()
        if self.renaming:
            table = ", ".join(f"{old}->{new}" for old, new in self.renaming.items())
            return f"{base} [tensor; renamed: {table}]"
        return f"{base} [tensor]"


def tensor(A: AlgebraPresentation, B: AlgebraPresentation) -> TensorAlgebra:
    """A ⊗ B on the disjoint union of the variables with both relation sets."""
    if A.ring.field != B.ring.field:
        raise AmbientMismatchError("tensor factors over different prime fields")
    taken = set(A.ring.names)
    pool = taken | set(B.ring.names)
    renaming = {}
    right_names = []
    for nm in B.ring.names:
        new = nm
        if new in taken:
            k = 1
            while f"{nm}_{k}" in pool:
                k += 1
            new = f"{nm}_{k}"
            renaming[nm] = new
            pool.add(new)
        taken.add(new)
        right_names.append(new)
    ring = PolyRing(A.ring.names + tuple(right_names), A.ring.field)
    nA = A.ring.nvars
    rels = [map_variables(g, ring, range(nA)) for g in A.relations.generators]
    rels += [
        map_variables(g, ring, range(nA, nA + B.ring.nvars))
        for g in B.relations.generators
    ]
    # A ⊗ B is nonzero whenever A and B are, so no zero-ring check is needed.
    return TensorAlgebra(
        ring=ring,
        relations=IdealPresentation(ring, rels, A.relations.order),
        homogeneous=A.homogeneous and B.homogeneous,
        left=A,
        right=B,
        renaming=renaming,
    )


class AlgebraIdeal:
    """An ideal of a presented algebra, stored with its ambient lift.

    `gens` are the distinguished generators as given; `lift` is the ideal
    they generate together with the owner's relations.
    """

    __slots__ = ("owner", "gens", "lift")

    def __init__(self, owner: AlgebraPresentation, gens: Iterable[Polynomial] = ()):
        gens = tuple(g for g in gens if g.terms)
        for g in gens:
            if g.ring != owner.ring:
                raise AmbientMismatchError(
                    f"generator over {g.ring.names} for an ideal of {owner.ring.names}"
                )
        self.owner = owner
        self.gens = gens
        self.lift = IdealPresentation(
            owner.ring, gens + owner.relations.generators, owner.relations.order
        )

    def is_proper(self, step_budget: int | None = None) -> bool:
        return not self.lift.contains_one(step_budget)

    def is_zero(self, step_budget: int | None = None) -> bool:
        basis = self.owner.relations.reduced_basis(step_budget)
        order = self.owner.relations.order
        return all(
            not normal_form(g, basis, order, step_budget).terms for g in self.gens
        )

    def contains(self, f: Polynomial, step_budget: int | None = None) -> bool:
        return self.lift.contains(f, step_budget)

    def describe(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(g.render() for g in self.gens) + ")"

    def __repr__(self):
        return f"<ideal {self.describe()} of {self.owner.describe()}>"


def require_proper(I: AlgebraIdeal, what: str = "ideal", step_budget: int | None = None):
    if not I.is_proper(step_budget):
        raise ImproperIdealError(f"{what} {I.describe()} is not proper")


def quotient_algebra(
    A: AlgebraPresentation, I: AlgebraIdeal, step_budget: int | None = None
) -> AlgebraPresentation:
    """The presentation of A/I on the same ambient ring."""
    if I.owner is not A:
        raise KernelError("quotient by an ideal of a different algebra")
    if not I.is_proper(step_budget):
        raise ZeroRingError(f"quotient by the improper ideal {I.describe()}")
    rels = IdealPresentation(A.ring, I.lift.generators, A.relations.order)
    homogeneous = all(g.is_homogeneous() for g in rels.generators)
    return AlgebraPresentation(A.ring, rels, homogeneous)


def _side_positions(T: TensorAlgebra, side: str) -> range:
    if side == "left":
        return T.left_positions
    if side == "right":
        return T.right_positions
    raise KernelError(f"side must be 'left' or 'right', not {side!r}")


def embed_ideal(I: AlgebraIdeal, T: TensorAlgebra, side: str) -> AlgebraIdeal:
    """The extension of I along the factor inclusion into the tensor."""
    if not isinstance(T, TensorAlgebra):
        raise KernelError("embedding target is not a tensor presentation")
    factor = T.left if side == "left" else T.right if side == "right" else None
    if factor is None:
        raise KernelError(f"side must be 'left' or 'right', not {side!r}")
    if I.owner is not factor:
        raise KernelError(f"ideal of {I.owner.describe()} is not a {side} ideal of this tensor")
    pos = _side_positions(T, side)
    gens = [map_variables(g, T.ring, pos) for g in I.gens]
    return AlgebraIdeal(T, gens)


def joined_ideal(I: AlgebraIdeal, J: AlgebraIdeal, T: TensorAlgebra) -> AlgebraIdeal:
    """The ideal extending I from the left and J from the right, summed.

    The quotient of the tensor by this ideal presents (A/I) ⊗ (B/J).
    """
    require_proper(I, "left ideal")
    require_proper(J, "right ideal")
    ei = embed_ideal(I, T, "left")
    ej = embed_ideal(J, T, "right")
    return AlgebraIdeal(T, ei.gens + ej.gens)


def product_ideal(I: AlgebraIdeal, J: AlgebraIdeal, T: TensorAlgebra) -> AlgebraIdeal:
    """The ideal generated by all products of I's and J's generator images."""
    require_proper(I, "left ideal")
    require_proper(J, "right ideal")
    ei = embed_ideal(I, T, "left")
    ej = embed_ideal(J, T, "right")
    gens = [f * g for f in ei.gens for g in ej.gens]
    return AlgebraIdeal(T, gens)


def contract(P: AlgebraIdeal, side: str, step_budget: int | None = None) -> AlgebraIdeal:
    """P ∩ A (resp. P ∩ B): eliminate the other factor's variables from the lift."""
    T = P.owner
    if not isinstance(T, TensorAlgebra):
        raise KernelError("contraction needs an ideal of a tensor presentation")
    factor = T.left if side == "left" else T.right if side == "right" else None
    if factor is None:
        raise KernelError(f"side must be 'left' or 'right', not {side!r}")
    other = _side_positions(T, "right" if side == "left" else "left")
    front = [T.ring.names[i] for i in other]
    elim = eliminate(P.lift, front, step_budget)
    pos = list(_side_positions(T, side))
    restricted = [restrict_variables(g, factor.ring, pos) for g in elim.generators]
    rel_basis = factor.relations.reduced_basis(step_budget)
    order = factor.relations.order
    gens = [
        g
        for g in restricted
        if normal_form(g, rel_basis, order, step_budget).terms
    ]
    return AlgebraIdeal(factor, gens)
