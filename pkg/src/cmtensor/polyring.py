"""Sparse multivariate polynomial arithmetic over a prime field.

Monomials are exponent tuples indexed by variable position in a
:class:`PolyRing`; a polynomial maps monomials to nonzero coefficients
reduced into ``[0, p)``.  Monomial orders are total, multiplicative, and
have 1 as minimum; the block order puts every monomial containing a front
variable above every monomial without one, which is what elimination
needs.  All values are immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import AmbientMismatchError, ZeroPolynomialError

DEFAULT_PRIME = 32003

Monomial = tuple


def _is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field F_p."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def normalize(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in the prime field")
        return pow(a, self.p - 2, self.p)


# ---------------------------------------------------------------------------
# Monomial helpers (exponent tuples of a fixed shared length)

def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    """Exact quotient m1 / m2; the caller guarantees divisibility."""
    return tuple(a - b for a, b in zip(m1, m2))


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(m1, m2))


def mono_degree(m: Monomial) -> int:
    return sum(m)


@functools.lru_cache(maxsize=None)
def _rest_indices(front: tuple, n: int) -> tuple:
    fs = set(front)
    return tuple(i for i in range(n) if i not in fs)


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order: ``lex``, ``grevlex``, or a block order.

    The block order compares the exponents at the ``front`` positions
    first (by grevlex) and falls back to the remaining positions, so any
    monomial touching a front variable exceeds any monomial that does not.
    """

    kind: str
    front: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == "block" and not self.front:
            raise ValueError("block order needs at least one front position")

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "lex":
            return m
        fm = tuple(m[i] for i in self.front)
        rm = tuple(m[i] for i in _rest_indices(self.front, len(m)))
        return (
            sum(fm),
            tuple(-e for e in reversed(fm)),
            sum(rm),
            tuple(-e for e in reversed(rm)),
        )

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0, or 1 as m1 is below, equal to, or above m2."""
        if len(m1) != len(m2):
            raise AmbientMismatchError(
                f"monomials of length {len(m1)} and {len(m2)} are not comparable"
            )
        if m1 == m2:
            return 0
        return -1 if self.key(m1) < self.key(m2) else 1


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(front: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("block", tuple(sorted(set(front))))


@dataclass(frozen=True)
class PolyRing:
    """An ambient variable set over a prime field.

    Polynomial values never migrate between ambients implicitly; use
    :func:`map_variables` / :func:`restrict_variables` for explicit moves.
    """

    names: tuple
    field: PrimeField = PrimeField()

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not isinstance(nm, str) or not nm:
                raise ValueError(f"bad variable name {nm!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in {self.names}") from None

    def var(self, which) -> "Polynomial":
        i = self.index(which) if isinstance(which, str) else which
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable position {i} out of range")
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: 1}, _trusted=True)

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def const(self, c: int) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return Polynomial(self, {}, _trusted=True)
        return Polynomial(self, {(0,) * self.nvars: c}, _trusted=True)

    @property
    def zero(self) -> "Polynomial":
        return self.const(0)

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def fresh_name(self, base: str) -> str:
        if base not in self.names:
            return base
        k = 1
        while f"{base}{k}" in self.names:
            k += 1
        return f"{base}{k}"

    def extended(self, name: str) -> "PolyRing":
        if name in self.names:
            raise ValueError(f"variable {name!r} already present")
        return PolyRing(self.names + (name,), self.field)

    def describe(self) -> str:
        return f"GF({self.field.p})[{', '.join(self.names)}]"


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict, *, _trusted: bool = False):
        if not _trusted:
            p = ring.field.p
            n = ring.nvars
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 or not isinstance(e, int) for e in m):
                    raise ValueError(f"bad exponent tuple {m} for {ring.names}")
                c %= p
                if c:
                    clean[m] = c
            terms = clean
        self.ring = ring
        self.terms = terms

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise AmbientMismatchError(
                    f"mixed ambients {self.ring.names} and {other.ring.names}"
                )
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.field.p
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = (res.get(m, 0) + c) % p
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(
            self.ring, {m: p - c for m, c in self.terms.items()}, _trusted=True
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.field.p
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = (res.get(m, 0) + c1 * c2) % p
                if v:
                    res[m] = v
                else:
                    res.pop(m, None)
        return Polynomial(self.ring, res, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def support(self) -> frozenset:
        """Positions of the variables that actually occur."""
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return frozenset(used)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> int:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        _, c = self.leading_term(order)
        if c == 1:
            return self
        inv = self.ring.field.inv(c)
        p = self.ring.field.p
        return Polynomial(
            self.ring, {m: (v * inv) % p for m, v in self.terms.items()}, _trusted=True
        )

    # -- rendering ----------------------------------------------------------

    def render(self, order: MonomialOrder = GREVLEX) -> str:
        """Canonical text: terms descending in `order`, balanced coefficients."""
        if not self.terms:
            return "0"
        p = self.ring.field.p
        names = self.ring.names
        chunks = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            if c > p // 2:
                c -= p
            mono = "*".join(
                nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, m) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<{self.render()} in {self.ring.describe()}>"


def map_variables(f: Polynomial, target: PolyRing, positions: Sequence[int]) -> Polynomial:
    """Reinterpret f in `target`, sending variable i to `positions[i]`."""
    if f.ring.field != target.field:
        raise AmbientMismatchError("cannot move a polynomial between different fields")
    n = target.nvars
    pos = tuple(positions)
    if len(pos) != f.ring.nvars or len(set(pos)) != len(pos):
        raise ValueError("positions must be an injection from the source variables")
    if any(not 0 <= i < n for i in pos):
        raise ValueError("position out of range for the target ambient")
    terms = {}
    for m, c in f.terms.items():
        exps = [0] * n
        for i, e in enumerate(m):
            if e:
                exps[pos[i]] = e
        terms[tuple(exps)] = c
    return Polynomial(target, terms, _trusted=True)


def restrict_variables(f: Polynomial, target: PolyRing, positions: Sequence[int]) -> Polynomial:
    """Inverse of :func:`map_variables`: variable `positions[i]` becomes variable i.

    Every exponent outside `positions` must be zero.
    """
    if f.ring.field != target.field:
        raise AmbientMismatchError("cannot move a polynomial between different fields")
    pos = tuple(positions)
    if len(pos) != target.nvars:
        raise ValueError("positions must enumerate the target variables")
    keep = set(pos)
    terms = {}
    for m, c in f.terms.items():
        for i, e in enumerate(m):
            if e and i not in keep:
                raise ValueError(
                    f"polynomial involves variable {f.ring.names[i]!r} outside the restriction"
                )
        terms[tuple(m[i] for i in pos)] = c
    return Polynomial(target, terms, _trusted=True)
