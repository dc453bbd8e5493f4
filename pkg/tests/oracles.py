"""Independent oracles used to cross-check the kernel.

These deliberately avoid the Groebner code paths: membership is decided
by exact linear algebra mod p over an explicit monomial basis, and
dimension by exhaustive enumeration of variable subsets.  Only the raw
term maps of the inputs are read.
"""

from __future__ import annotations

import numpy as np


def monomials_up_to(nvars: int, degree: int) -> list:
    """All exponent tuples with total degree <= degree, in a fixed order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    return out


def solvable_mod_p(A: np.ndarray, b: np.ndarray, p: int) -> bool:
    """Consistency of A x = b over F_p by Gaussian elimination."""
    M = np.concatenate([A, b.reshape(-1, 1)], axis=1).astype(np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols - 1):
        piv = None
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        mask = np.arange(rows) != r
        factors = M[mask, c].copy()
        M[mask] = (M[mask] - np.outer(factors, M[r])) % p
        r += 1
        if r == rows:
            break
    lead_zero = ~M[:, :-1].any(axis=1)
    return not bool(M[lead_zero, -1].any())


def membership_oracle(f, gens, cap: int) -> bool:
    """Whether f = sum h_i g_i has a solution with deg(h_i g_i) <= cap."""
    ring = f.ring
    p = ring.field.p
    n = ring.nvars
    basis = monomials_up_to(n, cap)
    index = {m: i for i, m in enumerate(basis)}
    cols = []
    for g in gens:
        if not g.terms:
            continue
        gdeg = max(sum(m) for m in g.terms)
        for mult in monomials_up_to(n, cap - gdeg):
            col = np.zeros(len(basis), dtype=np.int64)
            for mono, c in g.terms.items():
                target = tuple(a + b for a, b in zip(mono, mult))
                col[index[target]] = c
            cols.append(col)
    target = np.zeros(len(basis), dtype=np.int64)
    for mono, c in f.terms.items():
        if sum(mono) > cap:
            return False
        target[index[mono]] = c
    if not cols:
        return not target.any()
    return solvable_mod_p(np.stack(cols, axis=1), target, p)


def dim_subset_oracle(nvars: int, lm_supports) -> int:
    """Largest subset S of variables with no leading-monomial support inside S."""
    supports = [frozenset(s) for s in lm_supports]
    best = -1
    for mask in range(1 << nvars):
        S = {i for i in range(nvars) if (mask >> i) & 1}
        if any(supp <= S for supp in supports):
            continue
        if len(S) > best:
            best = len(S)
    return best


def substitute(f, assignments: dict):
    """Evaluate f with some variables replaced by polynomials (term by term)."""
    ring = f.ring
    acc = ring.zero
    for mono, c in f.terms.items():
        piece = ring.const(c)
        for i, e in enumerate(mono):
            if not e:
                continue
            base = assignments.get(i, ring.var(i))
            for _ in range(e):
                piece = piece * base
        acc = acc + piece
    return acc
