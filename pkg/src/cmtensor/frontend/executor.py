"""Execution of parsed sessions against the kernel.

Statements run in source order; assert failures mark the report failed
but never abort the run, and kernel errors are captured per statement.
Seeds for the randomized searches are derived as the configured seed plus
the statement index, so a fixed (session, prime, seed) is reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..algebra import AlgebraIdeal, make_algebra, tensor
from ..errors import KernelError, SessionError
from ..invariants import (
    NZD_RETRY_CAP,
    dim_quotient,
    grade,
    height,
    is_cohen_macaulay,
    krull_dim,
)
from ..polyring import DEFAULT_PRIME, PolyRing, PrimeField
from .. import theorems
from .parser import (
    AssertStmt,
    BoolLit,
    CallExpr,
    CheckStmt,
    ComputeStmt,
    IdealDecl,
    IntLit,
    RingDecl,
    Session,
)
from .report import CommandResult, RunReport

_COMPARATORS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}

_CHECKS = {
    "thm_1_1_a": theorems.check_thm_1_1_a,
    "thm_1_1_b": theorems.check_thm_1_1_b,
    "thm_1_1_c": theorems.check_thm_1_1_c,
    "lemma_1_2": theorems.check_lemma_1_2,
    "prop_2_3_a": theorems.check_prop_2_3_a,
    "thm_2_1": theorems.check_thm_2_1,
    "remark_2_5": theorems.check_remark_2_5,
}


@dataclass(frozen=True)
class ExecConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    step_budget: int | None = None
    nzd_retries: int = NZD_RETRY_CAP


class _Runner:
    def __init__(self, config: ExecConfig):
        self.config = config
        self.field = PrimeField(config.prime)
        self.rings = {}
        self.ideals = {}

    # -- resolution -----------------------------------------------------------

    def ring(self, name):
        if name not in self.rings:
            raise SessionError(f"ring {name!r} failed to declare earlier in the run")
        return self.rings[name]

    def ideal(self, name):
        if name not in self.ideals:
            raise SessionError(f"ideal {name!r} failed to declare earlier in the run")
        return self.ideals[name]

    def owned_ideal(self, ring_name, ideal_name):
        alg = self.ring(ring_name)
        ide = self.ideal(ideal_name)
        if ide.owner is not alg:
            raise SessionError(f"{ideal_name!r} is not an ideal of {ring_name!r}")
        return alg, ide

    # -- statement kinds -------------------------------------------------------

    def declare(self, stmt):
        if isinstance(stmt, RingDecl):
            if stmt.kind == "tensor":
                alg = tensor(self.ring(stmt.factors[0]), self.ring(stmt.factors[1]))
            else:
                ring = PolyRing(stmt.vars, self.field)
                rels = [lit.to_polynomial(ring) for lit in stmt.relations]
                alg = make_algebra(ring, rels, step_budget=self.config.step_budget)
            self.rings[stmt.name] = alg
            return CommandResult(command=stmt.render(), status="ok")
        owner = self.ring(stmt.owner)
        gens = [lit.to_polynomial(owner.ring) for lit in stmt.gens]
        self.ideals[stmt.name] = AlgebraIdeal(owner, gens)
        return CommandResult(command=stmt.render(), status="ok")

    def evaluate(self, expr, seed):
        budget = self.config.step_budget
        if isinstance(expr, IntLit):
            return expr.value, ()
        if isinstance(expr, BoolLit):
            return expr.value, ()
        assert isinstance(expr, CallExpr)
        if expr.fn == "grade":
            alg, ide = self.owned_ideal(*expr.args)
            cert = grade(
                alg, ide, seed, step_budget=budget, nzd_retries=self.config.nzd_retries
            )
            return cert.grade, ({"label": expr.render(), **cert.to_dict()},)
        if expr.fn == "dim":
            if len(expr.args) == 1:
                return krull_dim(self.ring(expr.args[0]), budget), ()
            alg, ide = self.owned_ideal(*expr.args)
            return dim_quotient(alg, ide, budget), ()
        if expr.fn == "height":
            alg, ide = self.owned_ideal(*expr.args)
            return height(alg, ide, budget), ()
        if expr.fn == "is_cm":
            verdict = is_cohen_macaulay(
                self.ring(expr.args[0]),
                seed,
                step_budget=budget,
                nzd_retries=self.config.nzd_retries,
            )
            return verdict.is_cm, (
                {"label": expr.render(), **verdict.certificate.to_dict()},
            )
        raise SessionError(f"unknown function {expr.fn!r}")

    def run_assert(self, stmt: AssertStmt, seed):
        lhs, lc = self.evaluate(stmt.lhs, seed)
        rhs, rc = self.evaluate(stmt.rhs, seed)
        ok = _COMPARATORS[stmt.op](lhs, rhs)
        return CommandResult(
            command=stmt.render(),
            status="pass" if ok else "fail",
            lhs=lhs,
            rhs=rhs,
            certificates=lc + rc,
        )

    def run_check(self, stmt: CheckStmt, seed):
        budget = self.config.step_budget
        retries = self.config.nzd_retries
        cid = stmt.check_id
        arg = [a.name if hasattr(a, "name") else a.polys for a in stmt.args]
        if cid in ("thm_1_1_a",):
            A, I = self.owned_ideal(arg[0], arg[2])
            rep = _CHECKS[cid](A, self.ring(arg[1]), I, seed,
                               step_budget=budget, nzd_retries=retries)
        elif cid in ("thm_1_1_b", "thm_1_1_c"):
            A, I = self.owned_ideal(arg[0], arg[2])
            B, J = self.owned_ideal(arg[1], arg[3])
            rep = _CHECKS[cid](A, B, I, J, seed, step_budget=budget, nzd_retries=retries)
        elif cid == "lemma_1_2":
            A = self.ring(arg[0])
            B = self.ring(arg[1])
            xs = tuple(lit.to_polynomial(A.ring) for lit in arg[2])
            ys = tuple(lit.to_polynomial(B.ring) for lit in arg[3])
            rep = theorems.check_lemma_1_2(A, B, xs, ys, seed, step_budget=budget)
        elif cid in ("prop_2_3_a", "remark_2_5"):
            T, P = self.owned_ideal(arg[0], arg[1])
            if cid == "prop_2_3_a":
                rep = theorems.check_prop_2_3_a(T, P, seed, step_budget=budget)
            else:
                rep = theorems.check_remark_2_5(
                    T, P, seed, step_budget=budget, nzd_retries=retries
                )
        else:  # thm_2_1
            rep = theorems.check_thm_2_1(
                self.ring(arg[0]), self.ring(arg[1]), seed,
                step_budget=budget, nzd_retries=retries,
            )
        return CommandResult(
            command=stmt.render(),
            status=rep.status,
            lhs=rep.lhs,
            rhs=rep.rhs,
            certificates=tuple(e.to_dict() for e in rep.certificates),
            assumptions=rep.assumptions,
            detail=rep.detail,
        )

    def run(self, stmt, index):
        seed = self.config.seed + index
        if isinstance(stmt, (RingDecl, IdealDecl)):
            return self.declare(stmt)
        if isinstance(stmt, AssertStmt):
            return self.run_assert(stmt, seed)
        if isinstance(stmt, CheckStmt):
            return self.run_check(stmt, seed)
        assert isinstance(stmt, ComputeStmt)
        value, certs = self.evaluate(stmt.expr, seed)
        return CommandResult(
            command=stmt.render(), status="ok", lhs=value, certificates=certs
        )


def execute(session: Session, config: ExecConfig | None = None) -> RunReport:
    """Run a parsed session and collect per-statement results."""
    config = config or ExecConfig(prime=session.prime)
    if config.prime != session.prime:
        raise SessionError(
            f"session parsed with prime {session.prime} but executed with {config.prime}"
        )
    runner = _Runner(config)
    results = []
    for index, stmt in enumerate(session.statements):
        started = time.perf_counter()
        try:
            res = runner.run(stmt, index)
        except KernelError as exc:
            res = CommandResult(command=stmt.render(), status="error", error=str(exc))
        res.ms = (time.perf_counter() - started) * 1000.0
        results.append(res)
    return RunReport(prime=config.prime, seed=config.seed, results=tuple(results))
