"""Run reports and their JSON form.

Serialization is canonical (sorted keys, fixed indentation) so that a
fixed (session, prime, seed) yields byte-identical output; the per-command
timing fields are the one exclusion and can be dropped for comparisons.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERSION = "0.1.0"


@dataclass
class CommandResult:
    command: str
    status: str  # ok | pass | fail | skipped | error
    lhs: object = None
    rhs: object = None
    certificates: tuple = ()
    assumptions: tuple = ()
    error: str | None = None
    detail: str = ""
    ms: float = field(default=0.0, compare=False)

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "command": self.command,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "certificates": [dict(c) for c in self.certificates],
            "assumptions": list(self.assumptions),
            "error": self.error,
            "detail": self.detail,
        }
        if include_timing:
            out["ms"] = self.ms
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CommandResult":
        return cls(
            command=data["command"],
            status=data["status"],
            lhs=data["lhs"],
            rhs=data["rhs"],
            certificates=tuple(dict(c) for c in data.get("certificates", [])),
            assumptions=tuple(data.get("assumptions", [])),
            error=data.get("error"),
            detail=data.get("detail", ""),
            ms=data.get("ms", 0.0),
        )


@dataclass
class RunReport:
    prime: int
    seed: int
    results: tuple = ()
    version: str = VERSION

    @property
    def passed(self) -> bool:
        return all(r.status not in ("fail", "error") for r in self.results)

    def to_dict(self, include_timing: bool = True) -> dict:
        return {
            "version": self.version,
            "prime": self.prime,
            "seed": self.seed,
            "results": [r.to_dict(include_timing) for r in self.results],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        return cls(
            prime=data["prime"],
            seed=data["seed"],
            results=tuple(CommandResult.from_dict(r) for r in data["results"]),
            version=data["version"],
        )

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"cmtensor {self.version}  prime={self.prime}  seed={self.seed}"]
        for r in self.results:
            line = f"[{r.status}] {r.command}"
            if r.status in ("pass", "fail"):
                line += f"  :: lhs={r.lhs} rhs={r.rhs}"
            elif r.status == "ok" and r.lhs is not None:
                line += f"  :: {r.lhs}"
            if r.error:
                line += f"  !! {r.error}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        counts = {}
        for r in self.results:
            counts[r.status] = counts.get(r.status, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        lines.append(f"{len(self.results)} statements: {summary or 'none'}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"
