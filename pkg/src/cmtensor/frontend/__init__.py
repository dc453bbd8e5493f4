"""Session DSL frontend: parser, executor, reports, and the CLI."""

from .executor import ExecConfig, execute
from .parser import Session, parse_session
from .report import CommandResult, RunReport

__all__ = [
    "CommandResult",
    "ExecConfig",
    "RunReport",
    "Session",
    "execute",
    "parse_session",
]
