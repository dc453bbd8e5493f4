"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for every error this package raises deliberately."""


class AmbientMismatchError(KernelError):
    """Values from different variable contexts were combined."""


class ZeroPolynomialError(KernelError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class ZeroRingError(KernelError):
    """A presentation collapsed to the zero ring (1 lies in the relations)."""


class ImproperIdealError(KernelError):
    """An operation that needs a proper ideal got the whole ring."""


class StepBudgetExceeded(KernelError):
    """A Groebner computation ran past its reduction-step budget."""


class NzdSearchExhausted(KernelError):
    """The randomized nonzerodivisor search hit its retry cap.

    Signals that the field or the retry budget is too small for the
    instance; the caller never receives a silently wrong grade.
    """


class PermutationBoundExceeded(KernelError):
    """A permutability check was asked for a sequence past the factorial bound."""


class GradedOnlyError(KernelError):
    """The Cohen-Macaulay check needs a homogeneous presentation."""


class CertificateError(KernelError):
    """A grade certificate failed independent revalidation."""


class SessionError(KernelError):
    """A session command referenced bindings or variables inconsistently."""


class ParseError(KernelError):
    """A session file failed to tokenize or parse.

    Carries the 1-based source position so diagnostics stay clickable.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
