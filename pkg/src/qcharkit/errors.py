"""Exception taxonomy shared across the engine.

The CLI maps these onto exit codes: syntax errors exit 2, math-domain errors
exit 3, a failed limit sweep exits 4. Everything raised on purpose derives
from EngineError so the CLI never has to catch bare Exception.
"""

from __future__ import annotations


class EngineError(Exception):
    pass


class ExprSyntaxError(EngineError):
    """Parse failure, annotated with the offending position in the input."""

    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        if pos >= 0:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class MathDomainError(EngineError):
    pass


class NotAnAMonomialError(MathDomainError):
    """Y-monomial is not a product of A[i,s]^{+-1} expansions."""


class NonUnitDivisorError(MathDomainError):
    """Series division needs a divisor whose degree-0 part is a single
    monomial with coefficient 1."""


class FMInconsistentError(MathDomainError):
    """The iterative character expansion reached a monomial whose slice
    multiplicities cannot be reconciled; the module is not solvable by
    this algorithm."""


class StepCapError(MathDomainError):
    """Character expansion exceeded its step budget."""


class ConeError(MathDomainError):
    """A degree left the graded cone it was required to live in."""


class FactorizationError(MathDomainError):
    """Constant/non-constant factorization failed; carries the first
    mixed term as evidence."""


class UnsupportedDatumError(MathDomainError):
    """Operation not available for this Cartan type."""


class NoLimitError(EngineError):
    """Stabilization sweep exhausted its budget without convergence.

    Carries the sweep log so the failure is reportable as-is.
    """

    def __init__(self, message: str, sweep_log: list[str] | None = None):
        super().__init__(message)
        self.sweep_log = list(sweep_log or [])
