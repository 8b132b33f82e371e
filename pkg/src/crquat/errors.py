"""Exception taxonomy mirrored by the CLI exit codes."""

from __future__ import annotations


class DocumentError(Exception):
    """Malformed input document (exit code 2)."""


class ContractError(Exception):
    """Structurally invalid request: violated precondition, impossible
    dimensions, dependent basis rows (exit code 3)."""


class InternalCheckError(Exception):
    """A derived quantity failed a self-check that should always hold
    (exit code 4).  Firing means an implementation fault, not bad input."""


class WitnessBudgetError(Exception):
    """The sign-witness grid search exhausted its attempt budget."""

    def __init__(self, attempts: int):
        super().__init__("no witness found within %d candidate structures" % attempts)
        self.attempts = attempts
