"""Exception types shared across the package.

Contract violations (bad preconditions, malformed input) raise
:class:`ContractError` with a message naming the failed condition.
Resource guards (state caps, runaway enumerations) raise
:class:`ResourceLimitError` so callers can distinguish "you asked for
something invalid" from "this grew too big".
"""


class ContractError(ValueError):
    """A documented precondition or invariant was violated."""


class NotInLatticeError(ContractError):
    """Coordinate sum is not divisible by k, so the vector is not in the lattice."""


class ResourceLimitError(RuntimeError):
    """A configured resource cap (visited states, time) was exceeded."""
