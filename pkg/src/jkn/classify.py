"""Membership classification for real and almost-real roots.

A lattice element x of degree d >= 1 is a positive real root exactly when

(1) 0 <= x_i <= d for all i,
(2) q(x) = 2,
(3) repeated application of x -> s_beta(dec(x)) ends at -beta without
    breaking condition (1) at any intermediate step.

Elements satisfying (1) and (2) whose reduction breaks (1) instead of
reaching -beta are the almost real roots; they occur only in degrees >= 4.
Degree-0 real roots are exactly the differences e_i - e_j and are handled
structurally.  The classifier covers every input: zero, negative degrees
(by sign mirror), non-lattice tuples (via :func:`classify_entries`), and
vectors failing (1) or (2).

:func:`bruteforce_positive_real_roots` is an independent oracle that knows
nothing of the criterion above: it walks the Weyl orbit of beta by breadth
first search and filters positives, so the two implementations can be
checked against each other on small systems.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ContractError, ResourceLimitError
from .lattice import LatticeVector, SystemParams

__all__ = [
    "Kind",
    "TerminalKind",
    "ReductionStep",
    "ReductionTrace",
    "Classification",
    "classify",
    "classify_entries",
    "reduce_trace",
    "bruteforce_positive_real_roots",
]


class Kind(str, enum.Enum):
    """Classification outcomes."""

    REAL_POSITIVE = "RealPositive"
    REAL_NEGATIVE = "RealNegative"
    ALMOST_REAL_POSITIVE = "AlmostRealPositive"
    ALMOST_REAL_NEGATIVE = "AlmostRealNegative"
    DEGREE_ZERO_REAL = "DegreeZeroReal"
    NOT_REAL_Q = "NotRealQ"
    NOT_REAL_RANGE = "NotRealRangeViolation"
    NOT_IN_LATTICE = "NotInLattice"
    ZERO = "Zero"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value

    @property
    def is_real(self) -> bool:
        return self in (Kind.REAL_POSITIVE, Kind.REAL_NEGATIVE, Kind.DEGREE_ZERO_REAL)

    @property
    def is_almost_real(self) -> bool:
        return self in (Kind.ALMOST_REAL_POSITIVE, Kind.ALMOST_REAL_NEGATIVE)


class TerminalKind(str, enum.Enum):
    """How a reduction trace ended.

    The iteration itself terminates by reaching -beta, breaking the range
    condition, or (defensively; unreachable for q = 2 inputs) hitting an
    all-nonpositive vector other than -beta.  Q_VIOLATION marks the
    zero-step trace attached when a degree >= 1 input fails q = 2 before
    the iteration starts.
    """

    REACHED_MINUS_BETA = "REACHED_MINUS_BETA"
    RANGE_VIOLATION = "RANGE_VIOLATION"
    ALL_NONPOSITIVE = "ALL_NONPOSITIVE"
    Q_VIOLATION = "Q_VIOLATION"


_TERMINAL_JSON = {
    TerminalKind.REACHED_MINUS_BETA: "real",
    TerminalKind.RANGE_VIOLATION: "almost",
    TerminalKind.ALL_NONPOSITIVE: "nonpositive",
    TerminalKind.Q_VIOLATION: "q",
}


@dataclass(frozen=True, slots=True)
class ReductionStep:
    """One application of x -> s_beta(dec(x)).

    ``before_sort`` is the vector entering the step, ``sorted`` its
    non-increasing rearrangement, ``r`` the shift added to the first k
    entries, ``degree_after`` the degree of the step's output.
    """

    before_sort: LatticeVector
    sorted: LatticeVector
    r: int
    degree_after: int


@dataclass(frozen=True, slots=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    terminal: TerminalKind

    def as_json_dict(self) -> dict:
        label = _TERMINAL_JSON[self.terminal]
        if self.terminal is TerminalKind.RANGE_VIOLATION and not self.steps:
            label = "range"
        return {
            "steps": [
                {"sorted": list(s.sorted.x), "r": s.r, "degree": s.degree_after}
                for s in self.steps
            ],
            "terminal": label,
        }


@dataclass(frozen=True, slots=True)
class Classification:
    """Outcome of :func:`classify`.

    ``q_value`` is attached when the kind is NotRealQ.  ``degree`` is the
    input's degree when it is defined (None for non-lattice entries).  The
    trace is present for every lattice input of nonzero degree; for
    negative degrees it is the trace of the mirrored positive vector.
    """

    kind: Kind
    trace: Optional[ReductionTrace] = None
    q_value: Optional[int] = None
    degree: Optional[int] = None


def _reduce_sorted(
    k: int, x: tuple[int, ...]
) -> tuple[TerminalKind, list[tuple[tuple[int, ...], tuple[int, ...], int, int]]]:
    """Run the reduction on raw tuples, recording every step.

    Caller guarantees: entries in [0, d], q = 2, d >= 1.  Returns the
    terminal kind and the step records (before, sorted, r, degree_after).
    """
    steps: list[tuple[tuple[int, ...], tuple[int, ...], int, int]] = []
    d0 = sum(x) // k
    while True:
        s = tuple(sorted(x, reverse=True))
        total = sum(s)
        d = total // k
        r = (total - sum(s[:k])) - 2 * d
        y = tuple(c + r for c in s[:k]) + s[k:]
        d_new = d + r
        steps.append((x, s, r, d_new))
        if all(c <= 0 for c in y):
            minus_beta = sum(1 for c in y if c == -1) == k and all(
                c in (0, -1) for c in y
            )
            terminal = (
                TerminalKind.REACHED_MINUS_BETA
                if minus_beta
                else TerminalKind.ALL_NONPOSITIVE
            )
            return terminal, steps
        if any(c < 0 or c > d_new for c in y):
            return TerminalKind.RANGE_VIOLATION, steps
        x = y
        if len(steps) > d0 + 1:  # cannot happen: degree drops every step
            raise RuntimeError("reduction failed to terminate")


def is_real_sorted_candidate(k: int, x: tuple[int, ...]) -> bool:
    """Fast path for enumeration: is a sorted candidate a real root?

    ``x`` must be non-increasing with entries in [0, d], sum k*d, q = 2,
    d >= 1.  No trace is built.
    """
    remaining = sum(x) // k + 1  # degree drops every step
    while True:
        remaining -= 1
        if remaining < 0:  # cannot happen on contract-valid input
            raise RuntimeError("reduction failed to terminate")
        total = sum(x)
        d = total // k
        r = (total - sum(x[:k])) - 2 * d
        d_new = d + r
        head = [c + r for c in x[:k]]
        tail = x[k:]
        hi = max(head[0], tail[0]) if tail else head[0]
        lo = min(head[-1], tail[-1]) if tail else head[-1]
        if hi <= 0:
            return head.count(-1) == k and all(c in (0, -1) for c in head) and all(
                c == 0 for c in tail
            )
        if lo < 0 or hi > d_new:
            return False
        merged = sorted(head + list(tail), reverse=True)
        x = tuple(merged)


def reduce_trace(v: LatticeVector) -> ReductionTrace:
    """Full reduction record for a range-valid q = 2 vector of degree >= 1."""
    k = v.params.k
    d = sum(v.x) // k
    if d < 1:
        raise ContractError(f"reduce_trace requires degree >= 1, got degree {d}")
    if any(c < 0 or c > d for c in v.x):
        raise ContractError(
            f"reduce_trace requires all entries in [0, {d}] (the degree)"
        )
    qv = sum(c * c for c in v.x) + (2 - k) * d * d
    if qv != 2:
        raise ContractError(f"reduce_trace requires q = 2, got q = {qv}")
    terminal, raw_steps = _reduce_sorted(k, v.x)
    steps = tuple(
        ReductionStep(
            before_sort=LatticeVector(v.params, before),
            sorted=LatticeVector(v.params, srt),
            r=r,
            degree_after=d_after,
        )
        for before, srt, r, d_after in raw_steps
    )
    return ReductionTrace(steps, terminal)


def classify(v: LatticeVector) -> Classification:
    """Classify a lattice vector; see the module docstring for the cases."""
    k = v.params.k
    total = sum(v.x)
    d = total // k
    if all(c == 0 for c in v.x):
        return Classification(Kind.ZERO, degree=0)
    if d < 0:
        mirror = classify(-v)
        flipped = {
            Kind.REAL_POSITIVE: Kind.REAL_NEGATIVE,
            Kind.REAL_NEGATIVE: Kind.REAL_POSITIVE,
            Kind.ALMOST_REAL_POSITIVE: Kind.ALMOST_REAL_NEGATIVE,
            Kind.ALMOST_REAL_NEGATIVE: Kind.ALMOST_REAL_POSITIVE,
        }.get(mirror.kind, mirror.kind)
        return Classification(
            flipped, trace=mirror.trace, q_value=mirror.q_value, degree=d
        )
    if d == 0:
        plus = sum(1 for c in v.x if c == 1)
        minus = sum(1 for c in v.x if c == -1)
        zero = sum(1 for c in v.x if c == 0)
        if plus == 1 and minus == 1 and zero == v.params.n - 2:
            return Classification(Kind.DEGREE_ZERO_REAL, degree=0)
        qv = sum(c * c for c in v.x)
        return Classification(Kind.NOT_REAL_Q, q_value=qv, degree=0)
    if any(c < 0 or c > d for c in v.x):
        trace = ReductionTrace((), TerminalKind.RANGE_VIOLATION)
        return Classification(Kind.NOT_REAL_RANGE, trace=trace, degree=d)
    qv = sum(c * c for c in v.x) + (2 - k) * d * d
    if qv != 2:
        trace = ReductionTrace((), TerminalKind.Q_VIOLATION)
        return Classification(Kind.NOT_REAL_Q, trace=trace, q_value=qv, degree=d)
    full = reduce_trace(v)
    if full.terminal is TerminalKind.REACHED_MINUS_BETA:
        kind = Kind.REAL_POSITIVE
    else:
        # Range break, or the defensive all-nonpositive end: conditions (1)
        # and (2) held but the orbit of beta was not reached.
        kind = Kind.ALMOST_REAL_POSITIVE
    return Classification(kind, trace=full, degree=d)


def classify_entries(params: SystemParams, entries: Sequence[int]) -> Classification:
    """Classify raw integer entries, reporting NotInLattice instead of raising."""
    entries = tuple(int(c) for c in entries)
    if len(entries) != params.n:
        raise ContractError(
            f"expected {params.n} coordinates, got {len(entries)}"
        )
    if sum(entries) % params.k != 0:
        return Classification(Kind.NOT_IN_LATTICE)
    return classify(LatticeVector(params, entries))


def bruteforce_positive_real_roots(
    params: SystemParams, max_degree: int, visited_cap: int = 10_000_000
) -> set[LatticeVector]:
    """Independent oracle: BFS over the Weyl orbit of beta.

    Applies all n generators (the n-1 adjacent swaps and s_beta) starting
    from beta, keeping vectors with 0 <= degree <= max_degree and entries
    within [-max_degree*k, max_degree*k].  Every positive real root of
    degree <= max_degree is reachable inside that window, because the
    reduction path of a real root stays range-bounded and can be reversed.
    Positives are the kept roots of degree >= 1 plus the degree-0 roots
    e_i - e_j whose +1 sits at the later index.
    """
    k, n = params.k, params.n
    if max_degree < 0:
        raise ContractError("max_degree must be >= 0")
    bound = max(1, max_degree * k)
    beta = tuple(1 if i < k else 0 for i in range(n))
    seen: set[tuple[int, ...]] = {beta}
    frontier: list[tuple[int, ...]] = [beta]
    while frontier:
        next_frontier: list[tuple[int, ...]] = []
        for x in frontier:
            images = []
            for i in range(n - 1):
                if x[i] != x[i + 1]:
                    images.append(x[:i] + (x[i + 1], x[i]) + x[i + 2 :])
            total = sum(x)
            r = (total - sum(x[:k])) - 2 * (total // k)
            if r != 0:
                images.append(tuple(c + r for c in x[:k]) + x[k:])
            for y in images:
                if y in seen:
                    continue
                ty = sum(y)
                dy = ty // k
                if not 0 <= dy <= max_degree:
                    continue
                if any(c < -bound or c > bound for c in y):
                    continue
                seen.add(y)
                next_frontier.append(y)
                if len(seen) > visited_cap:
                    raise ResourceLimitError(
                        f"oracle exceeded visited cap of {visited_cap} states"
                    )
        frontier = next_frontier
    out: set[LatticeVector] = set()
    for x in seen:
        d = sum(x) // k
        if 1 <= d <= max_degree:
            out.add(LatticeVector(params, x))
        elif d == 0:
            if x.index(1) > x.index(-1):
                out.add(LatticeVector(params, x))
    return out
