"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings, strategies as st

from jkn import SystemParams, vector_from_entries

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def params_strategy(draw, min_k=1, max_k=5, max_n=9):
    k = draw(st.integers(min_k, max_k))
    n = draw(st.integers(max(k, 2), max_n))
    return SystemParams(k, n)


@st.composite
def params_and_vector(draw, min_k=1, max_k=5, max_n=9, max_abs=6):
    """A system together with an arbitrary lattice vector in it."""
    params = draw(params_strategy(min_k=min_k, max_k=max_k, max_n=max_n))
    entries = list(
        draw(
            st.lists(
                st.integers(-max_abs, max_abs),
                min_size=params.n,
                max_size=params.n,
            )
        )
    )
    entries[-1] += (-sum(entries)) % params.k
    return params, vector_from_entries(params, tuple(entries))


def all_candidates(k: int, n: int, d: int) -> list[tuple[int, ...]]:
    """Every vector with entries in [0, d], coordinate sum kd and q = 2.

    Unsorted: all permutations appear, not just the non-increasing
    representatives.
    """
    want_sq = 2 + (k - 2) * d * d
    out = []
    for t in itertools.product(range(d + 1), repeat=n):
        if sum(t) != k * d:
            continue
        if sum(c * c for c in t) == want_sq:
            out.append(t)
    return out
