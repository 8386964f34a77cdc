"""Orbit enumeration, root counts, and the generic (large-system) view."""

import math

import pytest

from jkn import (
    ContractError,
    OrbitKind,
    SystemParams,
    count_almost_real_roots,
    count_real_roots,
    degree,
    enumerate_generic,
    enumerate_orbits,
    minimal_support,
    orbit_size,
    q,
    vector_from_entries,
)
from jkn.golden import (
    ALMOST_COUNTS,
    GENERIC_ALMOST_CORES,
    GENERIC_REAL_CORES,
    ORBIT_COUNTS,
    REAL_COUNTS,
)


def test_single_orbit_frozen():
    orbits = enumerate_orbits(SystemParams(3, 9), 3)
    assert len(orbits) == 1
    oc = orbits[0]
    assert oc.representative.x == (2, 1, 1, 1, 1, 1, 1, 1, 0)
    assert oc.kind is OrbitKind.REAL
    assert oc.orbit_size == 72


def test_orbit_size_frozen():
    assert orbit_size(
        vector_from_entries(SystemParams(3, 8), (2, 1, 1, 1, 1, 1, 1, 1))
    ) == 8
    assert orbit_size(
        vector_from_entries(SystemParams(3, 9), (1, 1, 1, 0, 0, 0, 0, 0, 0))
    ) == 84


def test_orbit_size_is_multinomial():
    p = SystemParams(4, 10)
    v = vector_from_entries(p, (3, 3, 3, 1, 1, 1, 1, 1, 1, 1))
    assert orbit_size(v) == math.factorial(10) // (
        math.factorial(3) * math.factorial(7)
    )


def test_count_degree_zero():
    assert count_real_roots(SystemParams(3, 9), 0) == 36
    assert count_real_roots(SystemParams(2, 4), 0) == 6


def test_counts_match_reference_rows():
    for k, n in [(3, 9), (3, 10), (4, 10), (5, 12)]:
        p = SystemParams(k, n)
        for d in range(1, 8):
            assert count_real_roots(p, d) == REAL_COUNTS[(k, n)][d - 1]
            assert (
                count_almost_real_roots(p, d)
                == ALMOST_COUNTS.get((k, n), (0,) * 7)[d - 1]
            )


def test_census_cross_check():
    """Orbit sizes partition the candidate counts."""
    for k, n, d in [(3, 9, 4), (4, 10, 4), (5, 11, 3), (3, 12, 5)]:
        p = SystemParams(k, n)
        orbits = enumerate_orbits(p, d)
        real = sum(oc.orbit_size for oc in orbits if oc.kind is OrbitKind.REAL)
        almost = sum(
            oc.orbit_size for oc in orbits if oc.kind is OrbitKind.ALMOST_REAL
        )
        assert real == count_real_roots(p, d)
        assert almost == count_almost_real_roots(p, d)


def test_representatives_are_sorted_and_ordered():
    orbits = enumerate_orbits(SystemParams(4, 11), 4)
    reps = [oc.representative.x for oc in orbits]
    for rep in reps:
        assert all(rep[i] >= rep[i + 1] for i in range(len(rep) - 1))
        assert all(0 <= c <= 4 for c in rep)
    assert reps == sorted(reps, reverse=True)
    sigs = [oc.multiset_signature for oc in orbits]
    for rep, sig in zip(reps, sigs):
        assert tuple(sorted(set(rep), reverse=True)) == tuple(v for v, _ in sig)


def test_orbit_invariants():
    for oc in enumerate_orbits(SystemParams(4, 10), 4):
        v = oc.representative
        assert q(v) == 2
        assert degree(v) == 4
        assert oc.degree == 4


def test_threads_agree():
    p = SystemParams(5, 13)
    assert enumerate_orbits(p, 4) == enumerate_orbits(p, 4, threads=4)
    assert count_real_roots(p, 5) == count_real_roots(p, 5, threads=3)


def test_degree_preconditions():
    p = SystemParams(3, 9)
    with pytest.raises(ContractError):
        enumerate_orbits(p, 0)
    with pytest.raises(ContractError):
        count_almost_real_roots(p, 0)
    with pytest.raises(ContractError):
        count_real_roots(p, -1)


def test_generic_counts_match_reference():
    real_row, almost_row = ORBIT_COUNTS[(None, None)]
    for d in range(1, 8):
        generic = enumerate_generic(d)
        assert sum(1 for g in generic if g.kind is OrbitKind.REAL) == real_row[d - 1]
        assert (
            sum(1 for g in generic if g.kind is OrbitKind.ALMOST_REAL)
            == almost_row[d - 1]
        )


def test_generic_cores_match_reference():
    for d in range(1, 6):
        generic = enumerate_generic(d)
        got_real = sorted(
            (g.core, g.core_params.k) for g in generic if g.kind is OrbitKind.REAL
        )
        got_almost = sorted(
            (g.core, g.core_params.k)
            for g in generic
            if g.kind is OrbitKind.ALMOST_REAL
        )
        assert got_real == sorted(GENERIC_REAL_CORES[d])
        assert got_almost == sorted(GENERIC_ALMOST_CORES[d])


def test_generic_core_bounds():
    """Cores fit inside the host that is guaranteed to see every orbit."""
    for d in range(1, 6):
        for g in enumerate_generic(d):
            assert g.core_params.k <= 2 * d - 1
            assert g.core_params.n - g.core_params.k <= 2 * d - 1


def test_specialize_matches_direct_enumeration():
    for d in (1, 2, 3):
        generic = enumerate_generic(d)
        for k, n in [(2 * d - 1, 4 * d - 2), (2 * d, 4 * d), (2 * d + 1, 4 * d + 1)]:
            p = SystemParams(k, n)
            specialized = {
                g.specialize(p).x for g in generic if g.fits(p)
            }
            direct = {
                oc.representative.x for oc in enumerate_orbits(p, d)
            }
            assert specialized == direct


def test_specialize_rejects_small_hosts():
    g4 = [g for g in enumerate_generic(4) if g.core_params.k == 6][0]
    assert not g4.fits(SystemParams(5, 16))
    with pytest.raises(ContractError):
        g4.specialize(SystemParams(5, 16))


def test_minimal_support_frozen():
    p, core = minimal_support(
        vector_from_entries(SystemParams(3, 9), (2, 1, 1, 1, 1, 1, 1, 1, 0))
    )
    assert (p.k, p.n) == (3, 8)
    assert core.x == (2, 1, 1, 1, 1, 1, 1, 1)
    p, core = minimal_support(
        vector_from_entries(SystemParams(3, 6), (1, 1, 1, 0, 0, 0))
    )
    assert (p.k, p.n) == (1, 1)
    assert core.x == (1,)
    # trailing zeros strip without touching the leading block
    p, core = minimal_support(
        vector_from_entries(SystemParams(4, 10), (2, 2, 2, 2, 1, 1, 1, 1, 0, 0))
    )
    assert (p.k, p.n) == (4, 8)
    assert core.x == (2, 2, 2, 2, 1, 1, 1, 1)
    # a leading entry equal to the degree strips and lowers k
    p, core = minimal_support(
        vector_from_entries(SystemParams(4, 7), (2, 1, 1, 1, 1, 1, 1))
    )
    assert (p.k, p.n) == (3, 6)
    assert core.x == (1, 1, 1, 1, 1, 1)
