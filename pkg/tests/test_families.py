"""Named families, structural maps, weights, and the J(3,8) correspondence."""

from fractions import Fraction

import pytest
from hypothesis import given

from jkn import (
    ContractError,
    Kind,
    Series,
    SystemParams,
    affine_delta,
    affine_family,
    basis_matrix,
    beta_vector,
    classify,
    definiteness_margin,
    degree,
    delta_family,
    dualize,
    extend,
    fundamental_weights,
    gamma,
    inner,
    is_finite_type,
    q,
    simple_root,
    sum_of_positive_roots,
    to_manin,
    vector_from_entries,
)

from conftest import params_and_vector

F = Fraction


# --- structural maps -------------------------------------------------------


def test_dualize_frozen():
    v = vector_from_entries(SystemParams(3, 8), (2, 1, 1, 1, 1, 1, 1, 1))
    w = dualize(v)
    assert (w.params.k, w.params.n) == (5, 8)
    assert w.x == (2, 2, 2, 2, 2, 2, 2, 1)
    assert q(w) == 2 and degree(w) == 3


def test_dualize_needs_smaller_k():
    with pytest.raises(ContractError):
        dualize(vector_from_entries(SystemParams(2, 2), (1, 1)))


@given(params_and_vector(max_k=4, max_n=9))
def test_dualize_involution_preserves_form(pv):
    params, v = pv
    if params.k >= params.n:
        return
    w = dualize(v)
    assert q(w) == q(v)
    assert degree(w) == degree(v)
    assert dualize(w) == v


def test_extend_frozen():
    b = beta_vector(SystemParams(3, 6))
    wide = extend(b, grow_k=False)
    assert (wide.params.k, wide.params.n) == (3, 7)
    assert wide.x == (1, 1, 1, 0, 0, 0, 0)
    tall = extend(b, grow_k=True)
    assert (tall.params.k, tall.params.n) == (4, 7)
    assert tall.x == (1, 1, 1, 1, 0, 0, 0)


@given(params_and_vector(max_n=8))
def test_extend_preserves_form(pv):
    _, v = pv
    for grow_k in (False, True):
        w = extend(v, grow_k)
        assert q(w) == q(v)
        assert degree(w) == degree(v)


# --- one-per-degree families -----------------------------------------------


def test_gamma_frozen():
    assert gamma(2, SystemParams(3, 6)).x == (1, 1, 1, 1, 1, 1)
    assert gamma(3, SystemParams(3, 8)).x == (2, 1, 1, 1, 1, 1, 1, 1)
    assert gamma(3, SystemParams(4, 9)).x == (3, 2, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(ContractError):
        gamma(3, SystemParams(3, 7))
    with pytest.raises(ContractError):
        gamma(1, SystemParams(3, 8))


def test_delta_frozen():
    assert delta_family(2, SystemParams(3, 6)).x == (1, 1, 1, 1, 1, 1)
    assert delta_family(3, SystemParams(4, 8)).x == (2, 2, 2, 2, 1, 1, 1, 1)
    assert delta_family(4, SystemParams(5, 10)).x == (
        3, 3, 3, 3, 3, 1, 1, 1, 1, 1,
    )
    with pytest.raises(ContractError):
        delta_family(4, SystemParams(4, 9))


def test_families_are_real_roots():
    host = SystemParams(6, 15)
    for d in range(2, 6):
        for v in (gamma(d, host), delta_family(d, host)):
            assert q(v) == 2
            assert degree(v) == d
            assert classify(v).kind is Kind.REAL_POSITIVE


def test_family_inner_products():
    """The two families form the lattice-theoretic grid they should."""
    host = SystemParams(6, 15)
    for d in range(2, 6):
        for e in range(2, 6):
            g, ge = gamma(d, host), gamma(e, host)
            dl, dle = delta_family(d, host), delta_family(e, host)
            assert inner(g, ge) == 2 - abs(d - e)
            assert inner(dl, dle) == 2 - abs(d - e)
        assert inner(gamma(d, host), delta_family(d, host)) == d * (3 - d)


def test_degree_two_members_coincide():
    host = SystemParams(5, 12)
    assert gamma(2, host) == delta_family(2, host)


# --- affine systems ---------------------------------------------------------


def test_affine_delta_frozen():
    assert affine_delta(SystemParams(3, 9)).x == (1,) * 9
    assert affine_delta(SystemParams(4, 8)).x == (1,) * 8
    assert affine_delta(SystemParams(6, 9)).x == (2,) * 9
    with pytest.raises(ContractError):
        affine_delta(SystemParams(3, 8))


def test_affine_delta_spans_kernel():
    for k, n in [(3, 9), (4, 8), (6, 9)]:
        p = SystemParams(k, n)
        d = affine_delta(p)
        assert q(d) == 0
        assert inner(d, beta_vector(p)) == 0
        for i in range(1, n):
            assert inner(d, simple_root(p, i)) == 0


def test_delta3_decomposes_in_4_8():
    p = SystemParams(4, 8)
    assert delta_family(3, p) == beta_vector(p) + affine_delta(p)


def test_margin_trichotomy():
    assert definiteness_margin(SystemParams(3, 8)) == 1
    assert definiteness_margin(SystemParams(3, 9)) == 0
    assert definiteness_margin(SystemParams(4, 8)) == 0
    assert definiteness_margin(SystemParams(6, 9)) == 0
    assert definiteness_margin(SystemParams(3, 10)) == -1
    assert is_finite_type(SystemParams(3, 8))
    assert not is_finite_type(SystemParams(3, 9))
    assert not is_finite_type(SystemParams(4, 10))


def test_margin_self_dual():
    for k in range(1, 8):
        for n in range(k + 1, 16):
            assert definiteness_margin(SystemParams(k, n)) == definiteness_margin(
                SystemParams(n - k, n)
            )


# --- affine one-parameter families ------------------------------------------


def test_affine_family_digit_series():
    """q stays 2 along each series, so the base is orthogonal to the null root."""
    host = SystemParams(7, 14)
    for series in Series:
        if series.value.endswith("0"):
            continue
        for sign in (1, -1):
            for m in (1, 2, 3):
                v = affine_family(series, sign, m, host)
                assert q(v) == 2
                assert classify(v).kind in (
                    Kind.REAL_POSITIVE,
                    Kind.DEGREE_ZERO_REAL,
                )


def test_affine_family_step_is_null_root():
    host = SystemParams(7, 14)
    v1 = affine_family(Series.A1, 1, 1, host)
    v2 = affine_family(Series.A1, 1, 2, host)
    assert q(v2 - v1) == 0


def test_affine_family_digit_zero_window():
    host = SystemParams(4, 10)
    v = affine_family(Series.A0, -1, 1, host, indices=(9, 2))
    assert v.x == (3, 2, 1, 1, 1, 1, 1, 1, 0, 1)
    assert q(v) == 2
    # indices must sit inside the window where the null root is constant
    with pytest.raises(ContractError):
        affine_family(Series.A0, 1, 1, host, indices=(9, 1))
    with pytest.raises(ContractError):
        affine_family(Series.A0, 1, 1, host)
    with pytest.raises(ContractError):
        affine_family(Series.A1, 1, 1, host, indices=(9, 2))


def test_affine_family_preconditions():
    with pytest.raises(ContractError):
        affine_family(Series.A1, 1, 0, SystemParams(7, 14))
    with pytest.raises(ContractError):
        affine_family(Series.A1, 2, 1, SystemParams(7, 14))
    with pytest.raises(ContractError):
        affine_family(Series.B1, 1, 1, SystemParams(5, 14))  # needs k >= 6
    with pytest.raises(ContractError):
        affine_family(Series.C1, 1, 1, SystemParams(4, 7))  # needs n-k >= 4


def test_manin_curve_rows():
    """The seven exceptional-curve rows at m = 1 in J(4,10)."""
    host = SystemParams(4, 10)
    rows = [
        (Series.A3, -1, None, (0, -1, 0, 0, 0, 0, 0, 0, 0, 1)),
        (Series.A2, -1, None, (1, 0, 0, 0, 0, 0, 0, 1, 1, 1)),
        (Series.A1, -1, None, (2, 0, 0, 0, 1, 1, 1, 1, 1, 1)),
        (Series.A0, -1, (9, 2), (3, 2, 1, 1, 1, 1, 1, 1, 0, 1)),
        (Series.A1, 1, None, (4, 2, 2, 2, 1, 1, 1, 1, 1, 1)),
        (Series.A2, 1, None, (5, 2, 2, 2, 2, 2, 2, 1, 1, 1)),
        (Series.A3, 1, None, (6, 3, 2, 2, 2, 2, 2, 2, 2, 1)),
    ]
    for series, sign, indices, expected in rows:
        v = affine_family(series, sign, 1, host, indices)
        assert v.x == expected, (series, sign)


# --- fundamental weights -----------------------------------------------------


E6_WEIGHTS = (
    (F(1), F(1), F(1), F(1), F(1), F(1)),
    (F(-1, 3), F(2, 3), F(2, 3), F(2, 3), F(2, 3), F(2, 3)),
    (F(1, 3), F(1, 3), F(4, 3), F(4, 3), F(4, 3), F(4, 3)),
    (F(1), F(1), F(1), F(2), F(2), F(2)),
    (F(2, 3), F(2, 3), F(2, 3), F(2, 3), F(5, 3), F(5, 3)),
    (F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(4, 3)),
)

E7_WEIGHTS = (
    tuple(F(3, 2) for _ in range(7)),
    (F(0), F(1), F(1), F(1), F(1), F(1), F(1)),
    (F(1), F(1), F(2), F(2), F(2), F(2), F(2)),
    (F(2), F(2), F(2), F(3), F(3), F(3), F(3)),
    (F(3, 2), F(3, 2), F(3, 2), F(3, 2), F(5, 2), F(5, 2), F(5, 2)),
    (F(1), F(1), F(1), F(1), F(1), F(2), F(2)),
    (F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(3, 2)),
)

E8_WEIGHTS = (
    tuple(F(3) for _ in range(8)),
    (F(1), F(2), F(2), F(2), F(2), F(2), F(2), F(2)),
    (F(3), F(3), F(4), F(4), F(4), F(4), F(4), F(4)),
    (F(5), F(5), F(5), F(6), F(6), F(6), F(6), F(6)),
    (F(4), F(4), F(4), F(4), F(5), F(5), F(5), F(5)),
    (F(3), F(3), F(3), F(3), F(3), F(4), F(4), F(4)),
    (F(2), F(2), F(2), F(2), F(2), F(2), F(3), F(3)),
    (F(1), F(1), F(1), F(1), F(1), F(1), F(1), F(2)),
)


def test_weights_e6_frozen():
    ws = fundamental_weights(SystemParams(3, 6))
    assert tuple(w.coords for w in ws) == E6_WEIGHTS


def test_weights_e7_frozen():
    ws = fundamental_weights(SystemParams(3, 7))
    assert tuple(w.coords for w in ws) == E7_WEIGHTS


def test_weights_e8_frozen():
    ws = fundamental_weights(SystemParams(3, 8))
    assert tuple(w.coords for w in ws) == E8_WEIGHTS


def test_weights_d_series_shape():
    n = 6
    ws = fundamental_weights(SystemParams(2, n))
    assert ws[0].coords == tuple(F(1, 2) for _ in range(n))
    assert ws[1].coords == (F(-1, 2),) + tuple(F(1, 2) for _ in range(n - 1))
    for i in range(2, n):
        assert ws[i].coords == (F(0),) * i + (F(1),) * (n - i)


def test_weight_plain_strings():
    ws = fundamental_weights(SystemParams(3, 6))
    assert ws[1].plain_str() == "1/3(-1,2,2,2,2,2)"
    assert ws[3].plain_str() == "(1,1,1,2,2,2)"
    e7 = fundamental_weights(SystemParams(3, 7))
    assert e7[0].plain_str() == "1/2(3,3,3,3,3,3,3)"


def test_weight_duality():
    """B(weight_i, basis_j) is the Kronecker delta."""
    for k, cap in ((2, 10), (3, 8)):
        for n in range(k + 1, cap + 1):
            p = SystemParams(k, n)
            ws = fundamental_weights(p)
            basis = [beta_vector(p)] + [simple_root(p, i) for i in range(1, n)]
            for i, w in enumerate(ws):
                dw = sum(w.coords) / k
                for j, b in enumerate(basis):
                    db = degree(b)
                    val = sum(
                        w.coords[t] * b.x[t] for t in range(n)
                    ) + (2 - k) * dw * db
                    assert val == (1 if i == j else 0), (p, i, j)


def test_weight_root_coefficients_reconstruct_coords():
    p = SystemParams(3, 7)
    m = basis_matrix(p)
    for w in fundamental_weights(p):
        for i in range(p.n):
            assert w.coords[i] == sum(
                F(m[i][j]) * w.root_coeffs[j] for j in range(p.n)
            )


def test_weights_reject_non_finite():
    with pytest.raises(ContractError, match="affine"):
        fundamental_weights(SystemParams(3, 9))
    with pytest.raises(ContractError, match="indefinite"):
        fundamental_weights(SystemParams(3, 10))


POSITIVE_ROOT_SUMS = {
    (2, 4): (0, 2, 4, 6),
    (2, 5): (0, 2, 4, 6, 8),
    (2, 6): (0, 2, 4, 6, 8, 10),
    (2, 7): (0, 2, 4, 6, 8, 10, 12),
    (2, 8): (0, 2, 4, 6, 8, 10, 12, 14),
    (3, 6): (6, 8, 10, 12, 14, 16),
    (3, 7): (15, 17, 19, 21, 23, 25, 27),
    (3, 8): (44, 46, 48, 50, 52, 54, 56, 58),
}


def test_sum_of_positive_roots_frozen():
    for (k, n), expected in POSITIVE_ROOT_SUMS.items():
        assert sum_of_positive_roots(SystemParams(k, n)).x == expected


def test_sum_of_positive_roots_is_twice_weight_sum():
    for k, n in POSITIVE_ROOT_SUMS:
        p = SystemParams(k, n)
        ws = fundamental_weights(p)
        double = tuple(2 * sum(w.coords[i] for w in ws) for i in range(n))
        assert tuple(map(F, sum_of_positive_roots(p).x)) == double


# --- Manin correspondence ----------------------------------------------------


def test_to_manin_root_rows():
    p = SystemParams(3, 8)
    rows = [
        ((1, 0, 0, 0, 0, 0, 0, -1), 0),
        ((1, 1, 1, 0, 0, 0, 0, 0), 1),
        ((1, 1, 1, 1, 1, 1, 0, 0), 2),
        ((2, 1, 1, 1, 1, 1, 1, 1), 3),
    ]
    for entries, a in rows:
        v = vector_from_entries(p, entries)
        mv = to_manin(v)
        assert mv.a == a and mv.b == entries
        neg = to_manin(-v)
        assert neg.a == -a
        assert neg.b == tuple(-c for c in entries)


def test_to_manin_square_is_minus_two_on_roots():
    p = SystemParams(3, 8)
    for entries in [(1, 1, 1, 0, 0, 0, 0, 0), (2, 1, 1, 1, 1, 1, 1, 1)]:
        mv = to_manin(vector_from_entries(p, entries))
        assert mv.a ** 2 - sum(c * c for c in mv.b) == -2


def test_to_manin_rejects_other_systems():
    with pytest.raises(ContractError):
        to_manin(beta_vector(SystemParams(3, 7)))
