"""Structural maps and distinguished root families.

Covers the maps between systems (duality J(k,n) <-> J(n-k,n), one-step
extensions, minimal support), the two one-per-degree families of real
roots, the null roots and real-root families of the three affine systems,
fundamental weights and positive-root sums for finite types, and the
degree-plus-coordinates form of J(3,8) elements used to match the
classical E8 / del Pezzo tables.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ContractError
from .lattice import (
    LatticeVector,
    SystemParams,
    basis_matrix,
    cartan_matrix,
    degree,
)

__all__ = [
    "WeightVector",
    "ManinVector",
    "Series",
    "dualize",
    "extend",
    "minimal_support",
    "gamma",
    "delta_family",
    "affine_delta",
    "affine_family",
    "definiteness_margin",
    "is_finite_type",
    "fundamental_weights",
    "sum_of_positive_roots",
    "to_manin",
]


# ---------------------------------------------------------------------------
# Structural maps


def dualize(v: LatticeVector) -> LatticeVector:
    """Send x of J(k,n) to (d-x_n,...,d-x_1) of J(n-k,n); preserves q."""
    params = v.params
    if params.k >= params.n:
        raise ContractError(f"dualize needs k < n, got {params}")
    d = degree(v)
    flipped = tuple(d - c for c in reversed(v.x))
    return LatticeVector(SystemParams(params.n - params.k, params.n), flipped)


def extend(v: LatticeVector, grow_k: bool) -> LatticeVector:
    """Embed into the next larger system; degree and q are unchanged.

    grow_k=False appends a zero coordinate, landing in J(k, n+1).
    grow_k=True prepends an entry equal to the degree, landing in
    J(k+1, n+1).
    """
    params = v.params
    if grow_k:
        d = degree(v)
        return LatticeVector(
            SystemParams(params.k + 1, params.n + 1), (d,) + v.x
        )
    return LatticeVector(SystemParams(params.k, params.n + 1), v.x + (0,))


def minimal_support(v: LatticeVector) -> tuple[SystemParams, LatticeVector]:
    """Undo every extension: strip trailing zeros, then leading degree entries.

    Requires a non-increasing vector of degree >= 1 with entries in
    [0, degree].  k never drops below 1, so the all-ones vector of degree 1
    ends at (1) in J(1,1).
    """
    d = degree(v)
    if d < 1:
        raise ContractError(f"minimal_support requires degree >= 1, got {d}")
    x = v.x
    if any(x[i] < x[i + 1] for i in range(len(x) - 1)):
        raise ContractError("minimal_support requires a non-increasing vector")
    if x[0] > d or x[-1] < 0:
        raise ContractError(
            f"minimal_support requires entries in [0, {d}] (the degree)"
        )
    k = v.params.k
    while x and x[-1] == 0:
        x = x[:-1]
    while k > 1 and x[0] == d:
        x = x[1:]
        k -= 1
    params = SystemParams(k, len(x))
    return params, LatticeVector(params, x)


# ---------------------------------------------------------------------------
# Named families


def gamma(d: int, params: SystemParams) -> LatticeVector:
    """The degree-d real root (d..d 1's-block) with k-3 leading d's.

    Pattern: d repeated k-3 times, then d-1 once, then 1 repeated 2d+1
    times, zero padded.  Defined for d >= 2, k >= 3, n >= k + 2d - 1.
    """
    k, n = params.k, params.n
    if d < 2:
        raise ContractError(f"gamma requires d >= 2, got {d}")
    if k < 3 or n < k + 2 * d - 1:
        raise ContractError(
            f"gamma pattern of degree {d} needs k >= 3 and n >= k + {2 * d - 1},"
            f" got {params}"
        )
    entries = (d,) * (k - 3) + (d - 1,) + (1,) * (2 * d + 1)
    return LatticeVector(params, entries + (0,) * (n - len(entries)))


def delta_family(d: int, params: SystemParams) -> LatticeVector:
    """The second one-per-degree family of real roots.

    Pattern: d repeated k-d-1 times, then d-1 repeated d+1 times, then 1
    repeated d+1 times.  Defined for d >= 2, k >= d+1, n >= k + d + 1.
    """
    k, n = params.k, params.n
    if d < 2:
        raise ContractError(f"delta_family requires d >= 2, got {d}")
    if k < d + 1 or n < k + d + 1:
        raise ContractError(
            f"delta_family pattern of degree {d} needs k >= {d + 1} and"
            f" n >= k + {d + 1}, got {params}"
        )
    entries = (d,) * (k - d - 1) + (d - 1,) * (d + 1) + (1,) * (d + 1)
    return LatticeVector(params, entries + (0,) * (n - len(entries)))


# ---------------------------------------------------------------------------
# Affine systems

_AFFINE_DELTAS: dict[SystemParams, tuple[int, ...]] = {
    SystemParams(3, 9): (1,) * 9,
    SystemParams(4, 8): (1,) * 8,
    SystemParams(6, 9): (2,) * 9,
}


def affine_delta(params: SystemParams) -> LatticeVector:
    """The null root: generator of the Cartan kernel, q = 0."""
    entries = _AFFINE_DELTAS.get(params)
    if entries is None:
        raise ContractError(
            f"{params} is not affine; the affine systems are J(3,9), J(4,8),"
            " J(6,9)"
        )
    return LatticeVector(params, entries)


class Series(str, enum.Enum):
    """Real-root families of the three affine subsystem embeddings.

    The letter picks the null root: A uses the J(3,9) one, B the J(6,9)
    one, C the J(4,8) one.  The digit picks the base root added to integer
    multiples of the null root; 0 takes an explicit coordinate pair.
    """

    A0 = "A0"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    B0 = "B0"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"


_SERIES_MIN_TAILS = {"A": (3, 6), "B": (6, 3), "C": (4, 4)}


def _embedded_null_root(letter: str, params: SystemParams) -> tuple[int, ...]:
    """Null root of the letter's affine subsystem, extended into params."""
    k, n = params.k, params.n
    if letter == "A":
        body = (3,) * (k - 3) + (1,) * 9
    elif letter == "B":
        body = (3,) * (k - 6) + (2,) * 9
    else:
        body = (2,) * (k - 4) + (1,) * 8
    return body + (0,) * (n - len(body))


def _pair_window(letter: str, k: int) -> tuple[int, int]:
    """1-indexed coordinate window on which the null root is constant.

    Only differences e_i - e_j supported there pair to zero with the null
    root, which is what keeps q = 2 along the whole series.
    """
    if letter == "A":
        return k - 2, k + 6
    if letter == "B":
        return k - 5, k + 3
    return k - 3, k + 4


def affine_family(
    series: Series,
    sign: int,
    m: int,
    params: SystemParams,
    indices: Optional[tuple[int, int]] = None,
) -> LatticeVector:
    """sign * (base root) + m * (null root), in e-coordinates.

    ``indices`` supplies the pair (i, j), i > j, for the digit-0 series and
    must be omitted otherwise.  Every m >= 1 output is a positive root
    (degree 0 exactly when the base degree cancels m times the null-root
    degree).
    """
    if sign not in (1, -1):
        raise ContractError(f"sign must be +1 or -1, got {sign}")
    if m < 1:
        raise ContractError(f"m must be >= 1, got {m}")
    letter, digit = series.value[0], int(series.value[1])
    k, n = params.k, params.n
    min_k, min_tail = _SERIES_MIN_TAILS[letter]
    if k < min_k or n - k < min_tail:
        raise ContractError(
            f"series {series.value} needs k >= {min_k} and n - k >= {min_tail},"
            f" got {params}"
        )
    if digit == 0:
        if indices is None:
            raise ContractError(f"series {series.value} requires indices=(i, j)")
        lo, hi = _pair_window(letter, k)
        i, j = indices
        if not (lo <= j < i <= hi):
            raise ContractError(
                f"series {series.value} at k={k} needs {lo} <= j < i <= {hi},"
                f" got (i, j) = ({i}, {j})"
            )
        base = [0] * n
        base[i - 1] = 1
        base[j - 1] = -1
    else:
        if indices is not None:
            raise ContractError(
                f"series {series.value} does not take indices"
            )
        if digit == 1:
            body = (1,) * k
        elif digit == 2:
            body = (2,) * (k - 3) + (1,) * 6
        elif letter == "A":
            body = (3,) * (k - 3) + (2,) + (1,) * 7
        else:  # B3
            body = (3,) * (k - 5) + (2,) * 7 + (1,)
        base = list(body) + [0] * (n - len(body))
    null = _embedded_null_root(letter, params)
    entries = tuple(sign * b + m * z for b, z in zip(base, null))
    return LatticeVector(params, entries)


# ---------------------------------------------------------------------------
# Fundamental weights


def definiteness_margin(params: SystemParams) -> int:
    """k^2 - n(k-2): positive for finite type, zero affine, negative indefinite.

    Invariant under the duality k <-> n-k.
    """
    return params.k * params.k - params.n * (params.k - 2)


def is_finite_type(params: SystemParams) -> bool:
    return definiteness_margin(params) > 0


@dataclass(frozen=True, slots=True)
class WeightVector:
    """A fundamental weight in both coordinate systems.

    ``coords`` are e-basis rationals; ``root_coeffs`` expresses the same
    vector over the simple-root basis (branch root first, then the chain),
    so root_coeffs is the matching column of the inverse Cartan matrix.
    """

    params: SystemParams
    coords: tuple[Fraction, ...]
    root_coeffs: tuple[Fraction, ...]

    def plain_str(self) -> str:
        """Render like 1/3(-1,2,2,2,2,2): shared denominator up front."""
        lcm = 1
        for c in self.coords:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        body = ",".join(str(c.numerator * (lcm // c.denominator)) for c in self.coords)
        prefix = "" if lcm == 1 else f"1/{lcm}"
        return f"{prefix}({body})"

    def as_json_dict(self) -> dict:
        return {
            "coords": [_fraction_str(c) for c in self.coords],
            "root_coeffs": [_fraction_str(c) for c in self.root_coeffs],
        }


def _fraction_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _invert_exact(matrix: list[list[Fraction]]) -> Optional[list[list[Fraction]]]:
    """Gauss-Jordan inverse over Fractions; None when singular."""
    n = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def fundamental_weights(params: SystemParams) -> tuple[WeightVector, ...]:
    """Dual basis to the simple roots, branch root's weight first.

    Exact rationals; only defined when the symmetric bilinear form is
    positive definite (finite type), where the Cartan matrix is invertible.
    """
    margin = definiteness_margin(params)
    if margin < 0:
        raise ContractError(
            f"{params} is of indefinite type; fundamental weights are computed"
            " for finite types only"
        )
    if margin == 0:
        raise ContractError(
            f"{params} is of affine type: the Cartan matrix is singular"
        )
    cartan = cartan_matrix(params)
    inv = _invert_exact(
        [[Fraction(c) for c in row] for row in cartan.entries]
    )
    if inv is None:  # margin > 0 guarantees invertibility
        raise ContractError(f"Cartan matrix of {params} is singular")
    basis = basis_matrix(params)
    n = params.n
    weights = []
    for col in range(n):
        coeffs = tuple(inv[row][col] for row in range(n))
        coords = tuple(
            sum(Fraction(basis[i][j]) * coeffs[j] for j in range(n))
            for i in range(n)
        )
        weights.append(WeightVector(params, coords, coeffs))
    return tuple(weights)


def _distinct_permutations(entries: tuple[int, ...]):
    seen = set()
    for perm in itertools.permutations(entries):
        if perm not in seen:
            seen.add(perm)
            yield perm


def sum_of_positive_roots(params: SystemParams) -> LatticeVector:
    """Entrywise sum over every positive root of a finite-type system.

    Equals twice the sum of the fundamental weights.
    """
    if not is_finite_type(params):
        raise ContractError(
            f"{params} is not of finite type; the positive-root sum diverges"
        )
    from .enumeration import OrbitKind, enumerate_orbits

    n = params.n
    total = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            # e_j - e_i with j > i (1-indexed: later +1): all degree-0 positives
            total[j] += 1
            total[i] -= 1
    d = 1
    while True:
        real_orbits = [
            oc
            for oc in enumerate_orbits(params, d)
            if oc.kind is OrbitKind.REAL
        ]
        if not real_orbits:
            break
        for oc in real_orbits:
            for perm in _distinct_permutations(oc.representative.x):
                for i, c in enumerate(perm):
                    total[i] += c
        d += 1
    return LatticeVector(params, tuple(total))


# ---------------------------------------------------------------------------
# Degree-vector form of J(3,8) elements


@dataclass(frozen=True, slots=True)
class ManinVector:
    """(a, b1..b8): the degree then the eight coordinates.

    This is the coordinate form an element of J(3,8) takes after one
    k-growing extension into J(4,9), matching the classical hyperbolic
    basis for the E8 lattice.  Output only; no arithmetic is done here.
    """

    a: int
    b: tuple[int, ...]

    def as_json_dict(self) -> dict:
        return {"a": self.a, "b": list(self.b)}


def to_manin(v: LatticeVector) -> ManinVector:
    """Degree-vector form; defined on J(3,8) elements only."""
    if v.params != SystemParams(3, 8):
        raise ContractError(f"to_manin is defined on J(3,8), got {v.params}")
    return ManinVector(degree(v), v.x)
