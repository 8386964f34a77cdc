"""Root lattice of the system J(k,n) in exact integer arithmetic.

The root system J(k,n) is the simply-laced system with T-shaped diagram
T(2, k, n-k-2); it specializes to A_n (k=1), D_n (k=2) and E_n (k=3).
Its root lattice embeds in Z^n as

    ZDelta = { x in Z^n : k divides x_1 + ... + x_n },

spanned by the simple roots

    alpha_i = e_{i+1} - e_i   (1 <= i <= n-1),
    beta    = e_1 + ... + e_k,

where beta is the branch node of the diagram.  The degree of x is the
coefficient of beta, which in coordinates is (x_1 + ... + x_n) / k.  The
quadratic form is

    q(x) = x_1^2 + ... + x_n^2 + (2 - k) * deg(x)^2,

an integer for every lattice element.  Everything in this module is exact:
integers for lattice data, `fractions.Fraction` for the rational Gram data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ContractError, NotInLatticeError

__all__ = [
    "SystemParams",
    "LatticeVector",
    "RootCoefficients",
    "GramMatrix",
    "degree",
    "q",
    "inner",
    "to_root_basis",
    "from_root_basis",
    "cartan_matrix",
    "gram_e_matrix",
    "basis_matrix",
    "beta_vector",
    "simple_root",
]


@dataclass(frozen=True, slots=True)
class SystemParams:
    """Parameters (k, n) of a system J(k,n).

    1 <= k <= n.  User-facing entry points require k < n; k = n occurs only
    for the rank-one cores produced by minimal-support stripping.
    """

    k: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise ContractError("k and n must be integers")
        if not 1 <= self.k <= self.n:
            raise ContractError(f"require 1 <= k <= n, got k={self.k}, n={self.n}")

    def __str__(self) -> str:
        return f"J({self.k},{self.n})"


@dataclass(frozen=True, slots=True)
class LatticeVector:
    """Element of ZDelta in the coordinates (x_1, ..., x_n).

    Construction checks lattice membership (k | sum of entries) eagerly;
    intermediate arithmetic that needs unchecked tuples works on raw tuples
    internally and never leaks them.
    """

    params: SystemParams
    x: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.x, tuple):
            object.__setattr__(self, "x", tuple(self.x))
        if len(self.x) != self.params.n:
            raise ContractError(
                f"expected {self.params.n} coordinates, got {len(self.x)}"
            )
        if any(not isinstance(c, int) for c in self.x):
            raise ContractError("coordinates must be integers")
        if sum(self.x) % self.params.k != 0:
            raise NotInLatticeError(
                f"coordinate sum {sum(self.x)} is not divisible by k={self.params.k}"
            )

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.params, tuple(-c for c in self.x))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _require_same_params(self, other)
        return LatticeVector(
            self.params, tuple(a + b for a, b in zip(self.x, other.x))
        )

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _require_same_params(self, other)
        return LatticeVector(
            self.params, tuple(a - b for a, b in zip(self.x, other.x))
        )

    def as_json_dict(self) -> dict:
        return {"k": self.params.k, "n": self.params.n, "x": list(self.x)}


@dataclass(frozen=True, slots=True)
class RootCoefficients:
    """The same lattice element written in the simple-root basis.

    `m_beta` is the coefficient of beta (the degree); `m` holds the
    coefficients of alpha_1, ..., alpha_{n-1}.  Every integer tuple is a
    lattice element in this basis, so there is nothing to validate beyond
    shape.
    """

    params: SystemParams
    m_beta: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.m, tuple):
            object.__setattr__(self, "m", tuple(self.m))
        if len(self.m) != self.params.n - 1:
            raise ContractError(
                f"expected {self.params.n - 1} alpha coefficients, got {len(self.m)}"
            )

    def as_json_dict(self) -> dict:
        return {
            "k": self.params.k,
            "n": self.params.n,
            "m_beta": self.m_beta,
            "m": list(self.m),
        }


@dataclass(frozen=True, slots=True)
class GramMatrix:
    """Gram matrix of the inner product on (beta, alpha_1, ..., alpha_{n-1}).

    This is the generalized Cartan matrix of J(k,n): symmetric, diagonal 2,
    off-diagonal entries 0 or -1.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ContractError("Gram matrix must be square")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ContractError("Gram matrix diagonal must be 2")
            for j in range(n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ContractError("Gram matrix must be symmetric")
                if i != j and self.entries[i][j] not in (0, -1):
                    raise ContractError("off-diagonal entries must be 0 or -1")

    @property
    def size(self) -> int:
        return len(self.entries)


def _require_same_params(u: LatticeVector, v: LatticeVector) -> None:
    if u.params != v.params:
        raise ContractError(f"mismatched system parameters {u.params} vs {v.params}")


def degree(v: LatticeVector) -> int:
    """Coefficient of beta: (x_1 + ... + x_n) / k, always exact."""
    return sum(v.x) // v.params.k


def q(v: LatticeVector) -> int:
    """The quadratic form q(x) = sum x_i^2 + (2 - k) deg(x)^2."""
    d = degree(v)
    return sum(c * c for c in v.x) + (2 - v.params.k) * d * d


def inner(u: LatticeVector, v: LatticeVector) -> int:
    """Polarization of q: B(u,v) = sum u_i v_i + (2 - k) deg(u) deg(v)."""
    _require_same_params(u, v)
    k = u.params.k
    du = sum(u.x) // k
    dv = sum(v.x) // k
    return sum(a * b for a, b in zip(u.x, v.x)) + (2 - k) * du * dv


def to_root_basis(v: LatticeVector) -> RootCoefficients:
    """Rewrite x in the simple-root basis.

    With d = deg(x), the coefficient of alpha_j is

        m_j = j*d - (x_1 + ... + x_j)    for j <= k-1,
        m_j = x_{j+1} + ... + x_n        for j >= k,

    and the coefficient of beta is d itself.
    """
    k, n = v.params.k, v.params.n
    d = degree(v)
    m = []
    prefix = 0
    total = sum(v.x)
    for j in range(1, n):
        prefix += v.x[j - 1]
        if j <= k - 1:
            m.append(j * d - prefix)
        else:
            m.append(total - prefix)
    return RootCoefficients(v.params, d, tuple(m))


def from_root_basis(c: RootCoefficients) -> LatticeVector:
    """Inverse of :func:`to_root_basis`.

    x_i picks up m_beta on the first k coordinates and the telescoping
    difference m_{i-1} - m_i from the chain of alphas.
    """
    k, n = c.params.k, c.params.n
    x = []
    for i in range(1, n + 1):
        coeff = c.m_beta if i <= k else 0
        if i >= 2:
            coeff += c.m[i - 2]
        if i <= n - 1:
            coeff -= c.m[i - 1]
        x.append(coeff)
    return LatticeVector(c.params, tuple(x))


def beta_vector(params: SystemParams) -> LatticeVector:
    """beta = e_1 + ... + e_k."""
    return LatticeVector(
        params, tuple(1 if i < params.k else 0 for i in range(params.n))
    )


def simple_root(params: SystemParams, i: int) -> LatticeVector:
    """alpha_i = e_{i+1} - e_i for 1 <= i <= n-1."""
    if not 1 <= i <= params.n - 1:
        raise ContractError(f"alpha index must be in 1..{params.n - 1}, got {i}")
    x = [0] * params.n
    x[i - 1] = -1
    x[i] = 1
    return LatticeVector(params, tuple(x))


def cartan_matrix(params: SystemParams) -> GramMatrix:
    """Gram matrix of `inner` on the ordered basis (beta, alpha_1, ...)."""
    basis = [beta_vector(params)] + [
        simple_root(params, i) for i in range(1, params.n)
    ]
    entries = tuple(
        tuple(inner(u, v) for v in basis) for u in basis
    )
    return GramMatrix(entries)


def gram_e_matrix(params: SystemParams) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the inner product in the basis e_1, ..., e_n.

    Equals I - ((k-2)/k^2) * J with J the all-ones matrix; exact rationals.
    """
    k, n = params.k, params.n
    off = -Fraction(k - 2, k * k)
    diag = 1 + off
    return tuple(
        tuple(diag if i == j else off for j in range(n)) for i in range(n)
    )


def basis_matrix(params: SystemParams) -> tuple[tuple[int, ...], ...]:
    """Matrix C whose columns are the e-coordinates of (beta, alpha_1, ...).

    C maps root-basis coefficient vectors to e-coordinates.
    """
    k, n = params.k, params.n
    cols: list[list[int]] = []
    cols.append([1 if i < k else 0 for i in range(n)])
    for j in range(1, n):
        col = [0] * n
        col[j - 1] = -1
        col[j] = 1
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def vector_from_entries(params: SystemParams, entries: Sequence[int]) -> LatticeVector:
    """Build a LatticeVector from raw entries, with full validation."""
    return LatticeVector(params, tuple(int(c) for c in entries))
