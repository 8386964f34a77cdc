"""Weyl group action on the root lattice.

Generators:

* ``s_i`` (1 <= i <= n-1) swaps the coordinates x_i and x_{i+1}; together
  they give the symmetric-group action permuting entries, with the degree
  unchanged.
* ``s_beta`` is the reflection in beta.  In coordinates it adds
  r = x_{k+1} + ... + x_n - 2 deg(x) to each of the first k entries and
  shifts the degree by r.

``dec`` sorts the entries in non-increasing order; it is realized by the
s_i and is the canonical representative map for the permutation orbits.
Words are plain sequences of generators applied eagerly, first letter first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ContractError
from .lattice import LatticeVector

__all__ = [
    "S_BETA",
    "Letter",
    "WeylWord",
    "apply_s_i",
    "apply_s_beta",
    "dec",
    "apply_word",
    "parse_word",
    "format_word",
]

#: Token standing for the branch-node reflection in words ("b" on the CLI).
S_BETA = "b"

Letter = Union[int, str]


@dataclass(frozen=True, slots=True)
class WeylWord:
    """A finite sequence of generators, each S(i) as an int or ``S_BETA``."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for ell in self.letters:
            if ell == S_BETA:
                continue
            if not isinstance(ell, int) or ell < 1:
                raise ContractError(f"bad word letter {ell!r}")

    def __len__(self) -> int:
        return len(self.letters)


def apply_s_i(i: int, v: LatticeVector) -> LatticeVector:
    """Swap entries i and i+1 (1-indexed)."""
    if not 1 <= i <= v.params.n - 1:
        raise ContractError(
            f"reflection index must be in 1..{v.params.n - 1}, got {i}"
        )
    x = list(v.x)
    x[i - 1], x[i] = x[i], x[i - 1]
    return LatticeVector(v.params, tuple(x))


def apply_s_beta(v: LatticeVector) -> LatticeVector:
    """Add r = x_{k+1} + ... + x_n - 2 deg(x) to the first k entries."""
    k = v.params.k
    d = sum(v.x) // k
    r = sum(v.x[k:]) - 2 * d
    return LatticeVector(
        v.params, tuple(c + r for c in v.x[:k]) + v.x[k:]
    )


def dec(v: LatticeVector) -> LatticeVector:
    """Entries sorted in non-increasing order."""
    return LatticeVector(v.params, tuple(sorted(v.x, reverse=True)))


def apply_word(w: WeylWord, v: LatticeVector) -> LatticeVector:
    """Apply the generators of ``w`` in sequence, first letter first."""
    for ell in w.letters:
        if ell == S_BETA:
            v = apply_s_beta(v)
        else:
            v = apply_s_i(ell, v)
    return v


def parse_word(text: str) -> WeylWord:
    """Parse the CLI word syntax, e.g. ``"b,3,b,1"``."""
    letters: list[Letter] = []
    text = text.strip()
    if text:
        for token in text.split(","):
            token = token.strip()
            if token == S_BETA:
                letters.append(S_BETA)
            else:
                try:
                    idx = int(token)
                except ValueError:
                    raise ContractError(f"bad word token {token!r}") from None
                if idx < 1:
                    raise ContractError(f"bad word token {token!r}")
                letters.append(idx)
    return WeylWord(tuple(letters))


def format_word(w: WeylWord) -> str:
    return ",".join(str(ell) for ell in w.letters)


def word_from(letters: Iterable[Letter]) -> WeylWord:
    return WeylWord(tuple(letters))
