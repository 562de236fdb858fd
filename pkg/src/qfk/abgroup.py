"""Finite abelian groups given by a list of cyclic moduli, and their duals.

Group elements and characters are plain tuples of exponents.  Character
values are roots of unity, so they are tracked as exponents of the field's
designated root ``zeta_N``; :meth:`AbelianGroup.char_exponent` returns that
exponent and :func:`char_eval` turns it into a scalar.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm, prod

from .scalars import Field, Scalar


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    moduli: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 1 for m in self.moduli):
            raise GroupError("moduli must be positive")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def exponent(self) -> int:
        return lcm(*self.moduli) if self.moduli else 1

    def elem(self, exps) -> tuple[int, ...]:
        exps = tuple(exps)
        if len(exps) != self.rank:
            raise GroupError(f"expected {self.rank} exponents, got {len(exps)}")
        return tuple(e % m for e, m in zip(exps, self.moduli))

    character = elem

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def generators(self) -> list[tuple[int, ...]]:
        return [tuple(int(i == j) % m for i, m in enumerate(self.moduli)) for j in range(self.rank)]

    def mul(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def inv(self, x):
        return tuple(-a % m for a, m in zip(x, self.moduli))

    def pow(self, x, k: int):
        return tuple(a * k % m for a, m in zip(x, self.moduli))

    def elements(self) -> list[tuple[int, ...]]:
        return [tuple(e) for e in itertools.product(*(range(m) for m in self.moduli))]

    def index(self, x) -> int:
        i = 0
        for a, m in zip(x, self.moduli):
            i = i * m + a
        return i

    def char_exponent(self, chi, g, N: int) -> int:
        """Exponent e with chi(g) = zeta_N^e; requires exp(G) | N."""
        if N % self.exponent:
            raise GroupError(f"root order {N} is not a multiple of exp(G) = {self.exponent}")
        return sum((N // m) * a * b for a, b, m in zip(chi, g, self.moduli)) % N


def group_ops(G: AbelianGroup, x, y=None, op: str = "mul"):
    if op == "mul":
        return G.mul(G.elem(x), G.elem(y))
    if op == "inv":
        return G.inv(G.elem(x))
    raise ValueError(f"unknown op {op!r}")


def char_eval(G: AbelianGroup, chi, g, field: Field) -> Scalar:
    N = field.root_order
    return field.scalar(field.root(G.char_exponent(G.elem(chi), G.elem(g), N)))


def enumerate_dual(G: AbelianGroup) -> list[tuple[int, ...]]:
    # same shape as G; lexicographic exponent vectors
    return G.elements()


@dataclass(frozen=True)
class ProductWeight:
    """Character of dual(G) x G: (chi, g) -> chi(g0) * mu(g)."""

    g0: tuple[int, ...]
    mu: tuple[int, ...]

    def exponent(self, G: AbelianGroup, chi, g, N: int) -> int:
        return (G.char_exponent(chi, self.g0, N) + G.char_exponent(self.mu, g, N)) % N

    def label(self) -> str:
        return f"g0={list(self.g0)},mu={list(self.mu)}"


def enumerate_product_weights(G: AbelianGroup) -> list[ProductWeight]:
    return [ProductWeight(g0, mu) for g0 in G.elements() for mu in G.elements()]
