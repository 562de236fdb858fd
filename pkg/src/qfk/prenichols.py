"""The braided factors L and R of H.

Both factors are presented by a monomial basis with, for every basis
element, its N-degree, G-degree, the character by which G acts on it, and a
word in the degree-1 generators.  :class:`QLSAlgebra` builds this data for a
quantum linear space; :class:`GenericPreNichols` takes it from a structure
constant bundle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abgroup import AbelianGroup
from .datum import QLSDatum
from .scalars import Field, Scalar


class BundleError(ValueError):
    """Structure-constant bundle rejected; ``witness`` pins the failure."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class AssociativityError(BundleError):
    pass


class GenerationError(BundleError):
    pass


class GradingError(BundleError):
    pass


def gaussian_binomial(k: int, j: int, q: Scalar) -> Scalar:
    """q-binomial [k; j]_q by the q-Pascal rule [k;j] = [k-1;j-1] + q^j [k-1;j]."""
    if not 0 <= j <= k:
        raise ValueError(f"j = {j} out of range for k = {k}")
    F = q.field
    row = [F.one]
    for kk in range(1, k + 1):
        new = [F.one] * (kk + 1)
        for jj in range(1, kk):
            new[jj] = F.add(row[jj - 1], F.mul(F.power(q.raw, jj), row[jj]))
        row = new
    return F.scalar(row[j])


class BraidedAlgebra:
    """Common data of L and R.  Index 0 is the unit."""

    side: str
    field: Field
    group: AbelianGroup
    dim: int
    ngens: int
    gens: list[int]  # basis index of each degree-1 generator
    degree: list[int]
    gdeg: list[tuple]
    char: list[tuple]
    words: list[tuple[int, ...]]

    def labels(self) -> list:
        return list(range(self.dim))

    def mul(self, x: int, y: int) -> dict:
        raise NotImplementedError

    def lmul_gen(self, i: int, x: int) -> dict:
        return self.mul(self.gens[i], x)

    def split(self, x: int) -> tuple[int, dict]:
        """(j, tail) with basis x = generator_j * tail."""
        return self._split[x]

    def _build_splits(self):
        F = self.field
        self._split = [None] * self.dim
        for x in range(1, self.dim):
            w = self.words[x]
            tail = {0: F.one}
            for letter in reversed(w[1:]):
                tail = self.lmul_gen_elem(letter, tail)
            self._split[x] = (w[0], tail)

    def lmul_gen_elem(self, i: int, elem: dict) -> dict:
        F = self.field
        out: dict = {}
        for x, c in elem.items():
            for y, d in self.lmul_gen(i, x).items():
                t = F.add(out.get(y, F.zero), F.mul(c, d))
                if F.is_zero(t):
                    out.pop(y, None)
                else:
                    out[y] = t
        return out

    def mul_elem(self, a: dict, b: dict) -> dict:
        F = self.field
        out: dict = {}
        for x, c in a.items():
            for y, d in b.items():
                cd = F.mul(c, d)
                for z, e in self.mul(x, y).items():
                    t = F.add(out.get(z, F.zero), F.mul(cd, e))
                    if F.is_zero(t):
                        out.pop(z, None)
                    else:
                        out[z] = t
        return out

    def to_bundle(self) -> dict:
        F = self.field
        mult = []
        for x in range(self.dim):
            for y in range(self.dim):
                for z, c in sorted(self.mul(x, y).items()):
                    mult.append([x, y, z, F.to_json(c)])
        return {
            "kind": "prenichols",
            "side": self.side,
            "field": F.spec(),
            "root_order": F.root_order,
            "group": {"moduli": list(self.group.moduli)},
            "dim": self.dim,
            "degrees": list(self.degree),
            "generators": list(self.gens),
            "words": [list(w) for w in self.words],
            "gdeg": [list(g) for g in self.gdeg],
            "char": [list(c) for c in self.char],
            "mult": mult,
        }


class QLSAlgebra(BraidedAlgebra):
    """k[x_1]/(x_1^m_1) (x) ... (x) k[x_n]/(x_n^m_n) with x_j x_i = zeta^comm[j][i] x_i x_j (i < j)."""

    def __init__(self, side: str, field: Field, group: AbelianGroup, heights, comm, gdeg1, char1):
        self.side = side
        self.field = field
        self.group = group
        self.m = tuple(heights)
        self.ngens = n = len(self.m)
        self.comm = comm
        self.exps = [tuple(a) for a in itertools.product(*(range(m) for m in self.m))]
        self.index = {a: k for k, a in enumerate(self.exps)}
        self.dim = len(self.exps)
        self.gens = [self.index[tuple(int(i == j) for j in range(n))] for i in range(n)]
        G = group
        self.degree = [sum(a) for a in self.exps]
        self.gdeg, self.char, self.words = [], [], []
        for a in self.exps:
            g, ch = G.identity, G.identity
            for i, ai in enumerate(a):
                g = G.mul(g, G.pow(gdeg1[i], ai))
                ch = G.mul(ch, G.pow(char1[i], ai))
            self.gdeg.append(g)
            self.char.append(ch)
            self.words.append(tuple(i for i, ai in enumerate(a) for _ in range(ai)))
        self._mul_cache: dict = {}
        self._split = [None] + [
            (w[0], {self.index[tuple(ai - (j == w[0]) for j, ai in enumerate(a))]: field.one})
            for a, w in zip(self.exps[1:], self.words[1:])
        ]

    def labels(self):
        return self.exps

    def qls_multiply(self, a, b):
        """(coefficient raw, exponent tuple) or None when the product vanishes."""
        n = self.ngens
        c = [x + y for x, y in zip(a, b)]
        if any(ci >= mi for ci, mi in zip(c, self.m)):
            return None
        e = 0
        for j in range(n):
            if a[j]:
                for i in range(j):
                    if b[i]:
                        e += self.comm[j][i] * a[j] * b[i]
        return self.field.root(e), tuple(c)

    def mul(self, x: int, y: int) -> dict:
        key = (x, y)
        hit = self._mul_cache.get(key)
        if hit is None:
            r = self.qls_multiply(self.exps[x], self.exps[y])
            hit = {} if r is None else {self.index[r[1]]: r[0]}
            self._mul_cache[key] = hit
        return hit


def qls_multiply(A: QLSAlgebra, a, b):
    """Public form: returns (Scalar, exponent) or None for zero."""
    r = A.qls_multiply(tuple(a), tuple(b))
    if r is None:
        return None
    return A.field.scalar(r[0]), r[1]


def build_L(d: QLSDatum) -> QLSAlgebra:
    n = d.rank
    comm = [[d.chi_exp(i, d.f[j]) if i < j else 0 for i in range(n)] for j in range(n)]
    return QLSAlgebra("L", d.field, d.group, d.m, comm, d.f, d.chi)


def build_R(d: QLSDatum) -> QLSAlgebra:
    # w_i w_j = chi_i(g_j) w_j w_i, i.e. w_j w_i = chi_j(f_i) w_i w_j for i < j
    n = d.rank
    comm = [[d.chi_exp(j, d.f[i]) if i < j else 0 for i in range(n)] for j in range(n)]
    return QLSAlgebra("R", d.field, d.group, d.m, comm, d.g, d.chi)


@dataclass
class GenericPreNichols(BraidedAlgebra):
    side: str
    field: Field
    group: AbelianGroup
    dim: int
    degree: list
    gens: list
    words: list
    gdeg: list
    char: list
    table: dict  # (x, y) -> {z: raw}

    def __post_init__(self):
        self.ngens = len(self.gens)
        self.words = [tuple(w) for w in self.words]
        self.gdeg = [tuple(g) for g in self.gdeg]
        self.char = [tuple(c) for c in self.char]

    def mul(self, x: int, y: int) -> dict:
        return self.table.get((x, y), {})


def bundle_to_algebra(bundle: dict, field: Field | None = None) -> GenericPreNichols:
    from .scalars import field_create

    if field is None:
        field = field_create(bundle["field"], bundle.get("root_order", 1))
    G = AbelianGroup(tuple(bundle["group"]["moduli"]))
    table: dict = {}
    for x, y, z, v in bundle["mult"]:
        raw = field.from_json(v)
        if not field.is_zero(raw):
            table.setdefault((x, y), {})[z] = raw
    return GenericPreNichols(
        side=bundle.get("side", "L"),
        field=field,
        group=G,
        dim=int(bundle["dim"]),
        degree=list(bundle["degrees"]),
        gens=list(bundle["generators"]),
        words=bundle["words"],
        gdeg=bundle["gdeg"],
        char=bundle["char"],
        table=table,
    )


def import_prenichols(bundle: dict, field: Field | None = None) -> GenericPreNichols:
    """Validate a structure-constant bundle and return a usable algebra."""
    A = bundle_to_algebra(bundle, field)
    F, G, n = A.field, A.group, A.dim

    if n < 1 or A.degree[0] != 0 or sum(1 for d in A.degree if d == 0) != 1:
        raise GradingError("degree-0 component must be one-dimensional and spanned by basis 0", witness=("degree0",))
    for x in range(n):
        for u, label in ((A.mul(0, x), "left"), (A.mul(x, 0), "right")):
            if u != {x: F.one}:
                raise GradingError(f"basis 0 is not a {label} unit", witness=(0, x))
    if any(A.degree[k] != 1 for k in A.gens):
        raise GradingError("generators must have degree 1", witness=tuple(A.gens))

    for x in range(n):
        for y in range(n):
            for z in A.mul(x, y):
                if A.degree[z] != A.degree[x] + A.degree[y]:
                    raise GradingError("N-grading violated", witness=(x, y, z))
                if A.gdeg[z] != G.mul(A.gdeg[x], A.gdeg[y]) or A.char[z] != G.mul(A.char[x], A.char[y]):
                    raise GradingError("G-grading or G-action violated", witness=(x, y, z))

    for x in range(n):
        for y in range(n):
            xy = A.mul(x, y)
            for z in range(n):
                left = A.mul_elem(xy, {z: F.one})
                right = A.mul_elem({x: F.one}, A.mul(y, z))
                if left != right:
                    raise AssociativityError("structure constants are not associative", witness=(x, y, z))

    # degree-1 generation: every word evaluates to its basis element and
    # products of generators span each graded piece
    from .linalg import Echelon

    span = Echelon(F)
    frontier = [{0: F.one}]
    span.insert(frontier[0])
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(A.ngens):
                u = A.lmul_gen_elem(i, v)
                if span.insert(u):
                    nxt.append(u)
        frontier = nxt
    if span.dim != n:
        by_degree = sorted(set(A.degree))
        missing = next(
            (d for d in by_degree if sum(1 for p in span.pivots() if A.degree[p] == d) < A.degree.count(d)),
            None,
        )
        raise GenerationError(f"not generated in degree 1 (degree {missing} not spanned)", witness=("degree", missing))
    for x in range(1, n):
        w = A.words[x]
        e = {0: F.one}
        for letter in reversed(w):
            e = A.lmul_gen_elem(letter, e)
        if e != {x: F.one}:
            raise GenerationError("basis word does not evaluate to its basis element", witness=(x, list(w)))
    A._build_splits()
    return A
