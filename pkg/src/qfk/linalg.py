"""Exact linear algebra over a :class:`~qfk.scalars.Field`.

Vectors are sparse dicts ``{position: raw}`` with no explicit zeros.
:class:`Echelon` keeps a reduced row echelon basis that grows one vector at
a time; pivots are always the smallest surviving position so that every
result is reproducible.
"""

from __future__ import annotations

from .scalars import Field


class SingularMatrixError(ArithmeticError):
    pass


def vec_axpy(F: Field, y: dict, a, x: dict) -> dict:
    """y += a*x in place."""
    if F.kind == "prime":
        p = F.p
        for k, v in x.items():
            t = (y.get(k, 0) + a * v) % p
            if t:
                y[k] = t
            else:
                y.pop(k, None)
        return y
    for k, v in x.items():
        t = F.add(y[k], F.mul(a, v)) if k in y else F.mul(a, v)
        if F.is_zero(t):
            y.pop(k, None)
        else:
            y[k] = t
    return y


def vec_scale(F: Field, a, x: dict) -> dict:
    if F.is_zero(a):
        return {}
    if F.kind == "prime":
        p = F.p
        return {k: a * v % p for k, v in x.items()}
    return {k: F.mul(a, v) for k, v in x.items()}


def vec_add(F: Field, x: dict, y: dict) -> dict:
    return vec_axpy(F, dict(x), F.one, y)


def vec_sub(F: Field, x: dict, y: dict) -> dict:
    return vec_axpy(F, dict(x), F.neg(F.one), y)


class Echelon:
    """Incrementally built subspace in reduced row echelon form."""

    def __init__(self, F: Field):
        self.F = F
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        F = self.F
        v = dict(v)
        rows = self.rows
        if F.kind == "prime":
            p = F.p
            for piv in [k for k in v if k in rows]:
                c = v.get(piv)
                if c:
                    a = p - c
                    for k, x in rows[piv].items():
                        t = (v.get(k, 0) + a * x) % p
                        if t:
                            v[k] = t
                        else:
                            del v[k]
            return v
        for piv in [k for k in v if k in rows]:
            c = v.get(piv)
            if c is not None:
                vec_axpy(F, v, F.neg(c), rows[piv])
        return v

    def insert(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        self._add_reduced(r)
        return True

    def insert_reduced(self, r: dict) -> bool:
        """Insert a vector already reduced against this basis."""
        if not r:
            return False
        self._add_reduced(r)
        return True

    def _add_reduced(self, r: dict):
        F = self.F
        piv = min(r)
        r = vec_scale(F, F.inv(r[piv]), r)
        for row in self.rows.values():
            c = row.get(piv)
            if c is not None:
                vec_axpy(F, row, F.neg(c), r)
        self.rows[piv] = r

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[dict]:
        return [self.rows[k] for k in sorted(self.rows)]

    def pivots(self) -> list[int]:
        return sorted(self.rows)


def span(F: Field, vectors) -> Echelon:
    E = Echelon(F)
    for v in vectors:
        E.insert(v)
    return E


def rank(F: Field, vectors) -> int:
    return span(F, vectors).dim


def nullspace(F: Field, rows, ncols: int | None = None, columns=None) -> list[dict]:
    """Basis of {x : <row, x> = 0 for every row}; x is indexed by ``columns``
    (default ``range(ncols)``)."""
    if columns is None:
        columns = range(ncols)
    columns = list(columns)
    E = span(F, rows)
    pivots = set(E.rows)
    out = []
    for free in columns:
        if free in pivots:
            continue
        x = {free: F.one}
        for piv, row in E.rows.items():
            c = row.get(free)
            if c is not None:
                x[piv] = F.neg(c)
        out.append(x)
    return out


def dense_to_sparse(F: Field, row) -> dict:
    return {k: v for k, v in enumerate(row) if not F.is_zero(v)}


def sparse_to_dense(F: Field, v: dict, n: int) -> list:
    out = [F.zero] * n
    for k, x in v.items():
        out[k] = x
    return out


def inverse(F: Field, mat: list[list]) -> list[list]:
    """Inverse of a dense square matrix (rows of raw values)."""
    n = len(mat)
    aug = []
    for i, row in enumerate(mat):
        if len(row) != n:
            raise ValueError("matrix is not square")
        v = dense_to_sparse(F, row)
        v[n + i] = F.one
        aug.append(v)
    E = span(F, aug)
    if any(p >= n for p in E.rows) or E.dim != n:
        raise SingularMatrixError("matrix is singular")
    inv = []
    for i in range(n):
        row = E.rows[i]
        inv.append([row.get(n + j, F.zero) for j in range(n)])
    return inv


def matmul(F: Field, A: list[list], B: list[list]) -> list[list]:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        Ai, Oi = A[i], out[i]
        for t in range(k):
            a = Ai[t]
            if F.is_zero(a):
                continue
            Bt = B[t]
            for j in range(m):
                b = Bt[j]
                if not F.is_zero(b):
                    Oi[j] = F.add(Oi[j], F.mul(a, b))
    return out


def identity(F: Field, n: int) -> list[list]:
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def mat_vec(F: Field, A: list[list], x: list) -> list:
    out = []
    for row in A:
        s = F.zero
        for a, b in zip(row, x):
            if not F.is_zero(a) and not F.is_zero(b):
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return out


def mat_equal(A, B) -> bool:
    return all(list(r) == list(s) for r, s in zip(A, B)) and len(A) == len(B)
