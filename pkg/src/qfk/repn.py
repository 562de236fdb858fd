"""Simple modules of H and D(H) by induction from a Borel subalgebra B.

For both algebras the ambient basis factors as (left factor) x B, so
M(lambda) = Lambda (x)_B k_B(lambda) has the left factor's basis, and a
generator y acts on a basis vector x_j by writing y x_j in the factored
basis and evaluating the B-part through lambda~.  These coordinates do not
depend on lambda and are computed once per algebra.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .abgroup import ProductWeight, enumerate_product_weights
from .dualdouble import DoubleAlgebra
from .hopf import HopfAlgebraH, _acc
from .linalg import Echelon, identity, matmul, nullspace


class FalsificationError(AssertionError):
    """A theorem-level assertion failed; carries the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# ---- ambient algebras -------------------------------------------------------

class HAmbient:
    """H with B = kG (x) R, A = L (x) kG, left factor L."""

    tag = "H"

    def __init__(self, H: HopfAlgebraH):
        self.H = H
        self.field = H.field
        self.group = G = H.group
        self.dim = H.dim
        names, gens, kinds, vals = [], [], [], []
        for j, g in enumerate(G.generators()):
            names.append(f"g{j + 1}")
            gens.append(H.grp(g))
            kinds.append("group")
            vals.append(g)
        for i in range(H.n):
            names.append(f"v{i + 1}")
            gens.append(H.v(i))
            kinds.append("nil")
            vals.append(None)
        for i in range(H.n):
            names.append(f"w{i + 1}")
            gens.append(H.w(i))
            kinds.append("nil")
            vals.append(None)
        self.names, self.gens, self.kinds, self.vals = names, gens, kinds, vals
        r, n = G.rank, H.n
        self.torus = list(range(r))
        self.v_idx = list(range(r, r + n))
        self.w_idx = list(range(r + n, r + 2 * n))
        self.g_idx = list(range(r))
        self.ghat_idx: list[int] = []
        self.left_aug = list(self.v_idx)
        self.A = self.g_idx + self.v_idx
        self.B = self.g_idx + self.w_idx
        e = G.identity
        self.mbasis = [{H.flat(a, e, 0): H.field.one} for a in range(H.dimL)]
        self.mlabels = [H.L.labels()[a] for a in range(H.dimL)]
        self._cols: dict = {}

    def weights(self) -> list:
        return self.group.elements()

    def weight_label(self, lam) -> str:
        return f"chi={list(lam)}"

    def gen_value(self, k: int, lam):
        """lambda~ (or mu~) on generator k."""
        F, G = self.field, self.group
        if self.kinds[k] == "nil":
            return F.zero
        return F.root(G.char_exponent(lam, self.vals[k], F.root_order))

    def grouplike_value(self, gl, lam):
        F, G = self.field, self.group
        return F.root(G.char_exponent(lam, gl, F.root_order))

    def multiply(self, x: dict, y: dict) -> dict:
        return self.H.multiply(x, y)

    @property
    def unit(self) -> dict:
        return self.H.unit

    def column(self, u: dict, j: int) -> dict:
        """u x_j in factored form: {i: [(coef, grouplike)]} keeping trivial B-augmentation."""
        H = self.H
        out: dict = {}
        for z, c in H.multiply(u, self.mbasis[j]).items():
            a, g, b = H.unflat(z)
            if b == 0:
                out.setdefault(a, []).append((c, g))
        return out


class DoubleAmbient:
    """D(H) with B = k(Ghat x G) L R*, A = L* R k(Ghat x G), left factor L* R."""

    tag = "double"

    def __init__(self, D: DoubleAlgebra):
        self.D = D
        self.H = D.H
        self.field = D.field
        self.group = G = D.group
        self.dim = D.dim
        Bd, Ad = D.borel("B"), D.borel("A")
        r = G.rank
        self.names = Bd.names + Ad.names[2 * r:]
        self.gens = Bd.generators + Ad.generators[2 * r:]
        self.kinds = Bd.kinds + Ad.kinds[2 * r:]
        self.vals = Bd.values + Ad.values[2 * r:]
        n = D.H.n
        nb = len(Bd.names)
        self.ghat_idx = list(range(r))
        self.g_idx = list(range(r, 2 * r))
        self.torus = list(range(2 * r))
        self.v_idx = list(range(2 * r, 2 * r + n))
        self.w_idx = list(range(nb, nb + n))
        self.B = list(range(nb))
        self.A = self.torus + list(range(nb, len(self.names)))
        self.left_aug = list(range(nb, len(self.names)))
        self.extra_dual_generators = [d for d in Bd.degrees[2 * r + n:] if d > 1]
        H = D.H
        self.P = D.pbw()
        e = G.identity
        self.mlab = [(a, b) for a in range(H.dimL) for b in range(H.dimR)]
        self.mindex = {m: k for k, m in enumerate(self.mlab)}
        self.mbasis = [self.P.elements[self.P.index[(a, b, e, e, 0, 0)]] for a, b in self.mlab]
        self.mlabels = [(H.L.labels()[a], H.R.labels()[b]) for a, b in self.mlab]
        self._cols: dict = {}

    def weights(self) -> list:
        return enumerate_product_weights(self.group)

    def weight_label(self, lam: ProductWeight) -> str:
        return lam.label()

    def gen_value(self, k: int, lam: ProductWeight):
        F, G = self.field, self.group
        N = F.root_order
        kind = self.kinds[k]
        if kind == "nil":
            return F.zero
        if kind == "ghat":
            return F.root(G.char_exponent(self.vals[k], lam.g0, N))
        return F.root(G.char_exponent(lam.mu, self.vals[k], N))

    def grouplike_value(self, gl, lam: ProductWeight):
        ch, g = gl
        F, G = self.field, self.group
        N = F.root_order
        return F.root((G.char_exponent(ch, lam.g0, N) + G.char_exponent(lam.mu, g, N)) % N)

    def multiply(self, x: dict, y: dict) -> dict:
        return self.D.multiply(x, y)

    @property
    def unit(self) -> dict:
        return self.D.unit

    def column(self, u: dict, j: int) -> dict:
        out: dict = {}
        labels = self.P.labels
        for k, c in self.P.coords(self.D.multiply(u, self.mbasis[j])).items():
            a, b, ch, g, a2, b2 = labels[k]
            if a2 == 0 and b2 == 0:
                out.setdefault(self.mindex[(a, b)], []).append((c, (ch, g)))
        return out


def ambient(alg) -> HAmbient | DoubleAmbient:
    if isinstance(alg, (HAmbient, DoubleAmbient)):
        return alg
    if isinstance(alg, DoubleAlgebra):
        return DoubleAmbient(alg)
    return HAmbient(alg)


def _gen_columns(amb, k: int) -> list[dict]:
    cols = amb._cols.get(k)
    if cols is None:
        cols = [amb.column(amb.gens[k], j) for j in range(len(amb.mbasis))]
        amb._cols[k] = cols
    return cols


def prepare(amb) -> None:
    """Fill the lambda-independent action tables (call before threading)."""
    for k in range(len(amb.gens)):
        _gen_columns(amb, k)


# ---- representations --------------------------------------------------------

@dataclass
class Representation:
    field: object
    dim: int
    names: list
    mats: list  # dense, mats[k][i][j] = coefficient of basis i in gen_k . basis j
    tag: str
    weight: object = None
    labels: list = dc_field(default_factory=list)

    def act(self, k: int, vec: dict) -> dict:
        F = self.field
        out: dict = {}
        M = self.mats[k]
        for j, c in vec.items():
            for i in range(self.dim):
                m = M[i][j]
                if not F.is_zero(m):
                    _acc(F, out, i, F.mul(m, c))
        return out

    def column(self, k: int, j: int) -> dict:
        F = self.field
        M = self.mats[k]
        return {i: M[i][j] for i in range(self.dim) if not F.is_zero(M[i][j])}


@dataclass
class InducedModule:
    rep: Representation
    cyclic: dict
    weight: object
    ambient: object


def _evaluate(amb, cols: list[dict], lam, d: int) -> list[list]:
    F = amb.field
    M = [[F.zero] * d for _ in range(d)]
    cache: dict = {}
    for j, col in enumerate(cols):
        for i, terms in col.items():
            s = F.zero
            for c, gl in terms:
                val = cache.get(gl)
                if val is None:
                    val = cache[gl] = amb.grouplike_value(gl, lam)
                s = F.add(s, F.mul(c, val))
            M[i][j] = s
    return M


def one_dim_module(alg, lam) -> Representation:
    """k_B(lambda): B-generators act by lambda~."""
    amb = ambient(alg)
    F = amb.field
    names = [amb.names[k] for k in amb.B]
    mats = [[[amb.gen_value(k, lam)]] for k in amb.B]
    return Representation(F, 1, names, mats, amb.tag + ":B", lam, ["1"])


def induce(alg, lam) -> InducedModule:
    amb = ambient(alg)
    d = len(amb.mbasis)
    mats = [_evaluate(amb, _gen_columns(amb, k), lam, d) for k in range(len(amb.gens))]
    rep = Representation(amb.field, d, list(amb.names), mats, amb.tag, lam, list(amb.mlabels))
    # the image of 1 is the basis vector of the unit of the left factor
    return InducedModule(rep, {0: amb.field.one}, lam, amb)


def action_of(alg, u: dict, lam) -> list[list]:
    """Matrix of an arbitrary ambient element on M(lambda)."""
    amb = ambient(alg)
    d = len(amb.mbasis)
    return _evaluate(amb, [amb.column(u, j) for j in range(d)], lam, d)


def _image_span(rep: Representation, gen_idx) -> Echelon:
    E = Echelon(rep.field)
    for k in gen_idx:
        for j in range(rep.dim):
            E.insert(rep.column(k, j))
    return E


def stable_core(rep: Representation, W: Echelon) -> Echelon:
    """Largest submodule contained in W (shrinking fixpoint)."""
    F = rep.field
    while W.dim:
        basis = W.basis()
        rows: dict = {}
        for k in range(len(rep.mats)):
            for j, b in enumerate(basis):
                for p, c in W.reduce(rep.act(k, b)).items():
                    rows.setdefault((k, p), {})[j] = c
        null = nullspace(F, list(rows.values()), len(basis))
        if len(null) == len(basis):
            return W
        Wn = Echelon(F)
        for x in null:
            v: dict = {}
            for j, c in x.items():
                for p, e in basis[j].items():
                    _acc(F, v, p, F.mul(c, e))
            Wn.insert(v)
        W = Wn
    return W


def maximal_submodule(M: InducedModule) -> Echelon:
    """I(lambda): the fixpoint started at (left augmentation) M."""
    rep = M.rep
    return stable_core(rep, _image_span(rep, M.ambient.left_aug))


def quotient(rep: Representation, sub: Echelon, tag: str | None = None) -> Representation:
    F = rep.field
    keep = [p for p in range(rep.dim) if p not in sub.rows]
    pos = {p: k for k, p in enumerate(keep)}
    d = len(keep)
    mats = []
    for k in range(len(rep.mats)):
        Q = [[F.zero] * d for _ in range(d)]
        for jj, j in enumerate(keep):
            for p, c in sub.reduce(rep.column(k, j)).items():
                Q[pos[p]][jj] = c
        mats.append(Q)
    labels = [rep.labels[p] for p in keep] if rep.labels else []
    return Representation(F, d, list(rep.names), mats, tag or rep.tag, rep.weight, labels)


def simple_quotient(alg, lam) -> tuple[Representation, InducedModule, Echelon]:
    amb = ambient(alg)
    M = induce(amb, lam)
    I = maximal_submodule(M)
    return quotient(M.rep, I), M, I


def verify_simple(alg, S: Representation) -> bool:
    amb = ambient(alg)
    if S.dim == 0:
        return False
    return stable_core(S, _image_span(S, amb.left_aug)).dim == 0


def distinguish(alg, mu, S: Representation) -> int:
    """dim k_A(mu) (x)_A S."""
    amb = ambient(alg)
    F = S.field
    E = Echelon(F)
    for k in amb.A:
        val = amb.gen_value(k, mu)
        for j in range(S.dim):
            v = S.column(k, j)
            if not F.is_zero(val):
                _acc(F, v, j, F.neg(val))
            E.insert(v)
    return S.dim - E.dim


def weight_spaces(alg, S: Representation) -> dict:
    """Weight -> basis (sparse vectors) of the simultaneous torus eigenspace."""
    amb = ambient(alg)
    F = S.field
    out: dict = {}
    total = 0
    for lam in amb.weights():
        rows = []
        for k in amb.torus:
            val = amb.gen_value(k, lam)
            for i in range(S.dim):
                r = {j: S.mats[k][i][j] for j in range(S.dim) if not F.is_zero(S.mats[k][i][j])}
                _acc(F, r, i, F.neg(val))
                rows.append(r)
        sp = nullspace(F, rows, S.dim)
        if sp:
            out[lam] = sp
            total += len(sp)
    if total != S.dim:
        raise FalsificationError(f"torus action is not diagonalizable (weights span {total} of {S.dim})")
    return out


def weight_decomposition(alg, S: Representation) -> dict:
    return {lam: len(b) for lam, b in weight_spaces(alg, S).items()}


def schur_dimension(alg, S: Representation) -> int:
    """dim of the commutant of the generator actions.

    Endomorphisms commute with the torus, so they preserve weight spaces;
    only weight-diagonal blocks are unknowns.
    """
    amb = ambient(alg)
    F = S.field
    spaces = weight_spaces(amb, S)
    cols = [v for lam in spaces for v in spaces[lam]]
    block = [k for k, lam in enumerate(spaces) for _ in spaces[lam]]
    d = S.dim
    P = [[F.zero] * d for _ in range(d)]
    for j, v in enumerate(cols):
        for i, c in v.items():
            P[i][j] = c
    from .linalg import inverse

    Pinv = inverse(F, P)
    mats = [matmul(F, Pinv, matmul(F, S.mats[k], P)) for k in range(len(S.mats)) if k not in amb.torus]
    unknowns = {(i, j): n for n, (i, j) in enumerate((i, j) for i in range(d) for j in range(d) if block[i] == block[j])}
    rows = []
    for M in mats:
        # (X M - M X)[i][j] = sum_k X[i][k] M[k][j] - M[i][k] X[k][j]
        for i in range(d):
            for j in range(d):
                r: dict = {}
                for k in range(d):
                    if (i, k) in unknowns and not F.is_zero(M[k][j]):
                        _acc(F, r, unknowns[(i, k)], M[k][j])
                    if (k, j) in unknowns and not F.is_zero(M[i][k]):
                        _acc(F, r, unknowns[(k, j)], F.neg(M[i][k]))
                if r:
                    rows.append(r)
    return len(nullspace(F, rows, len(unknowns)))


def check_relations(alg, S: Representation) -> list[str]:
    """Defining relations of H evaluated on the generator matrices."""
    amb = ambient(alg)
    H, F, G = amb.H, S.field, amb.group
    d = S.dim
    I = identity(F, d)
    mats = S.mats
    fails = []

    def mm(*Ms):
        out = I
        for M in Ms:
            out = matmul(F, out, M)
        return out

    def scal(a, M):
        return [[F.mul(a, x) for x in row] for row in M]

    def sub(A, B):
        return [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(A, B)]

    def grp(g):
        out = I
        for k, e in zip(amb.g_idx, g):
            for _ in range(e):
                out = matmul(F, out, mats[k])
        return out

    zero = [[F.zero] * d for _ in range(d)]
    for k, m in zip(amb.g_idx, G.moduli):
        if grp(tuple(m if kk == k else 0 for kk in amb.g_idx)) != I:
            fails.append(f"{S.names[k]}^{m} != 1")
    datum = H.datum
    qls = hasattr(H.L, "m") and hasattr(H.R, "m")
    for i, (vi, wi) in enumerate(zip(amb.v_idx, amb.w_idx)):
        chv = H.L.char[H.L.gens[i]]
        chw = H.R.char[H.R.gens[i]]
        for k, g in zip(amb.g_idx, G.generators()):
            if mm(mats[k], mats[vi]) != scal(H.chi(chv, g), mm(mats[vi], mats[k])):
                fails.append(f"g v_{i + 1} relation")
            if mm(mats[wi], mats[k]) != scal(H.chi(chw, g), mm(mats[k], mats[wi])):
                fails.append(f"w_{i + 1} g relation")
        for j, vj in enumerate(amb.v_idx):
            lhs = sub(mm(mats[wi], mats[vj]), mm(mats[vj], mats[wi]))
            coeff = H.straddle_scalar(i, j)
            rhs = scal(coeff, sub(grp(H.f[j]), grp(H.g[i]))) if not F.is_zero(coeff) else zero
            if lhs != rhs:
                fails.append(f"w_{i + 1} v_{j + 1} straddle relation")
        if qls:
            m = datum.m[i]
            if mm(*[mats[vi]] * m) != zero:
                fails.append(f"v_{i + 1}^{m} != 0")
            if mm(*[mats[wi]] * m) != zero:
                fails.append(f"w_{i + 1}^{m} != 0")
            for j in range(i + 1, H.n):
                vj, wj = amb.v_idx[j], amb.w_idx[j]
                if mm(mats[vj], mats[vi]) != scal(F.root(H.L.comm[j][i]), mm(mats[vi], mats[vj])):
                    fails.append(f"v_{j + 1} v_{i + 1} relation")
                if mm(mats[wj], mats[wi]) != scal(F.root(H.R.comm[j][i]), mm(mats[wi], mats[wj])):
                    fails.append(f"w_{j + 1} w_{i + 1} relation")
    for a, b in ((x, y) for x in amb.torus for y in amb.torus):
        if mm(mats[a], mats[b]) != mm(mats[b], mats[a]):
            fails.append("torus not commutative")
    return fails


def check_module_pairs(alg, lam) -> list:
    """rho(y) rho(z) = rho(yz) on M(lambda) for every generator pair."""
    amb = ambient(alg)
    M = induce(amb, lam).rep
    F = amb.field
    bad = []
    for a in range(len(amb.gens)):
        for b in range(len(amb.gens)):
            lhs = matmul(F, M.mats[a], M.mats[b])
            rhs = action_of(amb, amb.multiply(amb.gens[a], amb.gens[b]), lam)
            if lhs != rhs:
                bad.append((amb.names[a], amb.names[b]))
    return bad


def induce_by_closure(alg, lam, limit: int = 300) -> dict:
    """M(lambda) as Lambda / Lambda{z - lambda~(z)}; compares with :func:`induce`.

    Returns {"dim": quotient dimension, "agrees": bool}.
    """
    amb = ambient(alg)
    if amb.dim > limit:
        raise ValueError(f"closure cross-check limited to dim <= {limit} (got {amb.dim})")
    F = amb.field
    J = Echelon(F)
    frontier = []
    for k in amb.B:
        val = amb.gen_value(k, lam)
        z = dict(amb.gens[k])
        for x, c in amb.unit.items():
            _acc(F, z, x, F.neg(F.mul(val, c)))
        r = J.reduce(z)
        if r:
            J.insert_reduced(r)
            frontier.append(z)
    while frontier:
        nxt = []
        for v in frontier:
            for y in amb.gens:
                u = amb.multiply(y, v)
                r = J.reduce(u)
                if r:
                    J.insert_reduced(r)
                    nxt.append(u)
        frontier = nxt
    qdim = amb.dim - J.dim
    M = induce(amb, lam).rep
    agrees = qdim == M.dim
    if agrees:
        cls = [J.reduce(x) for x in amb.mbasis]
        E = Echelon(F)
        for c in cls:
            E.insert(c)
        agrees = E.dim == M.dim
        for k in range(len(amb.gens)):
            if not agrees:
                break
            for j, x in enumerate(amb.mbasis):
                lhs = J.reduce(amb.multiply(amb.gens[k], x))
                rhs: dict = {}
                for i, c in M.column(k, j).items():
                    for p, e in cls[i].items():
                        _acc(F, rhs, p, F.mul(c, e))
                if lhs != rhs:
                    agrees = False
                    break
    return {"dim": qdim, "agrees": agrees}


# ---- classification ---------------------------------------------------------

@dataclass
class SimpleRow:
    weight: object
    label: str
    dim_M: int
    dim_L: int
    certificate: bool
    distinguish: list
    weights: dict
    schur: int | None = None
    relations_ok: bool = True

    def as_dict(self, amb) -> dict:
        return {
            "lambda": self.label,
            "dim_M": self.dim_M,
            "dim_L": self.dim_L,
            "simple": self.certificate,
            "schur_dim": self.schur,
            "relations_ok": self.relations_ok,
            "weights": {amb.weight_label(w): m for w, m in self.weights.items()},
            "distinguish": self.distinguish,
        }


@dataclass
class SimplesTable:
    ambient: object
    rows: list
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def sum_squares(self) -> int:
        return sum(r.dim_L ** 2 for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "target": self.ambient.tag,
            "count": len(self.rows),
            "ok": self.ok,
            "failures": self.failures,
            "sum_dim_squared": self.sum_squares(),
            "rows": [r.as_dict(self.ambient) for r in self.rows],
        }


def _row(amb, lam, weights, schur: bool) -> SimpleRow:
    S, M, I = simple_quotient(amb, lam)
    cert = verify_simple(amb, S)
    dist = [distinguish(amb, mu, S) for mu in weights]
    wd = weight_decomposition(amb, S)
    rel = not check_relations(amb, S)
    sd = schur_dimension(amb, S) if schur else None
    return SimpleRow(lam, amb.weight_label(lam), M.rep.dim, S.dim, cert, dist, wd, sd, rel)


def resolve_threads(threads: int | None) -> int:
    if threads:
        return max(1, int(threads))
    env = os.environ.get("QFK_THREADS")
    return max(1, int(env)) if env else 1


def all_simples(alg, threads: int | None = None, schur: bool = True) -> SimplesTable:
    amb = ambient(alg)
    prepare(amb)
    weights = amb.weights()
    nthreads = resolve_threads(threads)
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as ex:
            rows = list(ex.map(lambda lam: _row(amb, lam, weights, schur), weights))
    else:
        rows = [_row(amb, lam, weights, schur) for lam in weights]
    failures = []
    expected = len(weights)
    dimM = len(amb.mbasis)
    for k, r in enumerate(rows):
        if not r.certificate:
            failures.append({"lambda": r.label, "reason": "simplicity certificate failed"})
        if r.dim_M != dimM:
            failures.append({"lambda": r.label, "reason": f"dim M = {r.dim_M}, expected {dimM}"})
        if not 1 <= r.dim_L <= r.dim_M:
            failures.append({"lambda": r.label, "reason": f"dim L = {r.dim_L} out of range"})
        for j, v in enumerate(r.distinguish):
            if (j == k and v < 1) or (j != k and v != 0):
                failures.append({"lambda": r.label, "reason": f"distinguish entry {j} = {v}"})
        if r.schur is not None and r.schur != 1:
            failures.append({"lambda": r.label, "reason": f"commutant has dimension {r.schur}"})
        if not r.relations_ok:
            failures.append({"lambda": r.label, "reason": "defining relations fail on the simple module"})
    if len(rows) != expected:
        failures.append({"reason": f"{len(rows)} rows, expected {expected}"})
    return SimplesTable(amb, rows, failures)


# ---- independent oracle ----------------------------------------------------

class OraclePrecondition(ValueError):
    pass


def trace_radical_oracle(alg) -> int:
    """dim of the radical of (x, y) -> tr(L_x L_y) = tr(L_{xy})."""
    amb = ambient(alg)
    F = amb.field
    n = amb.dim
    if F.characteristic and F.characteristic <= n:
        raise OraclePrecondition(
            f"trace-form criterion needs char k = 0 or char k > dim = {n} (char k = {F.characteristic})"
        )
    basis = [{x: F.one} for x in range(n)]
    prods = [[amb.multiply(basis[x], basis[y]) for y in range(n)] for x in range(n)]
    tr = [F.zero] * n
    for z in range(n):
        s = F.zero
        for w in range(n):
            c = prods[z][w].get(w)
            if c is not None:
                s = F.add(s, c)
        tr[z] = s
    E = Echelon(F)
    for x in range(n):
        row: dict = {}
        for y in range(n):
            s = F.zero
            for z, c in prods[x][y].items():
                if not F.is_zero(tr[z]):
                    s = F.add(s, F.mul(c, tr[z]))
            if not F.is_zero(s):
                row[y] = s
        E.insert(row)
    return n - E.dim
