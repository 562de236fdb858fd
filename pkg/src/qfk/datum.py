"""Input data for the Hopf algebra H: gradings, characters, pairing constants
and nilpotency heights of a diagonal quantum linear space, with validation
of the symmetry and height conditions and a few built-in presets."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from .abgroup import AbelianGroup
from .scalars import Field, field_create, least_prime_with_root


class DatumError(ValueError):
    pass


class CartanError(DatumError):
    pass


@dataclass(frozen=True)
class QLSDatum:
    group: AbelianGroup
    field: Field
    f: tuple[tuple[int, ...], ...]
    g: tuple[tuple[int, ...], ...]
    chi: tuple[tuple[int, ...], ...]
    c: tuple  # raw field values
    m: tuple[int, ...]
    e: tuple[int, ...] = ()
    name: str = ""

    def __post_init__(self):
        G = self.group
        n = len(self.f)
        for key in ("g", "chi", "c", "m"):
            if len(getattr(self, key)) != n:
                raise DatumError(f"{key} has length {len(getattr(self, key))}, expected rank {n}")
        object.__setattr__(self, "f", tuple(G.elem(x) for x in self.f))
        object.__setattr__(self, "g", tuple(G.elem(x) for x in self.g))
        object.__setattr__(self, "chi", tuple(G.elem(x) for x in self.chi))
        object.__setattr__(self, "c", tuple(self.field.coerce(x) for x in self.c))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        e = tuple(int(x) for x in self.e) if self.e else (0,) * n
        if len(e) != n:
            raise DatumError(f"e has length {len(e)}, expected rank {n}")
        object.__setattr__(self, "e", e)

    @property
    def rank(self) -> int:
        return len(self.f)

    @property
    def N(self) -> int:
        return self.field.root_order

    def chi_exp(self, i: int, x) -> int:
        """Exponent of chi_i(x) as a power of zeta_N."""
        return self.group.char_exponent(self.chi[i], x, self.N)

    def q_exp(self, i: int) -> int:
        return self.chi_exp(i, self.f[i])

    def q_order(self, i: int) -> int:
        N = self.N
        return N // gcd(N, self.q_exp(i))

    @property
    def dim_L(self) -> int:
        out = 1
        for m in self.m:
            out *= m
        return out

    dim_R = dim_L

    @property
    def dim_H(self) -> int:
        return self.dim_L * self.group.order * self.dim_R

    def describe(self) -> dict:
        F = self.field
        return {
            "name": self.name,
            "field": F.spec(),
            "group": {"moduli": list(self.group.moduli)},
            "rank": self.rank,
            "f": [list(x) for x in self.f],
            "g": [list(x) for x in self.g],
            "chi": [list(x) for x in self.chi],
            "c": [F.to_json(x) for x in self.c],
            "m": list(self.m),
            "e": list(self.e),
        }


@dataclass
class ValidationReport:
    violations: list[dict] = dc_field(default_factory=list)
    flags: list[dict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, **where):
        self.violations.append({"code": code, "message": message, **where})

    def flag(self, code: str, message: str, **where):
        self.flags.append({"code": code, "message": message, **where})

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": self.violations, "flags": self.flags}


def validate(d: QLSDatum) -> ValidationReport:
    rep = ValidationReport()
    G, F, n, N = d.group, d.field, d.rank, d.N
    char = F.characteristic
    if char and G.order % char == 0:
        rep.add("char_divides_order", f"char k = {char} divides |G| = {G.order}")
    if N % G.exponent:
        rep.add("missing_root", f"field root order {N} is not a multiple of exp(G) = {G.exponent}")
        return rep

    for i in range(n):
        for j in range(n):
            s = (d.chi_exp(i, d.f[j]) + d.chi_exp(j, d.g[i])) % N
            if s:
                rep.add("symmetry", f"chi_{i + 1}(f_{j + 1}) chi_{j + 1}(g_{i + 1}) != 1", i=i + 1, j=j + 1)
    for i in range(n):
        for j in range(i + 1, n):
            s = (d.chi_exp(i, d.f[j]) + d.chi_exp(j, d.f[i])) % N
            if s:
                rep.add("pairwise", f"chi_{i + 1}(f_{j + 1}) chi_{j + 1}(f_{i + 1}) != 1", i=i + 1, j=j + 1)

    for i in range(n):
        q_ord, m, e = d.q_order(i), d.m[i], d.e[i]
        if e < 0:
            rep.add("height", f"e_{i + 1} must be non-negative", i=i + 1)
            continue
        if e > 0 and char == 0:
            rep.add(
                "angiono",
                f"pre-Nichols forbidden in characteristic 0 (e_{i + 1} = {e}): "
                "finite-dimensional pre-Nichols algebras are Nichols in char 0",
                i=i + 1,
            )
            continue
        if e == 0 and q_ord == 1:
            rep.add("height", f"chi_{i + 1}(f_{i + 1}) = 1 requires e_{i + 1} > 0", i=i + 1)
            continue
        expected = q_ord * (char**e if e else 1)
        if m != expected:
            rep.add("height", f"m_{i + 1} = {m} but expected {expected}", i=i + 1)
        if m < 2:
            rep.add("height", f"m_{i + 1} must be at least 2", i=i + 1)

    for i in range(n):
        if F.is_zero(d.c[i]):
            rep.flag("degenerate_pairing", f"c_{i + 1} = 0", i=i + 1)
        if d.f[i] == d.g[i]:
            rep.flag("commuting_straddle", f"f_{i + 1} = g_{i + 1}: w_{i + 1} v_{i + 1} = v_{i + 1} w_{i + 1}", i=i + 1)
    return rep


PRESETS = ("min-z4", "frobenius-sl2-l3", "prenichols-char3")


def preset(name: str, field: Field | dict | None = None) -> QLSDatum:
    if name == "min-z4":
        G = AbelianGroup((4,))
        F = _field(field, G, {"backend": "prime", "p": 13})
        return QLSDatum(G, F, f=[(1,)], g=[(3,)], chi=[(2,)], c=[1], m=[2], name=name)
    if name == "frobenius-sl2-l3":
        return datum_from_cartan(3, [[2]], field=field, name=name)
    if name == "prenichols-char3":
        G = AbelianGroup((2,))
        F = _field(field, G, {"backend": "prime", "p": 3})
        return QLSDatum(G, F, f=[(1,)], g=[(1,)], chi=[(1,)], c=[1], m=[6], e=[1], name=name)
    raise DatumError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")


def _field(field, G: AbelianGroup, default: dict) -> Field:
    if field is None:
        field = default
    if isinstance(field, dict):
        return field_create(field, G.exponent)
    if field.root_order % G.exponent:
        raise DatumError(f"field root order {field.root_order} not a multiple of exp(G) = {G.exponent}")
    return field


def datum_from_cartan(ell: int, cartan, q=2, field=None, c=None, name: str = "") -> QLSDatum:
    """Rank-n datum on G = (Z/2l)^n from a Cartan matrix of type A1^n.

    ``q`` is either an integer k (meaning q = zeta_{2l}^k) or a scalar that
    is a primitive l-th root of unity in the field.
    """
    n = len(cartan)
    if ell <= 1 or ell % 2 == 0:
        raise CartanError("l must be an odd integer > 1")
    if any(len(row) != n for row in cartan):
        raise CartanError("Cartan matrix must be square")
    if any(-3 in row for row in cartan) and ell % 3 == 0:
        raise CartanError("Cartan entry -3 requires 3 not dividing l")
    for i in range(n):
        for j in range(n):
            if cartan[i][j] != (2 if i == j else 0):
                raise CartanError(
                    "only Cartan type A1^n yields a quantum linear space; supply the "
                    "Nichols algebra as a structure-constant bundle (prenichols import) instead"
                )
    N = 2 * ell
    G = AbelianGroup((N,) * n)
    if field is None:
        field = {"backend": "prime", "p": least_prime_with_root(N)}
    F = _field(field, G, {})
    if isinstance(q, int):
        k = q % N
    else:
        # scalar root: its exponent with respect to zeta_{2l}
        e = F.root_log(F.coerce(q))
        if e is None or (e * N) % F.root_order:
            raise CartanError("q is not a 2l-th root of unity in the field")
        k = e * N // F.root_order
    if N // gcd(N, k) != ell:
        raise CartanError(f"q = zeta_{N}^{k} is not a primitive {ell}-th root of unity")
    d = [1] * n  # symmetrizer of A1^n
    gens = G.generators()
    chi = [tuple(k * d[i] * cartan[i][j] % N for j in range(n)) for i in range(n)]
    f = [G.inv(x) for x in gens]
    m = []
    for i in range(n):
        e2 = 2 * d[i] * k % N
        m.append(N // gcd(N, e2))
    return QLSDatum(G, F, f=f, g=gens, chi=chi, c=c or [1] * n, m=m, name=name or f"cartan-A1^{n}-l{ell}")


def with_field(d: QLSDatum, field: Field | dict) -> QLSDatum:
    """Same datum over another field; the constants c_i must be rational."""
    F = _field(field, d.group, {})
    c = []
    for x in d.c:
        v = d.field.to_json(x)
        if isinstance(v, list):
            if any(Fraction(t) for t in v[1:]):
                raise DatumError("cannot transport a non-rational constant to another field")
            v = Fraction(v[0])
        c.append(F.coerce(v))
    return QLSDatum(d.group, F, d.f, d.g, d.chi, c, d.m, d.e, d.name)
