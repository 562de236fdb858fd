"""Exact field arithmetic: prime fields F_p and cyclotomic fields Q(zeta_M).

Every field carries a designated primitive N-th root of unity.  Algorithms
in the rest of the package work on *raw* values (``int`` residues for F_p,
tuples of ``Fraction`` for Q(zeta_M)) through the field's methods; the
:class:`Scalar` wrapper is the user-facing, operator-overloaded value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class FieldError(ValueError):
    """Bad field configuration or illegal arithmetic."""


class CompositeModulusError(FieldError):
    pass


class RootOrderError(FieldError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise FieldError(f"no primitive root mod {p}")


def least_prime_with_root(N: int, above: int = 2) -> int:
    """Least prime p >= above with N | p - 1."""
    p = max(above, 2)
    while True:
        if is_prime(p) and (p - 1) % N == 0:
            return p
        p += 1


class Field:
    """Common interface.  Subclasses define the raw representation."""

    kind: str
    characteristic: int
    root_order: int

    def scalar(self, raw) -> "Scalar":
        return Scalar(self, raw)

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def zeta(self) -> "Scalar":
        return Scalar(self, self.root(1))

    def root(self, e: int):
        return self._roots[e % self.root_order]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def root_log(self, a) -> int | None:
        """Exponent e with a = zeta^e, or None if a is not an N-th root of 1."""
        return self._root_index.get(a)

    def _init_roots(self, zeta):
        roots = [self.one]
        for _ in range(self.root_order - 1):
            roots.append(self.mul(roots[-1], zeta))
        self._roots = tuple(roots)
        self._root_index = {r: e for e, r in enumerate(roots)}
        # exact order check of the designated root
        if self.mul(roots[-1], zeta) != self.one:
            raise FieldError("designated root fails zeta^N = 1")
        for d in divisors(self.root_order)[:-1]:
            if roots[d] == self.one:
                raise FieldError(f"designated root has order dividing {d}")


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int, root_order: int = 1):
        if not is_prime(p):
            raise CompositeModulusError(f"{p} is not prime")
        if root_order < 1 or (p - 1) % root_order:
            raise RootOrderError(f"root order {root_order} does not divide p - 1 = {p - 1}")
        self.p = p
        self.characteristic = p
        self.root_order = root_order
        self.zero, self.one = 0, 1
        self.primitive_root = least_primitive_root(p)
        self._init_roots(pow(self.primitive_root, (p - 1) // root_order, p))

    def __repr__(self):
        return f"PrimeField({self.p}, N={self.root_order})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and (self.p, self.root_order) == (other.p, other.root_order)

    def __hash__(self):
        return hash(("prime", self.p, self.root_order))

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError("mixed fields")
            return value.raw
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def canon(self, a):
        return a % self.p

    def to_json(self, a):
        return int(a)

    def from_json(self, v):
        return self.coerce(v)

    def spec(self) -> dict:
        return {"backend": "prime", "p": self.p}


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, lowest degree first."""
    num = [-1] + [0] * (M - 1) + [1]
    for d in divisors(M)[:-1]:
        num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
    assert not any(a), "inexact cyclotomic division"
    return q


class CyclotomicField(Field):
    """Q(zeta_M) = Q[x]/(Phi_M) with raw values as tuples of Fractions."""

    kind = "cyclotomic"

    def __init__(self, M: int, root_order: int = 1):
        if M < 1:
            raise FieldError("conductor must be positive")
        if root_order < 1 or M % root_order:
            raise RootOrderError(f"root order {root_order} does not divide conductor {M}")
        self.M = M
        self.characteristic = 0
        self.root_order = root_order
        self.phi = tuple(Fraction(c) for c in cyclotomic_polynomial(M))
        self._mul_memo: dict = {}
        self.degree = len(self.phi) - 1
        self.zero = tuple([Fraction(0)] * self.degree)
        self.one = self._reduce([Fraction(1)])
        self._init_roots(self._reduce([Fraction(0)] * (M // root_order) + [Fraction(1)]))

    def __repr__(self):
        return f"CyclotomicField({self.M}, N={self.root_order})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and (self.M, self.root_order) == (other.M, other.root_order)

    def __hash__(self):
        return hash(("cyclotomic", self.M, self.root_order))

    def _reduce(self, coeffs) -> tuple:
        c = [Fraction(x) for x in coeffs]
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead:
                for j in range(d + 1):
                    c[k - d + j] -= lead * self.phi[j]
        c = c[:d] + [Fraction(0)] * (d - len(c))
        return tuple(c)

    def canon(self, a):
        return self._reduce(a)

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError("mixed fields")
            return value.raw
        if isinstance(value, (list, tuple)):
            return self._reduce(value)
        return self._reduce([Fraction(value)])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        # coefficients are mostly roots of unity and small rationals, so
        # products repeat; the memo is a pure-function cache
        key = (a, b)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        prod = [Fraction(0)] * (2 * self.degree)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = self._reduce(prod)
        if len(self._mul_memo) > 200_000:
            self._mul_memo.clear()
        self._mul_memo[key] = out
        return out

    def is_zero(self, a) -> bool:
        return not any(a)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.M)
        # extended Euclid in Q[x]: find s with s*a = 1 mod phi
        r0, r1 = list(self.phi), _trim(list(a))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return self._reduce([x / c for x in s1])

    def to_json(self, a):
        return [str(x) for x in a]

    def from_json(self, v):
        if isinstance(v, list):
            return self._reduce([Fraction(x) for x in v])
        return self.coerce(Fraction(v) if isinstance(v, str) else v)

    def spec(self) -> dict:
        return {"backend": "cyclotomic", "M": self.M}


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / b[-1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


class Scalar:
    """Immutable field element."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError("mixed fields")
            return other.raw
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.raw, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.raw, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.raw))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.raw, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.raw, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.raw))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.raw))

    def __pow__(self, e: int):
        return Scalar(self.field, self.field.power(self.raw, e))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.raw == other.raw
        try:
            return self.raw == self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return not self.field.is_zero(self.raw)

    def __repr__(self):
        if self.field.kind == "prime":
            return f"{self.raw} (mod {self.field.p})"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.raw) if c]
        return " + ".join(terms) or "0"

    def multiplicative_order(self) -> int:
        if not self:
            raise ZeroDivisionError("0 has no multiplicative order")
        e = self.field.root_log(self.raw)
        if e is not None:
            n = self.field.root_order
            return n // gcd(n, e)
        if self.field.kind == "prime":
            p = self.field.p
            order = p - 1
            for q in prime_factors(p - 1):
                while order % q == 0 and pow(self.raw, order // q, p) == 1:
                    order //= q
            return order
        # a non-root-of-unity in characteristic 0 has infinite order
        x, k = self.raw, 1
        limit = 2 * self.field.M * self.field.degree + 2
        while k <= limit:
            if x == self.field.one:
                return k
            x = self.field.mul(x, self.raw)
            k += 1
        return 0


def field_create(spec: dict | str, required_root_order: int) -> Field:
    """Build a field from ``{"backend": "prime", "p": ...}`` or
    ``{"backend": "cyclotomic", "M": ...}``.

    ``{"backend": "prime", "min_prime": q}`` picks the least prime
    p >= q with N | p - 1.
    """
    if isinstance(spec, str):
        spec = {"backend": spec}
    backend = spec.get("backend", "prime")
    N = int(required_root_order)
    if backend == "prime":
        p = spec.get("p")
        if p is None:
            p = least_prime_with_root(N, int(spec.get("min_prime", 2)))
        return PrimeField(int(p), N)
    if backend == "cyclotomic":
        M = spec.get("M")
        return CyclotomicField(int(M) if M is not None else N, N)
    raise FieldError(f"unknown backend {backend!r}")


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldError("mixed fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def root_power(field: Field, e: int) -> Scalar:
    return Scalar(field, field.root(e))
