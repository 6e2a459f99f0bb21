"""Exact arithmetic in GF(p^m) and the GF(q^2) -> GF(q^4) tower.

Elements are plain integers: the polynomial-basis coefficient vector
``(c_0, ..., c_{m-1})`` over GF(p) is packed as ``sum(c_i * p**i)``.  For
p = 2 this is the usual bit-packed representation.  :class:`Felt` wraps an
integer together with its field for operator-style use; the bulk code paths
work on raw integers and numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np
from sympy import factorint, isprime

_U64 = 2**64


class FieldError(ValueError):
    """Raised for invalid field parameters or undefined operations."""


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n)))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    ((p, e),) = f.items()
    return p, e


# -- GF(p)[x] helpers on ascending coefficient lists -------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


# -- field contexts -----------------------------------------------------------


@dataclass(frozen=True)
class FieldCtx:
    """GF(p^m) with a fixed monic modulus and a distinguished primitive element.

    ``modulus`` holds ascending coefficients ``(c_0, ..., c_m)`` with
    ``c_m == 1``; ``g`` is the packed integer of the primitive element.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    g: int
    order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", self.p**self.m)

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in reversed(self.modulus))
        return f"GF({self.p}^{self.m}; modulus=[{coeffs}]; g={self.g})"

    # packing

    @cached_property
    def _modint(self) -> int:
        return sum(c << i for i, c in enumerate(self.modulus))

    @cached_property
    def _tail(self) -> tuple[int, ...]:
        return self.modulus[:-1]

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def pack(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + int(c) % self.p
        return v

    def embed_prime(self, c: int) -> int:
        return c % self.p

    # arithmetic on packed integers

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.pack((x + y) for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.pack(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            m, mod = self.m, self._modint
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> m) & 1:
                    a ^= mod
            return r
        p, m, tail = self.p, self.m, self._tail
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i] % p
            if c:
                for k, t in enumerate(tail):
                    prod[i - m + k] -= c * t
        return self.pack(prod[:m])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self))
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element(self, v: int) -> Felt:
        if not 0 <= v < self.order:
            raise FieldError(f"{v} is not an element of {self}")
        return Felt(self, v)

    @property
    def zero(self) -> Felt:
        return Felt(self, 0)

    @property
    def one(self) -> Felt:
        return Felt(self, 1)

    @property
    def generator(self) -> Felt:
        return Felt(self, self.g)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for ell in prime_factors(n) if n > 1 else ():
            while n % ell == 0 and self.pow(a, n // ell) == 1:
                n //= ell
        return n

    def is_primitive(self, a: int) -> bool:
        n = self.order - 1
        if a == 0:
            return False
        return all(self.pow(a, n // ell) != 1 for ell in prime_factors(n)) if n > 1 else a == 1

    def is_irreducible(self) -> bool:
        """Rabin's test on the modulus: x^(p^m) = x and gcd(x^(p^(m/l)) - x, f) = 1."""
        p, m = self.p, self.m
        f = list(self.modulus)
        if m == 1:
            return True
        if any(_horner_prime(f, a, p) == 0 for a in range(min(p, 64))):
            return False
        x = p  # packed x
        frob = [x]
        for _ in range(m):
            frob.append(self.pow(frob[-1], p))
        if frob[m] != x:
            return False
        for ell in prime_factors(m):
            h = self.digits(self.sub(frob[m // ell], x))
            if len(_poly_gcd(f, h, p)) != 1:
                return False
        return True


def _horner_prime(coeffs: list[int], a: int, p: int) -> int:
    r = 0
    for c in reversed(coeffs):
        r = (r * a + c) % p
    return r


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldCtx:
    """Build GF(p^m) with the lexicographically smallest primitive modulus.

    Candidates ``x^m + c_{m-1} x^{m-1} + ... + c_0`` are scanned in
    lexicographic order of ``(c_{m-1}, ..., c_0)``.  The first irreducible one
    whose root is primitive is used and its root ``x`` becomes ``g``.
    """
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m >= _U64:
        raise FieldError(f"p^m = {p}^{m} does not fit in 64 bits")
    first_irreducible = None
    for tail in range(p**m):
        coeffs = []
        t = tail
        for _ in range(m):
            t, r = divmod(t, p)
            coeffs.append(r)
        if coeffs[0] == 0 and m > 1:
            continue
        ctx = FieldCtx(p, m, tuple(coeffs) + (1,), 0)
        if not ctx.is_irreducible():
            continue
        root = ctx.neg(coeffs[0]) if m == 1 else p
        if ctx.is_primitive(root):
            return FieldCtx(p, m, ctx.modulus, root)
        if first_irreducible is None:
            first_irreducible = ctx
    # unreachable for genuine fields (primitive polynomials exist in every degree)
    ctx = first_irreducible
    g = next(a for a in range(1, ctx.order) if ctx.is_primitive(a))
    return FieldCtx(p, m, ctx.modulus, g)


@dataclass(frozen=True)
class Felt:
    """One element of a :class:`FieldCtx`."""

    ctx: FieldCtx
    v: int

    def _other(self, b) -> int:
        if isinstance(b, Felt):
            if b.ctx != self.ctx:
                raise FieldError(f"mixed fields: {self.ctx} vs {b.ctx}")
            return b.v
        if isinstance(b, int):
            return self.ctx.embed_prime(b)
        return NotImplemented

    def __add__(self, b):
        return Felt(self.ctx, self.ctx.add(self.v, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return Felt(self.ctx, self.ctx.sub(self.v, self._other(b)))

    def __rsub__(self, b):
        return Felt(self.ctx, self.ctx.sub(self._other(b), self.v))

    def __neg__(self):
        return Felt(self.ctx, self.ctx.neg(self.v))

    def __mul__(self, b):
        return Felt(self.ctx, self.ctx.mul(self.v, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return Felt(self.ctx, self.ctx.div(self.v, self._other(b)))

    def __pow__(self, e: int):
        return Felt(self.ctx, self.ctx.pow(self.v, e))

    def inverse(self) -> Felt:
        return Felt(self.ctx, self.ctx.inv(self.v))

    def __bool__(self) -> bool:
        return self.v != 0

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.digits(self.v)

    def __repr__(self) -> str:
        return f"Felt({self.v} in GF({self.ctx.p}^{self.ctx.m}))"


def _is_power_of(s: int, p: int) -> int | None:
    k = 0
    while s > 1 and s % p == 0:
        s //= p
        k += 1
    return k if s == 1 and k > 0 else None


def frobenius(a: Felt, s: int) -> Felt:
    """Return ``a**s`` for s a positive power of the characteristic."""
    if _is_power_of(s, a.ctx.p) is None:
        raise FieldError(f"{s} is not a power of p = {a.ctx.p}")
    return a**s


def root_of_unity(ctx: FieldCtx, n: int) -> Felt:
    """The canonical primitive n-th root of unity ``g**((p^m - 1) / n)``."""
    if n < 1 or (ctx.order - 1) % n:
        raise FieldError(f"{n} does not divide {ctx.order - 1}")
    return ctx.generator ** ((ctx.order - 1) // n)


def minimal_polynomial(a: Felt, subfield_order: int) -> list[Felt]:
    """Minimal polynomial of ``a`` over GF(subfield_order), ascending coefficients.

    The coefficients stay in a's field; each is checked to be fixed by the
    subfield Frobenius.
    """
    ctx = a.ctx
    k = _is_power_of(subfield_order, ctx.p)
    if k is None or ctx.m % k:
        raise FieldError(f"GF({subfield_order}) is not a subfield of {ctx}")
    orbit = [a.v]
    x = ctx.pow(a.v, subfield_order)
    while x != a.v:
        orbit.append(x)
        x = ctx.pow(x, subfield_order)
    poly = [1]
    for r in orbit:
        nr = ctx.neg(r)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = ctx.add(nxt[i + 1], c)
            nxt[i] = ctx.add(nxt[i], ctx.mul(c, nr))
        poly = nxt
    for c in poly:
        if ctx.pow(c, subfield_order) != c:
            raise FieldError("minimal polynomial coefficient escaped the subfield")
    return [Felt(ctx, c) for c in poly]


# -- linear algebra mod p on small dense matrices ------------------------------


def inverse_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    a = np.concatenate([mat % p, np.eye(n, dtype=np.int64)], axis=1).astype(np.int64)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r, col] % p), None)
        if piv is None:
            raise FieldError("singular matrix mod p")
        a[[col, piv]] = a[[piv, col]]
        a[col] = a[col] * pow(int(a[col, col]), -1, p) % p
        for r in range(n):
            if r != col and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[col]) % p
    return a[:, n:]


def unpack_array(vals: np.ndarray, p: int, m: int) -> np.ndarray:
    """Packed integers -> digit array of shape ``vals.shape + (m,)``."""
    vals = np.asarray(vals, dtype=np.int64)
    if p == 2:
        return (vals[..., None] >> np.arange(m)) & 1
    return (vals[..., None] // (p ** np.arange(m, dtype=np.int64))) % p


def pack_array(digits: np.ndarray, p: int) -> np.ndarray:
    m = digits.shape[-1]
    if p == 2:
        return (digits.astype(np.int64) << np.arange(m)).sum(axis=-1)
    return (digits.astype(np.int64) * (p ** np.arange(m, dtype=np.int64))).sum(axis=-1)


# -- the GF(q^2) subset GF(q^4) tower ----------------------------------------------


class Tower:
    """GF(q^2) embedded in GF(q^4), with the basis {1, beta} of the big field.

    The embedding sends the generator ``x`` of GF(q^2) to ``h``, the root of
    the GF(q^2) modulus of the form ``G**((q^2+1)*u)`` with the smallest unit
    ``u``.  ``beta`` is the primitive element of GF(q^4).
    """

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None:
            raise FieldError(f"q = {q} is not a prime power")
        p, e = pe
        self.q = q
        self.small = make_field(p, 2 * e)
        self.big = make_field(p, 4 * e)
        big, small = self.big, self.small
        step = q * q + 1
        n2 = q * q - 1
        mod_small = small.modulus
        h = None
        for u in range(1, n2 + 1):
            if gcd(u, n2) != 1:
                continue
            cand = big.pow(big.g, step * u)
            acc = 0
            for c in reversed(mod_small):
                acc = big.add(big.mul(acc, cand), c)
            if acc == 0:
                h = cand
                break
        if h is None:
            raise FieldError(f"no embedding of {small} into {big}")
        self.h = h
        self.beta = big.g
        self._hpow = [big.pow(h, i) for i in range(small.m)]
        basis = self._hpow + [big.mul(x, self.beta) for x in self._hpow]
        cols = np.array([big.digits(b) for b in basis], dtype=np.int64).T
        self._to_coords = inverse_mod_p(cols, p)

    def embed(self, a: int) -> int:
        big = self.big
        acc = 0
        for c, hp in zip(self.small.digits(a), self._hpow):
            if c:
                acc = big.add(acc, big.mul(c, hp))
        return acc

    def split(self, y: int) -> tuple[int, int]:
        """Coordinates ``(a, b)`` in GF(q^2) with ``y = a + b * beta``."""
        p, m = self.small.p, self.small.m
        coords = self._to_coords @ np.array(self.big.digits(y), dtype=np.int64) % p
        return self.small.pack(coords[:m]), self.small.pack(coords[m:])

    def project(self, y: int) -> int:
        a, b = self.split(y)
        if b:
            raise FieldError(f"{y} does not lie in the embedded {self.small}")
        return a

    def split_digits(self, digits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized :meth:`split` on a ``(N, 4e)`` digit array."""
        p, m = self.small.p, self.small.m
        coords = digits @ self._to_coords.T % p
        return pack_array(coords[:, :m], p), pack_array(coords[:, m:], p)

    def mul_matrix(self, c: int) -> np.ndarray:
        """Matrix over GF(p) of ``y -> c * y`` on digit column vectors."""
        big = self.big
        return np.array(
            [big.digits(big.mul(c, big.p**i)) for i in range(big.m)],
            dtype=np.int64,
        ).T

    def power_coords(self, delta: int, count: int, chunk: int = 4096) -> tuple[np.ndarray, np.ndarray]:
        """Split coordinates of ``delta**e`` for ``e`` in ``range(count)``."""
        big, p = self.big, self.big.p
        chunk = min(chunk, count)
        base = [1]
        for _ in range(chunk - 1):
            base.append(big.mul(base[-1], delta))
        base_digits = np.array([big.digits(v) for v in base], dtype=np.int64)
        out_a = np.empty(count, dtype=np.int64)
        out_b = np.empty(count, dtype=np.int64)
        step = big.pow(delta, chunk)
        mult = 1
        for start in range(0, count, chunk):
            stop = min(start + chunk, count)
            block = base_digits[: stop - start] @ self.mul_matrix(mult).T % p
            out_a[start:stop], out_b[start:stop] = self.split_digits(block)
            mult = big.mul(mult, step)
        return out_a, out_b


@lru_cache(maxsize=None)
def tower(q: int) -> Tower:
    return Tower(q)
