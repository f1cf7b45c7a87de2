"""Small finite fields as lookup tables.

Elements of GF(p^k) are the integers 0..p^k-1; the base-p digits are the
coefficients of a polynomial reduced modulo a monic irreducible of degree k.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np


class FieldError(ValueError):
    pass


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, k
    raise FieldError(f"{q} is not a prime power")


def _digits(a, p, k):
    return [(a // p**i) % p for i in range(k)]


def _from_digits(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def _poly_mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i in range(k + 1):
                prod[deg - k + i] = (prod[deg - k + i] - c * modulus[i]) % p
    return prod[:k]


class FieldTable:
    """GF(q) with full addition/multiplication tables, axioms checked on build."""

    def __init__(self, q: int):
        p, k = _factor_prime_power(q)
        self.q, self.p, self.k = q, p, k
        self.modulus = None
        if k == 1:
            add = [[(a + b) % p for b in range(q)] for a in range(q)]
            mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            add = [
                [_from_digits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p) for b in range(q)]
                for a in range(q)
            ]
            mul = None
            # first monic polynomial whose quotient ring has no zero divisors
            for tail in product(range(p), repeat=k):
                modulus = list(tail) + [1]
                if modulus[0] == 0:
                    continue
                table = [
                    [_from_digits(_poly_mulmod(_digits(a, p, k), _digits(b, p, k), modulus, p), p) for b in range(q)]
                    for a in range(q)
                ]
                if all(1 in table[a] for a in range(1, q)):
                    mul, self.modulus = table, modulus
                    break
        self.add, self.mul = add, mul
        self.neg = [add[a].index(0) for a in range(q)]
        self.inv = [None] + [mul[a].index(1) for a in range(1, q)]
        self.sub = [[add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        self.add_np = np.array(add, dtype=np.int64)
        self.mul_np = np.array(mul, dtype=np.int64)
        self._check_axioms()
        self.root = None
        self.conj = None
        if k % 2 == 0:
            self.root = p ** (k // 2)
            self.conj = [self.power(a, self.root) for a in range(q)]
            self._check_conjugation()

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def _check_axioms(self):
        q, add, mul = self.q, self.add, self.mul
        for a in range(q):
            if add[0][a] != a or mul[1][a] != a:
                raise FieldError("identity element failed")
            for b in range(q):
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise FieldError("commutativity failed")
                for c in range(q):
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise FieldError("additive associativity failed")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise FieldError("multiplicative associativity failed")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise FieldError("distributivity failed")

    def _check_conjugation(self):
        conj, q = self.conj, self.q
        for a in range(q):
            if conj[conj[a]] != a:
                raise FieldError("conjugation is not an involution")
            for b in range(q):
                if conj[self.add[a][b]] != self.add[conj[a]][conj[b]]:
                    raise FieldError("conjugation is not additive")
                if conj[self.mul[a][b]] != self.mul[conj[a]][conj[b]]:
                    raise FieldError("conjugation is not multiplicative")
        fixed = [a for a in range(q) if conj[a] == a]
        if len(fixed) != self.root:
            raise FieldError("conjugation fixes the wrong subfield")

    def subfield(self):
        """Elements fixed by conjugation (the subfield of order sqrt(q))."""
        return [a for a in range(self.q) if self.conj[a] == a]

    # vector helpers; vectors are tuples of ints

    def vadd(self, u, v):
        add = self.add
        return tuple(add[a][b] for a, b in zip(u, v))

    def vsub(self, u, v):
        sub = self.sub
        return tuple(sub[a][b] for a, b in zip(u, v))

    def vscale(self, c, v):
        row = self.mul[c]
        return tuple(row[a] for a in v)

    def normalize(self, v):
        """Scale so the first nonzero coordinate is 1."""
        for a in v:
            if a:
                return self.vscale(self.inv[a], v)
        return v

    def dot(self, u, v):
        s = 0
        add, mul = self.add, self.mul
        for a, b in zip(u, v):
            s = add[s][mul[a][b]]
        return s

    def __repr__(self):
        return f"FieldTable({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> FieldTable:
    return FieldTable(q)


def rref(rows, F: FieldTable):
    """Reduced row-echelon form; zero rows dropped."""
    m = [list(r) for r in rows]
    out = []
    width = len(m[0]) if m else 0
    col = 0
    while m and col < width:
        piv = next((r for r in m if r[col]), None)
        if piv is None:
            col += 1
            continue
        m.remove(piv)
        piv = list(F.vscale(F.inv[piv[col]], piv))
        m = [list(F.vsub(r, F.vscale(r[col], piv))) if r[col] else r for r in m]
        out = [list(F.vsub(r, F.vscale(r[col], piv))) if r[col] else r for r in out]
        out.append(piv)
        col += 1
    return tuple(tuple(r) for r in out)


def rank(rows, F: FieldTable) -> int:
    return len(rref(rows, F)) if rows else 0


def span_vectors(basis, F: FieldTable):
    """All vectors in the span of ``basis`` (including zero)."""
    width = len(basis[0])
    vecs = [tuple([0] * width)]
    for b in basis:
        vecs = [F.vadd(u, F.vscale(c, b)) for c in range(F.q) for u in vecs]
    return vecs
