"""Standard nondegenerate forms for the six families, in a fixed basis.

Alternating    sum x_i y_{n+i} - x_{n+i} y_i
QuadraticPlus  sum x_i x_{n+i}
QuadraticParabolic  x_0^2 + sum x_i x_{n+i}
QuadraticMinus sum x_i x_{n+i} + x^2 + xy + b y^2, with t^2 + t + b irreducible
Hermitian      sum x_i conj(y_i) over GF(q^2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..schemes import PolarKind, SchemeSpec
from .fields import FieldTable, field

ALTERNATING = "Alternating"
QUADRATIC_PLUS = "QuadraticPlus"
QUADRATIC_PARABOLIC = "QuadraticParabolic"
QUADRATIC_MINUS = "QuadraticMinus"
HERMITIAN = "Hermitian"

QUADRATIC = (QUADRATIC_PLUS, QUADRATIC_PARABOLIC, QUADRATIC_MINUS)


@dataclass(frozen=True)
class FormSpec:
    """``terms`` are (i, j, c).  For quadratic kinds they mean c x_i x_j in Q(x);
    otherwise c x_i s(y_j) in the pairing, s being conjugation for Hermitian."""

    kind: str
    dim: int
    q: int  # order of the field the form lives over
    terms: Tuple[Tuple[int, int, int], ...]

    @property
    def F(self) -> FieldTable:
        return field(self.q)

    def quad(self, x) -> int:
        F = self.F
        s = 0
        for i, j, c in self.terms:
            s = F.add[s][F.mul[c][F.mul[x[i]][x[j]]]]
        return s

    def pair(self, x, y) -> int:
        F = self.F
        s = 0
        if self.kind in QUADRATIC:
            for i, j, c in self.terms:
                t = F.add[F.mul[x[i]][y[j]]][F.mul[x[j]][y[i]]]
                s = F.add[s][F.mul[c][t]]
            return s
        conj = F.conj if self.kind == HERMITIAN else None
        for i, j, c in self.terms:
            yj = conj[y[j]] if conj else y[j]
            s = F.add[s][F.mul[c][F.mul[x[i]][yj]]]
        return s

    def is_singular(self, x) -> bool:
        if self.kind in QUADRATIC:
            return self.quad(x) == 0
        return self.pair(x, x) == 0

    def singular_mask(self, V: np.ndarray) -> np.ndarray:
        F = self.F
        add, mul = F.add_np, F.mul_np
        acc = np.zeros(len(V), dtype=np.int64)
        W = np.array(F.conj)[V] if self.kind == HERMITIAN else V
        for i, j, c in self.terms:
            acc = add[acc, mul[c, mul[V[:, i], W[:, j]]]]
        return acc == 0

    def orthogonality(self, V: np.ndarray) -> np.ndarray:
        """Boolean matrix [pair(V_a, V_b) == 0]."""
        F = self.F
        add, mul = F.add_np, F.mul_np
        m = len(V)
        acc = np.zeros((m, m), dtype=np.int64)
        if self.kind in QUADRATIC:
            for i, j, c in self.terms:
                t = add[mul[V[:, i][:, None], V[:, j][None, :]], mul[V[:, j][:, None], V[:, i][None, :]]]
                acc = add[acc, mul[c, t]]
        else:
            W = np.array(F.conj)[V] if self.kind == HERMITIAN else V
            for i, j, c in self.terms:
                acc = add[acc, mul[c, mul[V[:, i][:, None], W[:, j][None, :]]]]
        return acc == 0

    def describe(self) -> str:
        return " ".join(f"{i},{j},{c}" for i, j, c in self.terms)


def elliptic_constant(F: FieldTable) -> int:
    """Smallest b with t^2 + t + b having no root in F."""
    for b in range(F.q):
        if all(F.add[F.add[F.mul[t][t]][t]][b] != 0 for t in range(F.q)):
            return b
    raise AssertionError("no irreducible t^2 + t + b")


def standard_form(spec: SchemeSpec) -> FormSpec:
    kind, n, q = spec.kind, spec.n, spec.q
    if not kind.is_base:
        raise ValueError("forms exist for the six classical families only")
    K = PolarKind
    if kind is K.SYMPLECTIC:
        F = field(q)
        terms = [(i, n + i, 1) for i in range(n)] + [(n + i, i, F.neg[1]) for i in range(n)]
        return FormSpec(ALTERNATING, 2 * n, q, tuple(terms))
    if kind is K.HYPERBOLIC:
        return FormSpec(QUADRATIC_PLUS, 2 * n, q, tuple((i, n + i, 1) for i in range(n)))
    if kind is K.PARABOLIC:
        terms = [(0, 0, 1)] + [(1 + i, 1 + n + i, 1) for i in range(n)]
        return FormSpec(QUADRATIC_PARABOLIC, 2 * n + 1, q, tuple(terms))
    if kind is K.ELLIPTIC:
        b = elliptic_constant(field(q))
        x, y = 2 * n, 2 * n + 1
        terms = [(i, n + i, 1) for i in range(n)] + [(x, x, 1), (x, y, 1)]
        if b:
            terms.append((y, y, b))
        return FormSpec(QUADRATIC_MINUS, 2 * n + 2, q, tuple(terms))
    dim = 2 * n if kind is K.HERMITIAN_ODD else 2 * n + 1
    return FormSpec(HERMITIAN, dim, q * q, tuple((i, i, 1) for i in range(dim)))
