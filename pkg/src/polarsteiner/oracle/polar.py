"""Brute-force enumeration of totally isotropic subspaces and generators.

Points are normalized isotropic vectors.  A subspace is a bitmask over point
indices; extending U by an isotropic point orthogonal to U keeps it totally
isotropic, so levels are built one dimension at a time and deduplicated by
mask.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, List, Optional

import numpy as np

from ..schemes import SchemeSpec, scheme_size
from .fields import FieldTable, rref, span_vectors
from .forms import FormSpec, standard_form

DEFAULT_CAP = 20000


class TooLarge(RuntimeError):
    pass


class EnumerationError(AssertionError):
    pass


def _mask_from_bools(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _points(form: FormSpec):
    F = form.F
    vecs = []
    for head in range(form.dim):
        for tail in product(range(F.q), repeat=form.dim - head - 1):
            vecs.append((0,) * head + (1,) + tail)
    V = np.array(vecs, dtype=np.int64)
    keep = form.singular_mask(V)
    return [v for v, k in zip(vecs, keep) if k], V[keep]


@dataclass
class _Space:
    basis: List[tuple]
    vectors: List[tuple]
    perp: int


@dataclass
class PolarSpaceInstance:
    spec: SchemeSpec
    form: FormSpec
    points: List[tuple]
    generators: List[tuple]  # RREF bases
    masks: List[int]  # point sets of the generators
    space_counts: List[int]  # number of totally isotropic t-spaces, t = 0..n
    cover_counts: Counter  # generators through an (n-1)-space -> how many such spaces
    hyperplane_masks: List[int] = dc_field(default_factory=list)
    _relations: Optional[np.ndarray] = dc_field(default=None, repr=False)

    @property
    def F(self) -> FieldTable:
        return self.form.F

    @property
    def size(self) -> int:
        return len(self.generators)

    def incidence(self) -> np.ndarray:
        M = np.zeros((self.size, len(self.points)), dtype=np.float64)
        for g, mask in enumerate(self.masks):
            M[g, list(_bits(mask))] = 1
        return M

    def relations(self, cap: int = 8000) -> np.ndarray:
        """relation[U][W] = n - dim(U cap W)."""
        if self._relations is None:
            if self.size > cap:
                raise TooLarge(f"relation table for {self.size} generators exceeds cap {cap}")
            M = self.incidence()
            common = np.rint(M @ M.T).astype(np.int64)
            qf, n = self.F.q, self.spec.n
            lookup = {(qf**k - 1) // (qf - 1): n - k for k in range(n + 1)}
            R = np.full(common.shape, -1, dtype=np.int64)
            for count, rel in lookup.items():
                R[common == count] = rel
            if (R < 0).any():
                raise EnumerationError("intersection size is not a subspace size")
            self._relations = R
        return self._relations

    def relation(self, a: int, b: int) -> int:
        return self.spec.n - space_dimension(self.masks[a] & self.masks[b], self.F.q)

    def valencies(self) -> List[List[int]]:
        """Per relation i, the distinct neighbour counts over all generators."""
        R = self.relations()
        return [sorted(set((R == i).sum(axis=1).tolist())) for i in range(self.spec.n + 1)]


def _span_mask(vectors, index, F) -> int:
    mask = 0
    for v in vectors:
        if any(v):
            mask |= 1 << index[F.normalize(v)]
    return mask


def enumerate_instance(spec: SchemeSpec, cap: int = DEFAULT_CAP) -> PolarSpaceInstance:
    """Enumerate every generator of the standard polar space of ``spec``."""
    expected = scheme_size(spec)
    if expected > cap:
        raise TooLarge(f"{spec.label()} has {expected} generators, cap is {cap}")
    form = standard_form(spec)
    F = form.F
    pts, V = _points(form)
    index = {v: i for i, v in enumerate(pts)}
    ortho = form.orthogonality(V)
    perp = [_mask_from_bools(row) for row in ortho]

    zero = tuple([0] * form.dim)
    level: Dict[int, _Space] = {0: _Space([], [zero], (1 << len(pts)) - 1)}
    counts = [1]
    normalize, vadd, vscale = F.normalize, F.vadd, F.vscale
    for _ in range(spec.n + 1):
        nxt: Dict[int, _Space] = {}
        for mask, sp in level.items():
            cand = sp.perp & ~mask
            while cand:
                low = cand & -cand
                i = low.bit_length() - 1
                v = pts[i]
                # points of U + v outside U are the classes of u + v
                new = mask
                for u in sp.vectors:
                    new |= 1 << index[normalize(vadd(u, v))]
                cand &= ~new
                if new not in nxt:
                    vectors = [vadd(u, vscale(c, v)) for c in range(F.q) for u in sp.vectors]
                    nxt[new] = _Space(sp.basis + [v], vectors, sp.perp & perp[i])
        if not nxt:
            break
        counts.append(len(nxt))
        prev, level = level, nxt

    if len(counts) - 1 != spec.n:
        raise EnumerationError(f"Witt index {len(counts) - 1}, expected {spec.n}")
    masks = sorted(level)
    generators = [rref(level[m].basis, F) for m in masks]
    hyper = sorted(prev)
    cover = Counter(sum(1 for g in masks if g & h == h) for h in hyper)
    return PolarSpaceInstance(spec, form, pts, generators, masks, counts, cover, hyper)


def from_generators(spec: SchemeSpec, generators) -> PolarSpaceInstance:
    """Rebuild an instance from generator bases alone (e.g. a loaded export).

    Lower-dimensional counts are recomputed from subspaces of the generators,
    since every totally isotropic subspace lies in some generator.
    """
    form = standard_form(spec)
    F = form.F
    pts, _ = _points(form)
    index = {v: i for i, v in enumerate(pts)}
    gens = [rref(g, F) for g in generators]
    masks = []
    for g in gens:
        vecs = span_vectors(g, F)
        for v in vecs:
            if any(v) and not form.is_singular(v):
                raise EnumerationError("generator contains a non-singular vector")
        masks.append(_span_mask(vecs, index, F))
    order = sorted(range(len(masks)), key=masks.__getitem__)
    masks = [masks[i] for i in order]
    gens = [gens[i] for i in order]
    if len(set(masks)) != len(masks):
        raise EnumerationError("duplicate generators")

    zero = tuple([0] * form.dim)
    level = {0: [zero]}
    counts = [1]
    for _ in range(spec.n):
        nxt = {}
        for mask, vectors in level.items():
            cand = 0
            for g in masks:
                if g & mask == mask:
                    cand |= g
            cand &= ~mask
            while cand:
                i = (cand & -cand).bit_length() - 1
                new_vectors = [F.vadd(u, F.vscale(c, pts[i])) for c in range(F.q) for u in vectors]
                new = _span_mask(new_vectors, index, F)
                cand &= ~new
                nxt.setdefault(new, new_vectors)
        counts.append(len(nxt))
        prev, level = level, nxt
    hyper = sorted(prev)
    cover = Counter(sum(1 for g in masks if g & h == h) for h in hyper)
    return PolarSpaceInstance(spec, form, pts, gens, masks, counts, cover, hyper)


def count_isotropic_spaces(instance: PolarSpaceInstance, t: int) -> int:
    if not 0 <= t <= instance.spec.n:
        from ..distributions import BadParameters

        raise BadParameters(f"t={t} outside 0..{instance.spec.n}")
    return instance.space_counts[t]


def space_dimension(mask: int, q: int) -> int:
    count = mask.bit_count()
    k = 0
    while (q**k - 1) // (q - 1) < count:
        k += 1
    return k
