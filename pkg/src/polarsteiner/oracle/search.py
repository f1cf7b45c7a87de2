"""Code search by maximum clique, and the two halves of D_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..qarith import qbinomial
from ..distributions import Distribution, inner_distribution
from ..schemes import PolarKind, WrongFamily
from .polar import PolarSpaceInstance, TooLarge

EXHAUSTIVE_CAP = 500
MAX_EXHAUSTIVE = "max"
FIRST_OF_SIZE = "first"


class BadParameters(ValueError):
    pass


class NotFound(LookupError):
    pass


def code_graph(instance: PolarSpaceInstance, d: int) -> List[int]:
    """Adjacency bitmasks: U ~ W when n - dim(U cap W) >= d."""
    R = instance.relations()
    adj = []
    for row in (R >= d):
        mask = 0
        for j in row.nonzero()[0].tolist():
            mask |= 1 << j
        adj.append(mask)
    return adj


def _color_order(P: int, adj: List[int]):
    """Greedy colouring of the vertex set P; returns (vertex, colour) by colour."""
    order = []
    colour = 0
    while P:
        colour += 1
        Q = P
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~adj[v] & ~(1 << v)
            P &= ~(1 << v)
            order.append((v, colour))
    return order


def max_clique(adj: List[int], target: Optional[int] = None, ceiling: Optional[int] = None) -> List[int]:
    """Branch and bound with colouring bounds.

    Stops once ``target`` is reached (any clique of that size will do), or
    once ``ceiling``, a proven upper bound, is reached.
    """
    best: List[int] = []
    clique: List[int] = []
    goal = target if target is not None else (ceiling if ceiling is not None else len(adj) + 1)

    def expand(P: int) -> bool:
        nonlocal best
        for v, colour in reversed(_color_order(P, adj)):
            if len(clique) + colour <= max(len(best), (goal - 1) if target else 0):
                return False
            clique.append(v)
            sub = P & adj[v]
            if sub:
                if expand(sub):
                    return True
            elif len(clique) > len(best):
                best = list(clique)
                if len(best) >= goal:
                    return True
            clique.pop()
            P &= ~(1 << v)
        return False

    if adj:
        expand((1 << len(adj)) - 1)
    return best


def find_code(instance: PolarSpaceInstance, d: int, mode: str = MAX_EXHAUSTIVE, size: Optional[int] = None, cap: int = EXHAUSTIVE_CAP) -> List[int]:
    """Indices of generators forming a d-code (pairwise relation >= d)."""
    n = instance.spec.n
    if not 1 <= d <= n:
        raise BadParameters(f"d={d} outside 1..{n}")
    if mode == MAX_EXHAUSTIVE:
        if instance.size > cap:
            raise TooLarge(f"exhaustive search limited to {cap} generators")
        return sorted(max_clique(code_graph(instance, d), ceiling=packing_bound(instance, d)))
    if mode == FIRST_OF_SIZE:
        if size is None or size < 1:
            raise BadParameters("first-of-size mode needs a positive size")
        found = max_clique(code_graph(instance, d), target=size)
        if len(found) < size:
            raise NotFound(f"no {d}-code of size {size}")
        return sorted(found)
    raise BadParameters(f"unknown mode {mode!r}")


def packing_bound(instance: PolarSpaceInstance, d: int) -> int:
    """Members of a d-code share no (n-d+1)-space, so |Y| is at most the number
    of such spaces divided by the number inside one generator."""
    n, k = instance.spec.n, instance.spec.n - d + 1
    return instance.space_counts[k] // int(qbinomial(n, k, instance.F.q))


def is_code(instance: PolarSpaceInstance, members, d: int) -> bool:
    members = list(members)
    return all(instance.relation(a, b) >= d for i, a in enumerate(members) for b in members[i + 1:])


def covers_hyperplanes_once(instance: PolarSpaceInstance, members) -> bool:
    """Every totally isotropic (n-1)-space lies in exactly one member."""
    masks = [instance.masks[g] for g in members]
    return all(sum(1 for g in masks if g & h == h) == 1 for h in instance.hyperplane_masks)


@dataclass(frozen=True)
class Halves:
    first: Tuple[int, ...]
    second: Tuple[int, ...]
    steiner: Tuple[bool, bool]
    closed: bool  # intersections within a half have dimension of the parity of n


def bipartite_half(instance: PolarSpaceInstance) -> Halves:
    if instance.spec.kind is not PolarKind.HYPERBOLIC:
        raise WrongFamily("bipartite halves exist for D_n only")
    R = instance.relations()
    # relation to the base generator is even iff dim(U cap U_0) = n mod 2
    first = tuple(int(g) for g in (R[0] % 2 == 0).nonzero()[0])
    second = tuple(int(g) for g in (R[0] % 2 == 1).nonzero()[0])
    closed = all((R[list(h)][:, list(h)] % 2 == 0).all() for h in (first, second) if h)
    steiner = (covers_hyperplanes_once(instance, first), covers_hyperplanes_once(instance, second))
    return Halves(first, second, steiner, closed)


def code_distribution(instance: PolarSpaceInstance, members) -> Distribution:
    return inner_distribution(members, instance.relations(), instance.spec.n)
