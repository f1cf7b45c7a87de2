"""Brute-force ground truth for small polar spaces."""

import os

from .checks import AxiomViolation, IdempotentMismatch, verify_axioms, verify_idempotents
from .fields import FieldTable, field
from .forms import FormSpec, standard_form
from .polar import DEFAULT_CAP, PolarSpaceInstance, TooLarge, count_isotropic_spaces, enumerate_instance
from .rankmap import rank_map_check
from .search import FIRST_OF_SIZE, MAX_EXHAUSTIVE, NotFound, bipartite_half, find_code
from .textformat import cache_path, dumps, load, loads, save


def enumerate(spec, cap=DEFAULT_CAP, cache_dir=None) -> PolarSpaceInstance:
    """Enumerate (or load from ``cache_dir``) the generators of ``spec``."""
    if cache_dir:
        path = cache_path(cache_dir, spec)
        if os.path.exists(path):
            return load(path)
    inst = enumerate_instance(spec, cap)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        save(inst, cache_path(cache_dir, spec))
    return inst


__all__ = [
    "AxiomViolation",
    "DEFAULT_CAP",
    "FIRST_OF_SIZE",
    "FieldTable",
    "FormSpec",
    "IdempotentMismatch",
    "MAX_EXHAUSTIVE",
    "NotFound",
    "PolarSpaceInstance",
    "TooLarge",
    "bipartite_half",
    "count_isotropic_spaces",
    "dumps",
    "enumerate",
    "enumerate_instance",
    "field",
    "find_code",
    "load",
    "loads",
    "rank_map_check",
    "save",
    "standard_form",
    "verify_axioms",
    "verify_idempotents",
]
