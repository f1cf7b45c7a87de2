"""Exact eigenvalues, code bounds and Steiner-system verdicts for the
association schemes on generators of finite classical polar spaces."""

from .bounds import BoundResult, alpha, beta, code_bound
from .distributions import (
    dual_distribution,
    inner_distribution,
    steiner_dual_distribution,
    steiner_inner_distribution,
)
from .lp import LPResult, lp_bound, lp_vs_closed_form
from .qarith import qbinomial, qhypergeometric, qpochhammer
from .schemes import EigTable, PolarKind, SchemeSpec, eig_table, multiplicities, p_number, scheme_size, valency
from .steiner import Outcome, Verdict, classify, full_verdict, steiner_size

__all__ = [
    "BoundResult",
    "EigTable",
    "LPResult",
    "Outcome",
    "PolarKind",
    "SchemeSpec",
    "Verdict",
    "alpha",
    "beta",
    "classify",
    "code_bound",
    "dual_distribution",
    "eig_table",
    "full_verdict",
    "inner_distribution",
    "lp_bound",
    "lp_vs_closed_form",
    "multiplicities",
    "p_number",
    "qbinomial",
    "qhypergeometric",
    "qpochhammer",
    "scheme_size",
    "steiner_dual_distribution",
    "steiner_inner_distribution",
    "steiner_size",
    "valency",
]
