"""Nodal domain statistics and structure checks for verified eigenpairs.

Three conventions:
  sign_based      components of {x > 0} and {x < 0}
  support_based   components of {x != 0}
  sup_norm_based  components of the extreme-value sets D+, D-, D0

Connectivity always refers to edges of positive weight within the set.
The check_* operations refuse to run without a positive verification
verdict so theorems are only asserted on actual eigenpairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import NotVerified, ZeroVector
from .eigen import EigenpairReport, _sup_norm_classes, verify
from .functionals import RVector, sup_norm
from .graph import Graph, boundary, connected_components, cut_weight, intra_weight


@dataclass
class NodalReport:
    convention: str
    strong_pos: list
    strong_neg: list
    support_domains: list
    d_plus: frozenset
    d_minus: frozenset
    d_zero: frozenset
    pm_domains: list  # components of D+ union D-
    null_domains: list  # components of D0
    S: int
    S0: int
    Sprime: int
    N_nonsingleton: int

    def split(self, domain: frozenset):
        """A_i / B_i split of a sup-norm component by D+/D- membership."""
        return domain & self.d_plus, domain & self.d_minus


def analyze(g: Graph, x: RVector, convention: str = "sign_based") -> NodalReport:
    if all(t == 0 for t in x):
        raise ZeroVector("nodal analysis of the zero vector")
    pos = frozenset(i for i, t in enumerate(x) if t > 0)
    neg = frozenset(i for i, t in enumerate(x) if t < 0)
    strong_pos = connected_components(g, pos)
    strong_neg = connected_components(g, neg)
    support_domains = connected_components(g, pos | neg)
    _, d_plus, d_minus, d_zero = _sup_norm_classes(x)
    pm_domains = connected_components(g, d_plus | d_minus)
    null_domains = connected_components(g, d_zero)
    n_nonsingleton = sum(1 for c in null_domains if len(c) >= 2)
    if convention == "sign_based":
        s = len(strong_pos) + len(strong_neg)
        s0 = len(connected_components(g, g.vertices() - pos - neg))
    elif convention == "support_based":
        s = len(support_domains)
        s0 = len(connected_components(g, g.vertices() - pos - neg))
    elif convention == "sup_norm_based":
        s = len(connected_components(g, d_plus)) + len(
            connected_components(g, d_minus)
        )
        s0 = len(null_domains)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return NodalReport(
        convention=convention,
        strong_pos=strong_pos,
        strong_neg=strong_neg,
        support_domains=support_domains,
        d_plus=d_plus,
        d_minus=d_minus,
        d_zero=d_zero,
        pm_domains=pm_domains,
        null_domains=null_domains,
        S=s,
        S0=s0,
        Sprime=len(pm_domains),
        N_nonsingleton=n_nonsingleton,
    )


def _require_verified(report: EigenpairReport, x: RVector):
    if report is None or not report.verdict or tuple(report.x) != tuple(x):
        raise NotVerified("structure checks need a verified eigenpair for x")


def check_null_symmetry(g: Graph, x: RVector, verified: EigenpairReport) -> bool:
    """Each null component sees equal edge weight from D+ and from D-."""
    _require_verified(verified, x)
    rep = analyze(g, x, "sup_norm_based")
    return all(
        cut_weight(g, rep.d_plus, omega) == cut_weight(g, rep.d_minus, omega)
        for omega in rep.null_domains
    )


def check_max_eigvec_structure(
    g: Graph,
    x: RVector,
    verified: EigenpairReport,
    problem_id: str,
    k: Optional[int] = None,
    r: Optional[int] = None,
    flip_closure: bool = True,
) -> dict:
    """Structure assertions at the extreme eigenvalue.

    Returns a dict of named booleans; flip_closure re-verifies all 2^S'
    componentwise sign flips, which the caller can disable for large S'.
    """
    _require_verified(verified, x)
    rep = analyze(g, x, "sup_norm_based")
    out = {}
    splits = [rep.split(d) for d in rep.pm_domains]
    out["boundary_balance"] = all(
        boundary(g, a) == boundary(g, b) for a, b in splits
    )
    out["null_vertex_balance"] = all(
        cut_weight(g, a, {v}) == cut_weight(g, b, {v})
        for a, b in splits
        for v in rep.d_zero
    )
    out["d_zero_edgeless"] = intra_weight(g, rep.d_zero) == 0
    out["null_singletons"] = rep.N_nonsingleton == 0
    if g.n >= 3:
        out["sprime_bound"] = 2 * rep.Sprime <= g.n - 1
    if flip_closure:
        m = sup_norm(x)
        ok = True
        for mask in range(1 << len(splits)):
            y = [Fraction(0)] * g.n
            for bit, (a, b) in enumerate(splits):
                sgn = -1 if mask >> bit & 1 else 1
                for v in a:
                    y[v] = sgn * m
                for v in b:
                    y[v] = -sgn * m
            if not verify(problem_id, g, verified.lam, tuple(y)).verdict:
                ok = False
                break
        out["flip_closure"] = ok
    if k is not None and r is not None:
        out["courant_S"] = rep.S <= k + r - 1
        out["courant_S0"] = rep.S0 <= k + r - 2
    return out
