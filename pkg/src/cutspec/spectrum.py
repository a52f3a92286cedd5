"""Normalized Laplacian spectrum and the inequality suite.

Floating point is confined to this module.  Eigenvalues come from a
cyclic Jacobi sweep with a deterministic rotation order; comparisons
against exact rational cut constants convert the rational to float and
use an absolute tolerance of 1e-9.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .errors import IsolatedVertex, TooLarge
from .graph import Graph, graph_params, is_bipartite, is_forest, vol
from . import oracles
from .eigen import spectrum_scan
from .nodal import analyze

TOL = 1e-9
JACOBI_TARGET = 1e-12
SIZE_CAP = 64


@dataclass
class Spectrum:
    eigenvalues: List[float]
    eigenvectors: Optional[np.ndarray]
    residual_bound: float


@dataclass
class InequalityReport:
    name: str
    lhs: float
    mid: float
    rhs: float
    holds: bool
    slack: float
    detail: dict = field(default_factory=dict)


def _report(name, lhs, mid, rhs, detail=None) -> InequalityReport:
    holds = lhs <= mid + TOL and mid <= rhs + TOL
    slack = min(mid - lhs, rhs - mid)
    return InequalityReport(
        name=name,
        lhs=float(lhs),
        mid=float(mid),
        rhs=float(rhs),
        holds=holds,
        slack=float(slack),
        detail=detail or {},
    )


def _jacobi(a: np.ndarray):
    """Cyclic Jacobi rotations until the off-diagonal norm is negligible."""
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n)
    for _ in range(100):
        off = np.sqrt(np.sum((a - np.diag(np.diag(a))) ** 2))
        if off < JACOBI_TARGET:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < JACOBI_TARGET / (n * n):
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta**2 + 1))
                if theta == 0:
                    t = 1.0
                c = 1 / np.sqrt(t**2 + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                v = v @ rot
    return a, v


def normalized_laplacian_spectrum(g: Graph, want_vectors: bool = True) -> Spectrum:
    """Eigen decomposition of I - D^{-1/2} W D^{-1/2}."""
    if g.n > SIZE_CAP:
        raise TooLarge(f"dense eigensolver capped at n={SIZE_CAP}")
    deg = [Fraction(0)] * g.n
    w = np.zeros((g.n, g.n))
    for u, vtx, wt in g.edges:
        deg[u] += wt
        deg[vtx] += wt
        w[u, vtx] = w[vtx, u] = float(wt)
    if any(d == 0 for d in deg):
        raise IsolatedVertex("normalized Laplacian needs positive degrees")
    dinv = np.diag([1 / np.sqrt(float(d)) for d in deg])
    lap = np.eye(g.n) - dinv @ w @ dinv
    diag, vecs = _jacobi(lap)
    order = np.argsort(np.diag(diag), kind="stable")
    vals = np.diag(diag)[order]
    vecs = vecs[:, order]
    residual = float(
        np.max(np.abs(lap @ vecs - vecs * vals[np.newaxis, :]))
    )
    return Spectrum(
        eigenvalues=[float(x) for x in vals],
        eigenvectors=vecs if want_vectors else None,
        residual_bound=residual,
    )


def inequality_suite(
    g: Graph, kway_max: int = 3, kway_work_cap: int = oracles.DEFAULT_WORK_CAP
) -> List[InequalityReport]:
    """Every spectral-vs-combinatorial inequality testable at g's size."""
    spec = normalized_laplacian_spectrum(g, want_vectors=False)
    lam = spec.eigenvalues
    volV = float(vol(g, range(g.n)))
    out = []

    h = oracles.cheeger(g).value
    out.append(
        _report(
            "cheeger",
            float(h) ** 2 / 2,
            lam[1],
            2 * float(h),
            {"h": str(h)},
        )
    )

    hplus = oracles.dual_cheeger(g).value
    out.append(
        _report(
            "dual_cheeger",
            (1 - float(hplus)) ** 2 / 2,
            2 - lam[-1],
            2 * (1 - float(hplus)),
            {"h_plus": str(hplus)},
        )
    )

    hmax = oracles.maxcut(g).value
    out.append(
        _report(
            "delorme_poljak",
            float(hmax),
            volV / 4 * lam[-1],
            float("inf"),
            {"h_max": str(hmax)},
        )
    )

    # forest mode: c_k = 1 - h_k+ is exact, so the two-sided bound applies
    if is_forest(g):
        for k in range(1, kway_max + 1):
            if k > g.n or (2 * k + 1) ** g.n > kway_work_cap:
                break
            hk = oracles.k_way_dual_cheeger(g, k, work_cap=kway_work_cap).value
            ck = 1 - float(hk)
            out.append(
                _report(
                    f"forest_sandwich_k{k}",
                    ck**2 / 2,
                    2 - lam[g.n - k],
                    2 * ck,
                    {"h_k_plus": str(hk), "k": k},
                )
            )
    else:
        # k = 1 is exact on every graph
        out.append(
            _report(
                "sandwich_k1",
                (1 - float(hplus)) ** 2 / 2,
                2 - lam[-1],
                2 * (1 - float(hplus)),
                {"h_plus": str(hplus)},
            )
        )
    return out


def kway_nodal_reports(
    g: Graph,
    scan_cap: int = 9,
    kway_work_cap: int = oracles.DEFAULT_WORK_CAP,
    max_pairs: Optional[int] = None,
) -> List[InequalityReport]:
    """Lower half of the k-way bound on scanned ternary eigenpairs: an
    eigenvalue c whose eigenvector has m support domains obeys
    1 - h_m+ <= c."""
    out = []
    pairs = spectrum_scan("signless", g, cap=scan_cap)
    if max_pairs is not None:
        pairs = pairs[:max_pairs]
    for value, cert in pairs:
        a, b = cert.sets
        x = tuple(
            Fraction(1) if i in a else Fraction(-1) if i in b else Fraction(0)
            for i in range(g.n)
        )
        m = len(analyze(g, x, "support_based").support_domains)
        if m < 1 or (2 * m + 1) ** g.n > kway_work_cap:
            continue
        hm = oracles.k_way_dual_cheeger(g, m, work_cap=kway_work_cap).value
        out.append(
            _report(
                f"kway_lower_m{m}",
                float(1 - hm),
                float(value),
                float("inf"),
                {"m": m, "eigenvalue": str(value)},
            )
        )
    return out


def multiplicity_bounds_check(g: Graph) -> InequalityReport:
    """alpha <= edge cover number, with equality on connected bipartite
    graphs; reports the triple (alpha, eta, bipartite)."""
    params = graph_params(g)
    alpha = params["alpha"]
    eta = params["edge_cover"]
    if eta is None:
        raise IsolatedVertex("edge cover undefined with isolated vertices")
    bip = params["is_bipartite"]
    rep = _report(
        "multiplicity_bounds",
        alpha,
        eta,
        float("inf"),
        {"alpha": alpha, "eta": eta, "bipartite": bip},
    )
    if bip:
        rep.holds = rep.holds and alpha == eta
    return rep
