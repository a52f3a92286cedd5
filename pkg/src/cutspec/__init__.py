"""Exact spectral toolkit for graph cut constants.

Rational-arithmetic oracles, nonlinear eigenpair verification, nodal
domain analysis, a Dinkelbach ratio solver and a linear-spectrum
inequality suite for Cheeger, dual Cheeger, maxcut, mincut and
anti-Cheeger cuts.
"""

from .graph import Graph, parse_graph, emit_graph
from .functionals import ratio_objective
from .oracles import CutCertificate, ratio_oracle
from .eigen import EigenpairReport, verify, spectrum_scan
from .nodal import NodalReport, analyze
from .dinkelbach import DinkelbachTrace, solve, stationary_check
from .spectrum import Spectrum, normalized_laplacian_spectrum, inequality_suite

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "parse_graph",
    "emit_graph",
    "ratio_objective",
    "CutCertificate",
    "ratio_oracle",
    "EigenpairReport",
    "verify",
    "spectrum_scan",
    "NodalReport",
    "analyze",
    "DinkelbachTrace",
    "solve",
    "stationary_check",
    "Spectrum",
    "normalized_laplacian_spectrum",
    "inequality_suite",
    "__version__",
]
