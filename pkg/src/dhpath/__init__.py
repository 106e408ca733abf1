"""Path homology of directed hypergraphs, computed exactly."""

__version__ = "0.1.0"

from .linalg import GF, QQ, Matrix, parse_field, rank, kernel_basis
from .hypergraph import (Arrow, Digraph, DirectedHypergraph, DHMorphism, Hypergraph, InvalidInput, arrow,
                         box_product, check_dh_morphism, compose, epsilon, gamma, identity, natural,
                         validate)
from .pathcomplex import PathComplex, cylinder, digraph_complex, check_pc_morphism
from .homology import BettiTable, TruncationError, betti, build_omega, induced_homology_map
from .theories import TheorySpec, bold_view, connective_view, natural_view, nondirected_view, theory_betti, theory_view
from .homotopy import CapExceeded, homotopic, homotopy_equivalent, line_digraph, one_step_homotopic
from .laws import LAWS, LawReport
from .documents import Document, DocumentError, Report, load_fixture, parse_document

__all__ = [
    "__version__",
    "GF",
    "QQ",
    "Matrix",
    "parse_field",
    "rank",
    "kernel_basis",
    "Arrow",
    "Digraph",
    "DirectedHypergraph",
    "DHMorphism",
    "Hypergraph",
    "InvalidInput",
    "arrow",
    "box_product",
    "check_dh_morphism",
    "compose",
    "epsilon",
    "gamma",
    "identity",
    "natural",
    "validate",
    "PathComplex",
    "cylinder",
    "digraph_complex",
    "check_pc_morphism",
    "BettiTable",
    "TruncationError",
    "betti",
    "build_omega",
    "induced_homology_map",
    "TheorySpec",
    "bold_view",
    "connective_view",
    "natural_view",
    "nondirected_view",
    "theory_betti",
    "theory_view",
    "CapExceeded",
    "homotopic",
    "homotopy_equivalent",
    "line_digraph",
    "one_step_homotopic",
    "LAWS",
    "LawReport",
    "Document",
    "DocumentError",
    "Report",
    "load_fixture",
    "parse_document",
]
