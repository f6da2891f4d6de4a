"""Exact spanning-tree counts, degree polynomials and upper bounds for bipartite graphs."""
from .bounds import (BoundReport, BoundValue, TailBoundQuery, bozkurt_bound, conjecture_report,
                     ehrenborg_bound, eval_both, grimmett_bound, intermediate_bound, lemma2_gap,
                     tail_bound_gt, tail_bound_le)
from .generators import Family, GeneratorSpec, generate
from .graph import (BipartiteGraph, Partition, Regularity, RegularityClass, Side, build_graph,
                    classify_regularity, complete, cycle, degree_product, from_partition,
                    is_connected, is_ferrers, strip_degree_one)
from .linalg import IntPolynomial, det_int, det_poly, det_rat, minor, sym_eigenvalues
from .oracle import brute_tau, degree_histogram, enumerate_trees
from .spanning import (DegreeTailQuery, TailMode, VertexRef, degree_polynomial, laplacian,
                       reduced_matrix, tail_count, tau, tau_spectral, transvection_check)

__version__ = "0.1.0"
