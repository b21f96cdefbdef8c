"""Edge general position sets: exact search, closed forms, constructions and covers."""

from .constructions import (
    CoverCertificate,
    classify_grid_edges,
    formula_gpe,
    greedy_ipe_upper,
    grid_cover,
    grid_witness,
    hypercube_cover,
    pendant_edge_witness,
    two_theta_class_witness,
    verify_cover,
)
from .generators import (
    Complete,
    Cycle,
    Fig1Example,
    Grid,
    Hypercube,
    Path,
    Product,
    Star,
    Tree,
    fig1_graph,
    generate,
    layer_edges,
    read_graph,
)
from .geodesy import GeodesicPath, collinear, conflict_triples, enumerate_geodesics, is_edge_gp
from .graph import DistanceMatrix, EdgeSet, Graph, all_pairs_distances, bipartition, build_graph, diameter
from .solver import Budget, SolveReport, enumerate_optima, gpe_exact, greedy_witness
from .theta import ThetaPartition, is_partial_cube, theta_classes, theta_related

__version__ = "0.1.0"
