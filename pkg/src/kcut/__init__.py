"""Approximate minimum k-cut with exact small-graph oracles."""
from kcut._kernels import BACKEND
from kcut.cuts import (
    CutUndefined,
    SizeGuardExceeded,
    complete,
    enumerate_near_mincuts,
    exact_kcut_oracle,
    global_mincut,
    greedy_sv,
    is_laminar,
    min_four_cut,
)
from kcut.generators import gen_planted_laminar, gen_random_gnp, gen_star_pvc, gen_two_clique
from kcut.graph import (
    Cut,
    GraphError,
    Partition,
    WeightedGraph,
    boundary_weight,
    contract,
    crosses,
    cut_weight,
    induced_subgraph,
)
from kcut.io import read_graph, write_graph
from kcut.laminar import knapsack_greedy, laminar
from kcut.pvc import PvcInstance, PvcSolution, pvc_bruteforce, pvc_general
from kcut.reduction import BestTracker, EpsilonConfig, default_config, guess, main_kcut, record
from kcut.tree import CutTree, NotLaminarError, build_mincut_tree, partition_from_selection, saved

__version__ = "0.1.0"
