"""Verification and search toolkit for 2-coloured hypercube edge colourings."""

from .core import (
    Colour,
    EdgeColouring,
    Geodesic,
    SubcubeEmbedding,
    antipode,
    colour_changes,
    edge_colour,
    edge_index,
    enumerate_geodesics,
    parity,
    parse_colouring,
    subcube_of_pair,
)
from .q3 import (
    Classification,
    FVariant,
    classify,
    select_bad_geodesic,
    select_good_geodesic,
    tabulate,
    verify_lemma6,
    verify_lemma7,
    verify_lemma8,
)
from .construction import (
    BlockDecomposition,
    build_report,
    choose_variant,
    exact_expectation,
    exact_stats,
    f_value,
    modify_geodesic,
    monte_carlo_mean,
)
from .search import (
    MinChangesResult,
    adversary_search,
    brute_force_min,
    min_antipodal_changes,
    min_changes_from,
)

__all__ = [
    "Colour",
    "EdgeColouring",
    "Geodesic",
    "SubcubeEmbedding",
    "antipode",
    "colour_changes",
    "edge_colour",
    "edge_index",
    "enumerate_geodesics",
    "parity",
    "parse_colouring",
    "subcube_of_pair",
    "Classification",
    "FVariant",
    "classify",
    "select_bad_geodesic",
    "select_good_geodesic",
    "tabulate",
    "verify_lemma6",
    "verify_lemma7",
    "verify_lemma8",
    "BlockDecomposition",
    "build_report",
    "choose_variant",
    "exact_expectation",
    "exact_stats",
    "f_value",
    "modify_geodesic",
    "monte_carlo_mean",
    "MinChangesResult",
    "adversary_search",
    "brute_force_min",
    "min_antipodal_changes",
    "min_changes_from",
]

__version__ = "0.1.0"
