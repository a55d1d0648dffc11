"""Exact subtree densities, k-profiles and inducibility checks for trees."""

from .bounds import BoundReport
from .constructions import (
    GlueSpec,
    SparklerHostParams,
    caterpillar,
    complete_dary,
    glue,
    glue_power,
    path,
    sparkler,
    sparkler_host,
    spider,
    star,
    universal_tree,
)
from .enumeration import (
    Embedding,
    ProfileVector,
    count_embeddings,
    count_subtrees,
    density,
    enumerate_subtrees,
    profile,
)
from .search import exhaustive_max_density, move_neighborhood
from .tree import (
    Tree,
    all_free_trees,
    branches_at,
    canonicalize,
    centers,
    classify,
    format_edge_list,
    hubs,
    is_isomorphic,
    parse_edge_list,
    radius,
)

__version__ = "0.1.0"
