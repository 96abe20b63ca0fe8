"""Exact crystal combinatorics, the Cartan braiding, higher-rank graphs, and
a shift-operator model of the q=0 quantized coordinate ring."""

from .braiding import (
    cartan_braiding,
    left_end,
    left_ends,
    longest_permutation_word,
    pair_braiding,
    right_end,
    right_ends,
    sigma_word,
)
from .crystal import (
    Crystal,
    TensorCrystal,
    apply_kashiwara,
    canonical_morphism,
    cartan_project,
    components,
    highest_weight_crystal,
    tensor_crystal,
    tensor_of,
)
from .hrgraph import (
    ColourSet,
    GraphPath,
    HigherRankGraph,
    build_graph,
    colour_set,
    graph_tables_from_json,
    weyl_vertex_map,
)
from .report import Check, VerificationReport
from .rootdata import (
    CartanTypeError,
    RootDatum,
    WeylGroup,
    WeylSizeError,
    bilinear_form,
    build_root_datum,
    weyl_dim,
    weyl_group,
)
from .soibelman import SoibelmanModel, restriction_limit, string_data, strings
from .toeplitz import OperatorElement, projection_p0, shift_product, sl2_limit

__version__ = "0.1.0"

__all__ = [
    "CartanTypeError",
    "Check",
    "ColourSet",
    "Crystal",
    "GraphPath",
    "HigherRankGraph",
    "OperatorElement",
    "RootDatum",
    "SoibelmanModel",
    "TensorCrystal",
    "VerificationReport",
    "WeylGroup",
    "WeylSizeError",
    "apply_kashiwara",
    "bilinear_form",
    "build_graph",
    "build_root_datum",
    "canonical_morphism",
    "cartan_braiding",
    "cartan_project",
    "colour_set",
    "components",
    "graph_tables_from_json",
    "highest_weight_crystal",
    "left_end",
    "left_ends",
    "longest_permutation_word",
    "pair_braiding",
    "projection_p0",
    "restriction_limit",
    "right_end",
    "right_ends",
    "shift_product",
    "sigma_word",
    "sl2_limit",
    "string_data",
    "strings",
    "tensor_crystal",
    "tensor_of",
    "weyl_dim",
    "weyl_group",
    "weyl_vertex_map",
]
