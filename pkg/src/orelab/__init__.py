"""orelab: exact desk-scale workbench for Ore compositions, clique packings,
and potential functions of color-critical graphs."""

from .census import (
    Corpus,
    census_critical,
    corpus_from_graphs,
    corpus_from_lines,
    enumerate_graphs,
    graph_classes,
    random_graph,
)
from .coloring import (
    EdgeCountCheck,
    PartialColoring,
    Subgraph,
    chromatic_number,
    color_partitions,
    colorable,
    edge_count_lemma_check,
    f_choosable_bruteforce,
    find_critical_subgraphs,
    first_coloring,
    is_k_critical,
)
from .discharging import (
    ChargeLedger,
    ChargeReport,
    RoleReport,
    VertexCharge,
    apply_rules,
    charge_report,
    classify_degree_k1,
    initial_charge,
)
from .errors import SizeCapError
from .graphs import (
    CanonicalForm,
    Graph,
    GraphFormatError,
    bits_of,
    canonical_form,
    canonical_key,
    cliques_of_size,
    embeddings,
    graph6_decode,
    graph6_encode,
    has_clique,
    identify,
    is_isomorphic,
    isomorphism,
    mask_of,
    read_graph6_lines,
    to_dot,
)
from .orekit import (
    Decomposition,
    Gadget,
    Leaf,
    Node,
    OreTree,
    clear_recognition_cache,
    gadget_catalog,
    is_k_ore,
    key_vertices,
    make_gadget,
    ore_catalog,
    ore_compose,
    ore_decompositions,
    random_ore_tree,
    realize,
    tree_dumps,
    tree_from_json,
    tree_k,
    tree_loads,
    tree_nodes,
    tree_to_json,
)
from .packing import PackingWitness, check_witness, compute_T, compute_T_bruteforce
from .potential import (
    CompletePotentialTable,
    PotentialParams,
    complete_graph_T,
    complete_potential,
    complete_potentials,
    eps_edge_bound,
    ky_edge_bound,
    main_potential_bound,
    rho,
    rho_ky,
    rho_subset,
    rho_value,
)
from .structure import (
    Cluster,
    CollapsibilityResult,
    ColorReduction,
    EdgeAddition,
    ExtensionRecord,
    NearClique,
    boundary,
    build_extension,
    clone,
    cluster_of,
    clusters,
    collapsibility,
    color_reduce,
    edge_between,
    find_diamonds_emeralds,
    find_edge_addition,
    mic,
    minimum_colorings,
    size_triple,
    smaller,
    twin_pairs,
)
from .suites import DEFAULT_SEED, SUITE_IDS, SuiteResult, SuiteRow, run_suite

__all__ = [
    "CanonicalForm",
    "ChargeLedger",
    "ChargeReport",
    "Cluster",
    "CollapsibilityResult",
    "ColorReduction",
    "CompletePotentialTable",
    "Corpus",
    "DEFAULT_SEED",
    "Decomposition",
    "EdgeAddition",
    "EdgeCountCheck",
    "ExtensionRecord",
    "Gadget",
    "Graph",
    "GraphFormatError",
    "Leaf",
    "NearClique",
    "Node",
    "OreTree",
    "PackingWitness",
    "PartialColoring",
    "PotentialParams",
    "RoleReport",
    "SUITE_IDS",
    "SizeCapError",
    "Subgraph",
    "SuiteResult",
    "SuiteRow",
    "VertexCharge",
    "apply_rules",
    "bits_of",
    "boundary",
    "build_extension",
    "canonical_form",
    "canonical_key",
    "census_critical",
    "charge_report",
    "check_witness",
    "chromatic_number",
    "classify_degree_k1",
    "clear_recognition_cache",
    "cliques_of_size",
    "clone",
    "cluster_of",
    "clusters",
    "collapsibility",
    "color_partitions",
    "color_reduce",
    "colorable",
    "complete_graph_T",
    "complete_potential",
    "complete_potentials",
    "compute_T",
    "compute_T_bruteforce",
    "corpus_from_graphs",
    "corpus_from_lines",
    "edge_between",
    "edge_count_lemma_check",
    "embeddings",
    "enumerate_graphs",
    "eps_edge_bound",
    "f_choosable_bruteforce",
    "find_critical_subgraphs",
    "find_diamonds_emeralds",
    "find_edge_addition",
    "first_coloring",
    "gadget_catalog",
    "graph6_decode",
    "graph6_encode",
    "graph_classes",
    "has_clique",
    "identify",
    "initial_charge",
    "is_isomorphic",
    "is_k_critical",
    "is_k_ore",
    "isomorphism",
    "key_vertices",
    "ky_edge_bound",
    "main_potential_bound",
    "make_gadget",
    "mask_of",
    "mic",
    "minimum_colorings",
    "ore_catalog",
    "ore_compose",
    "ore_decompositions",
    "random_graph",
    "random_ore_tree",
    "read_graph6_lines",
    "realize",
    "rho",
    "rho_ky",
    "rho_subset",
    "rho_value",
    "run_suite",
    "size_triple",
    "smaller",
    "to_dot",
    "tree_dumps",
    "tree_from_json",
    "tree_k",
    "tree_loads",
    "tree_nodes",
    "tree_to_json",
    "twin_pairs",
]

__version__ = "0.1.0"
