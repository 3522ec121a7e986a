from flag_reconstruction.canonical import (
    brute_force_canonical_form,
    canonical_form,
    canonical_labeling,
    find_isomorphism,
    is_isomorphic,
)
from flag_reconstruction.coxeter import (
    condition3_vanishing,
    coxeter_cohomology_if_fg,
    is_finite_group,
    is_irreducible,
    is_join_splittable_bruteforce,
    is_spherical,
    is_virtual_pd,
    join_decomposition,
    lemma_key_crosscheck,
    nerve_system,
    spherical_subsets,
    vpd_dimension_from_cohomology,
)
from flag_reconstruction.datamodel.complex import SimplicialComplex
from flag_reconstruction.datamodel.graph import CanonicalForm, Graph
from flag_reconstruction.datamodel.groups import AbelianGroup, GradedGroups
from flag_reconstruction.families import (
    complete,
    complete_multipartite,
    cross_polytope,
    cycle,
    empty,
    generate,
    icosahedron,
    path,
    torus_grid,
    wheel,
)
from flag_reconstruction.flag_complex import (
    antistar,
    clique_complex,
    complexes_isomorphic,
    euler_characteristic,
    f_vector,
    full_subcomplex,
    is_flag,
    link,
    one_skeleton,
)
from flag_reconstruction.formats import (
    emit_graph6,
    parse_complex,
    parse_edge_list,
    parse_graph6,
)
from flag_reconstruction.graphs import (
    build_graph,
    complement,
    disjoint_union,
    full_subgraph,
    join,
    relabel,
    vertex_deleted,
)
from flag_reconstruction.homology import (
    betti_numbers,
    boundary_matrix,
    local_homology,
    reduced_cohomology,
    reduced_euler_characteristic,
    reduced_homology,
    relative_homology,
)
from flag_reconstruction.manifold import (
    boundary_of,
    detect_dimension,
    is_generalized_homology_sphere,
    is_homology_manifold,
    is_pure,
)
from flag_reconstruction.reconstruction import (
    are_hypomorphic,
    brute_force_oracle,
    certify_reconstructible,
    deck,
    enumerate_graphs,
    reconstruct_from_card,
    reconstruct_from_deck,
    verify_hypomorphic_partner,
)
from flag_reconstruction.report import analyze_graph
from flag_reconstruction.smith import smith_normal_form

__all__ = [
    "AbelianGroup",
    "CanonicalForm",
    "GradedGroups",
    "Graph",
    "SimplicialComplex",
    "analyze_graph",
    "antistar",
    "are_hypomorphic",
    "betti_numbers",
    "boundary_matrix",
    "boundary_of",
    "brute_force_canonical_form",
    "brute_force_oracle",
    "build_graph",
    "canonical_form",
    "canonical_labeling",
    "certify_reconstructible",
    "clique_complex",
    "complement",
    "complete",
    "complete_multipartite",
    "complexes_isomorphic",
    "condition3_vanishing",
    "coxeter_cohomology_if_fg",
    "cross_polytope",
    "cycle",
    "deck",
    "detect_dimension",
    "disjoint_union",
    "emit_graph6",
    "empty",
    "enumerate_graphs",
    "euler_characteristic",
    "f_vector",
    "find_isomorphism",
    "full_subcomplex",
    "full_subgraph",
    "generate",
    "icosahedron",
    "is_finite_group",
    "is_flag",
    "is_generalized_homology_sphere",
    "is_homology_manifold",
    "is_irreducible",
    "is_isomorphic",
    "is_join_splittable_bruteforce",
    "is_pure",
    "is_spherical",
    "is_virtual_pd",
    "join",
    "join_decomposition",
    "lemma_key_crosscheck",
    "link",
    "local_homology",
    "nerve_system",
    "one_skeleton",
    "parse_complex",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "reconstruct_from_card",
    "reconstruct_from_deck",
    "reduced_cohomology",
    "reduced_euler_characteristic",
    "reduced_homology",
    "relabel",
    "relative_homology",
    "smith_normal_form",
    "spherical_subsets",
    "torus_grid",
    "verify_hypomorphic_partner",
    "vertex_deleted",
    "vpd_dimension_from_cohomology",
    "wheel",
]
