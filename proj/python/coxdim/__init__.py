"""Simplicial cohomology and dimension bounds toolkit."""

from ._coxdim import (
    BuildError,
    FgAbelianGroup,
    Graph,
    InputError,
    SimplicialComplex,
    __version__,
    aut_bounds,
    barycentric_subdivision,
    check_hyperbolic,
    check_maximal_cover,
    check_no_dominating_vertex,
    check_one_ended,
    check_star_complements,
    cohomology,
    cone,
    connected_components,
    flag_complex,
    free_product_gd,
    full_subcomplex,
    gp_build_l,
    gp_build_l_flag_no_square,
    gp_verify,
    is_flag,
    one_skeleton,
    product_bounds,
    racg_certificate,
    relative_cohomology,
    set_threads,
    smith_normal_form,
    spine_bounds,
    spine_enumerate,
    spine_verify,
    tensor,
    tor1,
    vcd_davis,
)

__all__ = [
    "BuildError",
    "FgAbelianGroup",
    "Graph",
    "InputError",
    "SimplicialComplex",
    "__version__",
    "aut_bounds",
    "barycentric_subdivision",
    "check_hyperbolic",
    "check_maximal_cover",
    "check_no_dominating_vertex",
    "check_one_ended",
    "check_star_complements",
    "cohomology",
    "cone",
    "connected_components",
    "flag_complex",
    "free_product_gd",
    "full_subcomplex",
    "gp_build_l",
    "gp_build_l_flag_no_square",
    "gp_verify",
    "is_flag",
    "one_skeleton",
    "product_bounds",
    "racg_certificate",
    "relative_cohomology",
    "set_threads",
    "smith_normal_form",
    "spine_bounds",
    "spine_enumerate",
    "spine_verify",
    "tensor",
    "tor1",
    "vcd_davis",
]
