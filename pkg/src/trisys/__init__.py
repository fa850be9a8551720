"""Resolvable triple systems of prescribed 3-rank.

Construction by grouped composition, exact GF(3)/GF(p) verification,
resolution search by exact cover, rank forcing, and exact big-integer
counting bounds.
"""

from .bounds import (
    BoundReport,
    agl_order,
    bound_rcw,
    bound_thm1,
    bound_thm1prime,
    bound_thm2,
    example_n3_bound,
    gl2_order,
    min_rank,
)
from .composition import (
    Decomposition,
    SplitDecomposition,
    ag_blocks,
    compose,
    compose_resolution,
    compose_split,
    decompose,
    random_decomposition,
    split_ag,
    split_standard_resolution,
)
from .constructions import (
    AffineGeometry,
    affine_geometry,
    kts15,
    latin_with_mate,
    resolvable_sts,
    small_sts,
)
from .designs import (
    BlockDesign,
    LatinSquare,
    Resolution,
    StsInstance,
    TdInstance,
    VerificationReport,
    are_orthogonal,
    dual_space,
    incidence_matrix,
    p_rank,
    permute_design,
    permute_sts,
    resolve_td,
    td_from_latin,
    verify_resolution,
    verify_sts,
    verify_td,
)
from .gf3 import (
    Subspace,
    generator_gvk,
    intersect_dim,
    is_orthogonal,
    null_space,
    rank,
    row_space,
)
from .rankfix import (
    PointPermutation,
    StructureViolation,
    dual_canonicalize,
    force_exact_rank,
    mix_matrix,
    perm_intersection,
    verify_dual_structure,
)
from .resolution import SearchLimits, SearchOutcome, find_resolution, search_resolution

__all__ = [
    "AffineGeometry",
    "BlockDesign",
    "BoundReport",
    "Decomposition",
    "LatinSquare",
    "PointPermutation",
    "Resolution",
    "SearchLimits",
    "SearchOutcome",
    "SplitDecomposition",
    "StructureViolation",
    "StsInstance",
    "Subspace",
    "TdInstance",
    "VerificationReport",
    "affine_geometry",
    "ag_blocks",
    "agl_order",
    "are_orthogonal",
    "bound_rcw",
    "bound_thm1",
    "bound_thm1prime",
    "bound_thm2",
    "compose",
    "compose_resolution",
    "compose_split",
    "decompose",
    "dual_canonicalize",
    "dual_space",
    "example_n3_bound",
    "find_resolution",
    "force_exact_rank",
    "generator_gvk",
    "gl2_order",
    "incidence_matrix",
    "intersect_dim",
    "is_orthogonal",
    "kts15",
    "latin_with_mate",
    "min_rank",
    "mix_matrix",
    "null_space",
    "p_rank",
    "perm_intersection",
    "permute_design",
    "permute_sts",
    "rank",
    "random_decomposition",
    "resolvable_sts",
    "resolve_td",
    "row_space",
    "search_resolution",
    "small_sts",
    "split_ag",
    "split_standard_resolution",
    "td_from_latin",
    "verify_dual_structure",
    "verify_resolution",
    "verify_sts",
    "verify_td",
]
