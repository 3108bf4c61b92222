"""Bijections on 2n-step simple-random-walk paths.

Thin Python layer over the C++ core: path parsing and validation, the eight
path families with exact counting and uniform sampling, the two bijections
with their decomposition markers, exhaustive verification, and SVG galleries.
"""

from ._pathmorph import (  # noqa: F401
    DEFAULT_EXHAUSTIVE_LIMIT,
    AscentDecomposition,
    Path,
    PathError,
    RenderSpec,
    Sampler,
    SetId,
    StopTimes,
    ValleyDecomposition,
    __version__,
    apply_bijection,
    check_bijection,
    check_catalan_identity,
    check_counts,
    check_theorem_invariants,
    count_by_enumeration,
    count_formula,
    decompose_ascents,
    decompose_valleys,
    enumerate_members,
    is_member,
    parse,
    path_from_steps,
    phi1,
    phi1_full,
    phi2,
    psi1,
    psi1_full,
    psi2,
    render_gallery,
    render_pair,
    sample,
    serialize,
    set_from_name,
    steps_from_path,
    stop_times,
    validate,
    zero_touch_count,
)
