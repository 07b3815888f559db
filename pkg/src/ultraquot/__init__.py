"""Combinatorics of ultragraphs and their quotients by admissible pairs."""

from .core import (
    INF,
    CapacityError,
    EdgeClass,
    Ultragraph,
    UltragraphError,
    VertexKind,
    build_ultragraph,
    generated_algebra,
    out_multiplicity,
    vertex_kind,
)
from .dualgraph import (
    DualGraph,
    EdgeCopy,
    FSet,
    R_omega,
    build_dual_graph,
    gamma_sets,
    graph_condition_L,
    make_fset,
    r_omega,
)
from .heredity import (
    AdmissiblePair,
    breaking_vertices,
    breaking_vertices_by_range_sets,
    enumerate_admissible_pairs,
    is_admissible,
    is_hereditary,
    is_saturated,
    saturated_hereditary_closure,
    saturated_hereditary_sets,
)
from .ideals import (
    IdealDescriptor,
    IdealPoset,
    PrimitivityVerdict,
    Rule,
    classify_ideals,
    construct_K_from_loop,
    construct_K_layers,
    ideal_poset,
    is_primitive,
    pair_leq,
    primitive_ideals,
    quotient_by_ideal,
)
from .paths import (
    ConditionReport,
    Loop,
    condition_K,
    condition_L,
    downward_directed,
    is_loop,
    is_path,
    is_subpath,
    loops_without_exit_in_complement,
    reaches,
)
from .quotient import (
    ClassSet,
    ExtendedUltragraph,
    QuotientUltragraph,
    bar,
    build_quotient,
    class_of,
    class_op,
    extend,
    singular_vertices,
)
from .ugformat import UgSyntaxError, format_ug, load_ug, parse_ug, read_ug

__version__ = "0.1.0"
