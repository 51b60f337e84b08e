"""McKay graphs of finite subgroups of SU(2) and SU(2) x SU(2), built from unit quaternions."""

from .characters import CharacterError, CharacterTable, character_table, inner_product, natural_character
from .diagram import (
    Definiteness,
    DiagramError,
    DiagramType,
    canonical_null_vector,
    catalog,
    classify,
    definiteness,
    detect_doubled,
    detect_product,
    eigenspace_dim,
    order_from_diagram,
)
from .groups import (
    FiniteSubgroup,
    GroupError,
    binary_dihedral,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    conjugacy_classes,
    cyclic,
    diagonal,
    from_generators,
    product,
)
from .mckay import McKayGraph, mckay_graph, parity_bipartition, reduced
from .quat import QuatPair, Quaternion
from .serialize import dot, emit_dot, emit_graph_json, graph_json, read_graph_json
from .specs import SpecError, build_group, parse_spec
from .verify import (
    VerificationReport,
    analyze,
    check_dimension_multiset,
    survey,
    verify_applications,
    verify_parity,
    verify_so4,
    verify_su2,
)

__version__ = "0.1.0"
