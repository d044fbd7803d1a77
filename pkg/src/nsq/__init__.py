"""Classification toolkit for normal sequences.

Binary-sequence NPAF algebra, quad codes, the order-512 symmetry group,
the twelve-condition canonical form, exhaustive class enumeration, Golay
pair search, and a verifier for the bundled reference tables.
"""

from .core import (
    BaseQuadruple,
    BinarySeq,
    NormalQuadruple,
    NpafTable,
    SequenceError,
    alternate,
    concat,
    embed_bs,
    is_base_sequences,
    is_normal,
    negate,
    npaf,
    npaf_sum,
    reverse,
    three_squares_feasible,
)
from .equivalence import (
    CanonicalFormError,
    Transform,
    TRANSFORMS,
    apply,
    are_equivalent,
    canonical_violation,
    canonicalize,
    is_canonical,
    is_golay_type,
    orbit,
)
from .golay import GolayPair, embed, golay_pairs, golay_type_class_count, two_embeddings_equivalent
from .group import generators, orbits_match_classes, realized_order, verify_relations
from .quadcodec import (
    CodeError,
    QuadCode,
    compose_pair,
    decode_quadruple,
    decompose_pair,
    encode_quadruple,
    format_code,
    parse_code,
    symmetry_type,
)
from .search import ClassRecord, enumerate_classes, summarize
from .tables import diff_against_search, load_tables, verify_tables

__version__ = "0.1.0"
