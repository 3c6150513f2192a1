"""hierbrack: bracketing linearizations for dependency trees.

Encode dependency trees (and graphs) as per-token bracket labels and decode
them back: the unbounded naive bracketing, the 16-label 4-bit-equivalent
bracketing, the 12-label optimal hierarchical bracketing built on the
proper rope cover, and an indexed extension covering arbitrary
non-projective structures.  Ships with CoNLL-U I/O, a pseudo-projective
transformation, robust decoding for ill-formed label sequences, evaluation
and coverage metrics, and brute-force oracles for testing.
"""

__version__ = "0.1.0"

from .brackets import (
    BracketSymbol,
    FourBitLabel,
    Label,
    LabelSequence,
    canonicalize,
    fourbit_to_label,
    label_to_fourbit,
    parse_label,
    render_label,
)
from .conllu import read_conllu, write_conllu
from .decoder import (
    DecodeCounters,
    DecodeRun,
    Diagnostic,
    decode_indexed,
    decode_noncrossing,
    decode_robust,
    run_decoder,
)
from .deptree import (
    Arc,
    DepGraph,
    covers,
    crosses,
    find_crossing,
    is_projective,
    is_projective_by_descendants,
    leans_on,
    tree_violation,
    validate_tree,
)
from .encoder import (
    SCHEMES,
    cover_for_scheme,
    decode_for_scheme,
    encode,
    encode_noncrossing,
    encode_nonprojective,
    normalize_scheme,
)
from .errors import (
    ConlluError,
    CoverError,
    EncodingConsistencyError,
    HierbrackError,
    LabelParseError,
    MaxIndexExceededError,
    NonProjectiveInputError,
    TreeStructureError,
)
from .metrics import (
    EncodingStats,
    Score,
    empirical_coverage,
    encoding_stats,
    max_superbracket_depth,
    rope_thickness,
    score,
    theoretical_coverage,
)
from .pseudoproj import LIFT_SEP, deprojectivize, projectivize
from .ropecover import (
    RopeCover,
    fourbit_rope_cover,
    is_compact,
    is_proper,
    is_rope_cover,
    min_rope_cover_size,
    naive_rope_cover,
    proper_rope_cover,
)
from .testkit import enumerate_trees, random_tree
