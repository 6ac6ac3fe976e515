"""knotkit: exact combinatorial knot-diagram toolkit.

PD codes, Kauffman bracket / Jones polynomial, Goeritz signature,
Reidemeister-move search with replayable unknot certificates, and
unknotting-number bounds.
"""

from .certify import (
    Certificate,
    SearchLimits,
    certify_unknot,
    prove_knotted,
    replay,
    simplify_greedy,
)
from .codec import canonical_code, canonical_instance, emit_pd, parse_pd
from .diagram import (
    UNKNOT,
    Diagram,
    connected_sum,
    crossing_change,
    faces,
    mirror,
    sign,
    torus_knot,
    validate,
    writhe,
)
from .invariants import (
    MIRROR_JONES,
    SAME_JONES,
    UNRELATED,
    GoeritzData,
    bracket_fast,
    bracket_oracle,
    chiral_by_jones,
    detect_mirror_pair,
    goeritz_matrix,
    jones,
    signature,
    unknotting_lower_bound,
)
from .moves import Move, apply_move, enumerate_moves, scramble
from .poly import Laurent
from .unknotting import UnknottingReport, apply_changes, report, unknotting_upper

__all__ = [
    "Certificate",
    "Diagram",
    "GoeritzData",
    "Laurent",
    "MIRROR_JONES",
    "Move",
    "SAME_JONES",
    "SearchLimits",
    "UNKNOT",
    "UNRELATED",
    "UnknottingReport",
    "apply_changes",
    "apply_move",
    "bracket_fast",
    "bracket_oracle",
    "canonical_code",
    "canonical_instance",
    "certify_unknot",
    "chiral_by_jones",
    "connected_sum",
    "crossing_change",
    "detect_mirror_pair",
    "emit_pd",
    "enumerate_moves",
    "faces",
    "goeritz_matrix",
    "jones",
    "mirror",
    "parse_pd",
    "prove_knotted",
    "replay",
    "report",
    "scramble",
    "sign",
    "signature",
    "simplify_greedy",
    "torus_knot",
    "unknotting_lower_bound",
    "unknotting_upper",
    "validate",
    "writhe",
]
