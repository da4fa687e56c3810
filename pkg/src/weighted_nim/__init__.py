"""Two-pile weighted Nim: rules, Grundy oracle, closed-form families,
Josephus cross-checks, verification sweeps, and a perfect-play engine."""

from .game import (
    DomainError,
    GameError,
    IllegalMove,
    MoveAction,
    NoMove,
    Pile,
    Position,
    apply_move,
    is_terminal,
    legal_moves,
    min_pile2_removal,
    move_rejection_reason,
    removal_bound,
    total_weight,
)
from .engine import (
    GrundyTable,
    best_move,
    clear_cache,
    grundy,
    grundy_table,
    is_p_position,
    mex,
    winning_moves,
)
from .families import (
    Family,
    GrundyClass,
    class_position,
    classify,
    enumerate_class,
    family_memberships,
    floor_log2,
    grundy_closed,
    odd_part,
)
from .josephus import (
    EliminationOrder,
    elimination_order,
    elimination_order_naive,
    f_s_closed,
    f_s_recursive,
    f_s_simulated,
    survivor,
)
from .verify import (
    Counterexample,
    VerificationReport,
    fault_injection_self_test,
    verify_correspondence,
    verify_grundy_equivalence,
    verify_josephus_forms,
    verify_lemma_inclusions,
    verify_move_lemmas,
    verify_partition,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "GameError",
    "IllegalMove",
    "MoveAction",
    "NoMove",
    "Pile",
    "Position",
    "apply_move",
    "is_terminal",
    "legal_moves",
    "min_pile2_removal",
    "move_rejection_reason",
    "removal_bound",
    "total_weight",
    "GrundyTable",
    "best_move",
    "clear_cache",
    "grundy",
    "grundy_table",
    "is_p_position",
    "mex",
    "winning_moves",
    "Family",
    "GrundyClass",
    "class_position",
    "classify",
    "enumerate_class",
    "family_memberships",
    "floor_log2",
    "grundy_closed",
    "odd_part",
    "EliminationOrder",
    "elimination_order",
    "elimination_order_naive",
    "f_s_closed",
    "f_s_recursive",
    "f_s_simulated",
    "survivor",
    "Counterexample",
    "VerificationReport",
    "fault_injection_self_test",
    "verify_correspondence",
    "verify_grundy_equivalence",
    "verify_josephus_forms",
    "verify_lemma_inclusions",
    "verify_move_lemmas",
    "verify_partition",
    "__version__",
]
