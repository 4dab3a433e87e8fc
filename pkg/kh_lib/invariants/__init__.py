from .jones import (
    DEFAULT_ORACLE_CAP,
    UNKNOT_POLY,
    kauffman_bracket,
    kauffman_jones,
    graded_euler,
    normalized_jones,
    determinant,
    determinant_check,
)
from .detection import (
    UNKNOT_CABLE_RANK,
    NONTRIVIAL_CABLE_RANK,
    UNKNOT_COLORED_RANK,
    NONTRIVIAL_COLORED_RANK,
    OracleCheck,
    DetectionReport,
    verdict,
    colored_rank_interval,
    rank_splitting_check,
    compute_report,
    detect_cable_ranks,
    detect_unknot,
)

__all__ = [
    # Polynomials
    "DEFAULT_ORACLE_CAP",
    "UNKNOT_POLY",
    "kauffman_bracket",
    "kauffman_jones",
    "graded_euler",
    "normalized_jones",
    "determinant",
    "determinant_check",

    # Detection
    "UNKNOT_CABLE_RANK",
    "NONTRIVIAL_CABLE_RANK",
    "UNKNOT_COLORED_RANK",
    "NONTRIVIAL_COLORED_RANK",
    "OracleCheck",
    "DetectionReport",
    "verdict",
    "colored_rank_interval",
    "rank_splitting_check",
    "compute_report",
    "detect_cable_ranks",
    "detect_unknot",
]
