from .cable_types import CableSpec
from .cabling import (
    cable_spec,
    full_twist_word,
    blackboard_cable,
    full_twist_insertion,
    seifert_framed_cable,
)

__all__ = [
    "CableSpec",
    "cable_spec",
    "full_twist_word",
    "blackboard_cable",
    "full_twist_insertion",
    "seifert_framed_cable",
]
