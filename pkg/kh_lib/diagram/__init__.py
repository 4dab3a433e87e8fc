from .crossing import Crossing, ZERO_SMOOTHING, ONE_SMOOTHING
from .link_diagram import (
    LinkDiagram,
    build_diagram,
    writhe,
    mirror,
    disjoint_union,
    set_basepoint,
    with_default_basepoint,
    relabel,
    linking_number,
    verify_signs,
)
from .pd_code import parse_pd, to_pd, read_pd_source
from .braid import (
    braid_closure,
    random_braid_word,
    random_braid_diagram,
    random_knot_diagram,
    insert_cancelling_pair,
    apply_braid_relation,
    stabilize,
)
from .knot_table import KnotTableRow, load_knot_table, BUNDLED_TABLE

__all__ = [
    # Diagrams
    "Crossing",
    "ZERO_SMOOTHING",
    "ONE_SMOOTHING",
    "LinkDiagram",
    "build_diagram",
    "writhe",
    "mirror",
    "disjoint_union",
    "set_basepoint",
    "with_default_basepoint",
    "relabel",
    "linking_number",
    "verify_signs",

    # PD codes
    "parse_pd",
    "to_pd",
    "read_pd_source",

    # Braids
    "braid_closure",
    "random_braid_word",
    "random_braid_diagram",
    "random_knot_diagram",
    "insert_cancelling_pair",
    "apply_braid_relation",
    "stabilize",

    # Knot tables
    "KnotTableRow",
    "load_knot_table",
    "BUNDLED_TABLE",
]
