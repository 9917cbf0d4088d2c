from .freeness import (
    check_certificate,
    family_min_order,
    family_quotient,
    find_violation,
    find_violation_bits,
    is_f_free,
    is_f_free_bits,
    parse_family,
)
from .matching import claw_center, contains_subgraph, find_clique, find_subgraph, is_claw_free
from .models import (
    ISOLATION,
    Certificate,
    CliqueFamily,
    CyclesFamily,
    ExplicitFamily,
    PatternFamily,
    StarFamily,
    TreesFamily,
)

__all__ = [
    "ISOLATION",
    "Certificate",
    "CliqueFamily",
    "CyclesFamily",
    "ExplicitFamily",
    "PatternFamily",
    "StarFamily",
    "TreesFamily",
    "check_certificate",
    "claw_center",
    "contains_subgraph",
    "family_min_order",
    "family_quotient",
    "find_clique",
    "find_subgraph",
    "find_violation",
    "find_violation_bits",
    "is_claw_free",
    "is_f_free",
    "is_f_free_bits",
    "parse_family",
]
