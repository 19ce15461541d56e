"""Nilpotent semigroups of small coclass: lists, tables, keys and counts."""

from ._coclass import (
    MulTable,
    analyze,
    bruteforce_count,
    canonical_key,
    coclass1_list,
    coclass2_gen2_list,
    coclass2_gen3_list,
    dual,
    are_equivalent,
    format_table,
    formula_count,
    is_self_dual,
    parse_presentation,
    parse_table,
    realize,
    table1_reference,
    Error,
)

__all__ = [
    "MulTable",
    "analyze",
    "bruteforce_count",
    "canonical_key",
    "coclass1_list",
    "coclass2_gen2_list",
    "coclass2_gen3_list",
    "dual",
    "are_equivalent",
    "format_table",
    "formula_count",
    "is_self_dual",
    "parse_presentation",
    "parse_table",
    "realize",
    "table1_reference",
    "Error",
]
