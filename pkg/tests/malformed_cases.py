"""Malformed documents with the error class and 1-based (line, col) each must report."""
from gsys.errors import (ArityMismatch, BadGluing, BadParameter, DomainNotClosed,
                         DuplicateElement, MalformedTable, ParseError, UnboundVariable,
                         UnknownName, UnknownVariable, ValidationError, VarSetMismatch)

HEAD = "magma Z2 = cyclic(2);\n"
SYS_A = "system s over Z2 vars {a} { a := a; }\n"

MALFORMED = {
    "unbalanced_brace": (HEAD + "system s over Z2 vars {a} {\n    a := a;\n", ParseError, (4, 1)),
    "missing_semicolon": ("magma Z2 = cyclic(2)\nfn f/1 over Z2 = [0, 1];", ParseError, (2, 1)),
    "bad_character": (HEAD + "system s over Z2 vars {a} { a := a $ a; }", ParseError, (2, 36)),
    "unknown_query_kind": (HEAD + "query q: frobnicate(x);", ParseError, (2, 10)),
    "unknown_system_op": (HEAD + "system s = mangle(a, b);", ParseError, (2, 12)),
    "eof_in_arguments": (HEAD + "query q: dep(", ParseError, (2, 14)),
    "classical_arity": ("classical M {\n    X: [x];\n    U: [u];\n    Y: [y];\n    I: [i];\n"
                        "    f: { x -> x; }\n    h: { x -> y; }\n    phi: { i, y -> i; }\n"
                        "    pi: { i -> u; }\n}", ParseError, (6, 10)),
    "duplicate_magma": (HEAD + "magma Z2 = cyclic(3);", ValidationError, (2, 1)),
    "second_rule": (HEAD + "system s over Z2 vars {a} {\n    a := a;\n    a := #0;\n}",
                    ValidationError, (4, 5)),
    "undeclared_variable": (HEAD + "system s over Z2 vars {a} {\n    a := b;\n}", UnboundVariable, (3, 5)),
    "missing_rule": (HEAD + "system s over Z2 vars {a, b} {\n    a := a;\n}", UnboundVariable, (2, 1)),
    "unknown_magma": ("system s over Q vars {a} { a := a; }", UnknownName, (1, 1)),
    "unknown_system_in_query": (HEAD + SYS_A + "query q: dep(t, {a}, {a});", UnknownName, (3, 14)),
    "unknown_query_variable": (HEAD + SYS_A + "query q: dep(s, {a}, {z});", UnknownVariable, (3, 22)),
    "query_signature": (HEAD + SYS_A + "query q: reducible(s, {a});", ArityMismatch, (3, 1)),
    "unknown_element": (HEAD + "system s over Z2 vars {a} { a := #7; }", BadParameter, (2, 29)),
    "function_arity": (HEAD + "fn f/2 over Z2 = [[0, 1], [1, 1]];\nsystem s over Z2 vars {a} { a := f(a); }",
                       ArityMismatch, (3, 29)),
    "short_op_table": ("magma M {\n    elements: [a, b];\n    op: [[a, b]];\n}", MalformedTable, (1, 1)),
    "duplicate_element": ("magma M {\n    elements: [a, a];\n    op: [[a, a], [a, a]];\n}",
                          DuplicateElement, (1, 1)),
    "domain_not_closed": (HEAD + "system s over Z2 vars {a} domain { {a=0}; } { a := #1; }",
                          DomainNotClosed, (2, 1)),
    "cover_misses_variable": (HEAD + "system s over Z2 vars {a, b} { a := a; b := b; }\n"
                              "cover C = {a} | {a};\nquery q: reducible(s, C);", VarSetMismatch, (4, 1)),
    "partial_sensor_map": ("classical M {\n    X: [x, z];\n    U: [u];\n    Y: [y];\n    I: [i];\n"
                           "    f: { x, u -> x; }\n    h: { x -> y; z -> y; }\n    phi: { i, y -> i; }\n"
                           "    pi: { i -> u; }\n}", BadParameter, (1, 1)),
    "glue_outside_vars": (HEAD + SYS_A + "system q over Z2 vars {b} { b := b; }\n"
                          "system r = glue(s, q, {z -> b});", BadGluing, (4, 1)),
    "team_over_wrong_vars": (HEAD + SYS_A + "team T over Z2 vars {a, b} { {a=0, b=0}; }\n"
                             "query q: dep(s, {a}, {a}, T);", UnknownVariable, (4, 27)),
}
