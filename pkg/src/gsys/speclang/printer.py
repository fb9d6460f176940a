"""Canonical formatting of documents.  Comments are not preserved."""
from ..system import term_str
from .ast import (ClassicalDef, ConfigLit, CoverDef, FnDef, GlueLit, IntLit, ListLit,
                  MagmaBuiltin, MagmaDef, QueryDef, Ref, SystemDef, SystemExpr, TeamDef,
                  VarSetLit)


def _varset(names):
    return "{" + ", ".join(names) + "}"


def _config(c: ConfigLit):
    return "{" + ", ".join(f"{x}={v}" for x, v in c.pairs) + "}"


def _matrix(node):
    if isinstance(node, tuple):
        return "[" + ", ".join(_matrix(c) for c in node) + "]"
    return node


def _arg(a):
    if isinstance(a, Ref):
        return a.name
    if isinstance(a, IntLit):
        return str(a.value)
    if isinstance(a, VarSetLit):
        return _varset(a.names)
    if isinstance(a, ConfigLit):
        return _config(a)
    if isinstance(a, GlueLit):
        return "{" + ", ".join(f"{x} -> {y}" for x, y in a.pairs) + "}"
    if isinstance(a, ListLit):
        return "[" + ", ".join(_arg(i) for i in a.items) + "]"
    raise TypeError(a)


def _item(it) -> str:
    if isinstance(it, MagmaDef):
        rows = ",\n".join("        " + _matrix(r) for r in it.table)
        return (f"magma {it.name} {{\n    elements: [{', '.join(it.elements)}];\n"
                f"    op: [\n{rows}\n    ];\n}}")
    if isinstance(it, MagmaBuiltin):
        return f"magma {it.name} = {it.kind}({', '.join(str(a) for a in it.args)});"
    if isinstance(it, FnDef):
        return f"fn {it.name}/{it.arity} over {it.magma} = {_matrix(it.table)};"
    if isinstance(it, SystemDef):
        head = f"system {it.name} over {it.magma} vars {_varset(it.vars)}"
        if it.domain is not None:
            head += " domain {\n" + "".join(f"    {_config(c)};\n" for c in it.domain) + "}"
        if it.table is not None:
            body = "".join(f"    {_config(a)} -> {_config(b)};\n" for a, b in it.table)
            return f"{head} table {{\n{body}}}"
        body = "".join(f"    {r.var} := {term_str(r.term)};\n" for r in it.rules)
        return f"{head} {{\n{body}}}"
    if isinstance(it, SystemExpr):
        return f"system {it.name} = {it.op}({', '.join(_arg(a) for a in it.args)});"
    if isinstance(it, TeamDef):
        body = "".join(f"    {_config(c)};\n" for c in it.rows)
        return f"team {it.name} over {it.magma} vars {_varset(it.vars)} {{\n{body}}}"
    if isinstance(it, CoverDef):
        return f"cover {it.name} = {_varset(it.X)} | {_varset(it.Y)};"
    if isinstance(it, ClassicalDef):
        lines = [f"classical {it.name} {{"]
        for key in ("X", "U", "Y", "I"):
            lines.append(f"    {key}: [{', '.join(getattr(it, key))}];")
        for key in ("f", "h", "phi", "pi"):
            lines.append(f"    {key}: {{")
            for args, v in getattr(it, key):
                lines.append(f"        {', '.join(args)} -> {v};")
            lines.append("    }")
        lines.append("}")
        return "\n".join(lines)
    if isinstance(it, QueryDef):
        return f"query {it.name}: {it.kind}({', '.join(_arg(a) for a in it.args)});"
    raise TypeError(it)


def pretty_print(doc) -> str:
    return "\n\n".join(_item(it) for it in doc.items) + "\n"
