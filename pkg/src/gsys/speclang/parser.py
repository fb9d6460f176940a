"""Tokenizer and recursive-descent parser for ``.gsys`` documents.

Grammar sketch::

    file    := item*
    item    := magma | fn | system | team | cover | classical | query
    magma   := "magma" NAME "{" "elements" ":" "[" words "]" ";" "op" ":" matrix ";" "}"
             | "magma" NAME "=" BUILTIN "(" args ")" ";"
    fn      := "fn" NAME "/" INT "over" NAME "=" matrix ";"
    system  := "system" NAME "over" NAME "vars" varset ["domain" "{" (config ";")* "}"]
               ( "{" (VAR ":=" term ";")* "}" | "table" "{" (config "->" config ";")* "}" )
             | "system" NAME "=" OP "(" args ")" ";"
    team    := "team" NAME "over" NAME "vars" varset "{" (config ";")* "}"
    cover   := "cover" NAME "=" varset "|" varset ";"
    query   := "query" NAME ":" KIND "(" args ")" ";"
    term    := atom (("•" | ".") atom)*
    atom    := VAR | "#" ELEM | NAME "(" terms ")" | "(" term ")"

Comments start with ``//`` and run to the end of the line.
"""
import re

from ..errors import ParseError
from ..system import Call, Const, Op, Var
from .ast import (BUILTIN_MAGMAS, QUERY_KINDS, SYSTEM_OPS, ClassicalDef, ConfigLit,
                  CoverDef, Document, FnDef, GlueLit, IntLit, ListLit, MagmaBuiltin,
                  MagmaDef, QueryDef, Ref, Rule, SystemDef, SystemExpr, TeamDef, VarSetLit)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>//[^\n]*)
  | (?P<sym>:=|->|[{}\[\]();:,=#/|•.])
  | (?P<word>[A-Za-z0-9_][A-Za-z0-9_']*)
""", re.VERBOSE)

KEYWORDS = ("magma", "fn", "system", "team", "cover", "classical", "query")


class Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    @property
    def end(self):
        return self.line, self.col + len(self.text)

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def tokenize(text: str) -> list:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise ParseError(f"unexpected character {text[pos]!r}", (line, col, line, col + 1))
        kind = mt.lastgroup
        s = mt.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind in ("sym", "word"):
                tokens.append(Token(kind, s, line, col))
            col += len(s)
        pos = mt.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


def _describe(tok):
    return "end of input" if tok.kind == "eof" else repr(tok.text)


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, *texts):
        return self.tok.kind == "sym" and self.tok.text in texts or \
            self.tok.kind == "word" and self.tok.text in texts

    def error(self, expected):
        t = self.tok
        exp = tuple(expected)
        msg = f"expected {' or '.join(exp)}, found {_describe(t)}"
        raise ParseError(msg, (t.line, t.col, t.end[0], t.end[1]), exp)

    def expect(self, *texts):
        if self.at(*texts):
            t = self.tok
            self.i += 1
            return t
        self.error([repr(x) for x in texts])

    def word(self, what="a name"):
        t = self.tok
        if t.kind != "word":
            self.error([what])
        self.i += 1
        return t

    def ident(self, what="an identifier"):
        t = self.word(what)
        if t.text[0].isdigit():
            raise ParseError(f"{what} must start with a letter or '_', found {t.text!r}",
                             (t.line, t.col, t.end[0], t.end[1]), (what,))
        return t

    def integer(self):
        t = self.tok
        if t.kind != "word" or not t.text.isdigit():
            self.error(["an integer"])
        self.i += 1
        return int(t.text)

    def span_from(self, start):
        last = self.toks[self.i - 1]
        return (start.line, start.col) + last.end

    # -- top level
    def document(self) -> Document:
        items = []
        while self.tok.kind != "eof":
            items.append(self.item())
        return Document(tuple(items))

    def item(self):
        t = self.tok
        if t.kind == "word" and t.text in KEYWORDS:
            return getattr(self, "p_" + t.text)()
        self.error([repr(k) for k in KEYWORDS])

    def p_magma(self):
        start = self.expect("magma")
        name = self.ident("a magma name").text
        if self.at("="):
            self.i += 1
            kt = self.word("a builtin magma")
            if kt.text not in BUILTIN_MAGMAS:
                self.i -= 1
                self.error([repr(k) for k in BUILTIN_MAGMAS])
            self.expect("(")
            args = []
            while not self.at(")"):
                a = self.word("an argument")
                args.append(int(a.text) if a.text.isdigit() else a.text)
                if not self.at(")"):
                    self.expect(",")
            self.expect(")")
            self.expect(";")
            return MagmaBuiltin(name, kt.text, tuple(args), self.span_from(start))
        self.expect("{")
        self.expect("elements")
        self.expect(":")
        elements = self.word_list()
        self.expect(";")
        self.expect("op")
        self.expect(":")
        table = self.matrix()
        self.expect(";")
        self.expect("}")
        return MagmaDef(name, elements, table, self.span_from(start))

    def word_list(self):
        self.expect("[")
        out = []
        while not self.at("]"):
            out.append(self.word("an element").text)
            if not self.at("]"):
                self.expect(",")
        self.expect("]")
        return tuple(out)

    def matrix(self):
        """Nested bracketed lists of element names."""
        self.expect("[")
        out = []
        while not self.at("]"):
            if self.at("["):
                out.append(self.matrix())
            else:
                out.append(self.word("an element").text)
            if not self.at("]"):
                self.expect(",")
        self.expect("]")
        return tuple(out)

    def p_fn(self):
        start = self.expect("fn")
        name = self.ident("a function name").text
        self.expect("/")
        arity = self.integer()
        self.expect("over")
        magma = self.ident("a magma name").text
        self.expect("=")
        table = self.matrix()
        self.expect(";")
        return FnDef(name, arity, magma, table, self.span_from(start))

    def varset(self):
        start = self.expect("{")
        names = []
        while not self.at("}"):
            names.append(self.ident("a variable").text)
            if not self.at("}"):
                self.expect(",")
        self.expect("}")
        return VarSetLit(tuple(names), self.span_from(start))

    def config(self):
        start = self.expect("{")
        pairs = []
        while not self.at("}"):
            x = self.ident("a variable").text
            self.expect("=")
            pairs.append((x, self.word("an element").text))
            if not self.at("}"):
                self.expect(",")
        self.expect("}")
        return ConfigLit(tuple(pairs), self.span_from(start))

    def config_block(self):
        self.expect("{")
        rows = []
        while not self.at("}"):
            rows.append(self.config())
            self.expect(";")
        self.expect("}")
        return tuple(rows)

    def p_system(self):
        start = self.expect("system")
        name = self.ident("a system name").text
        if self.at("="):
            self.i += 1
            op = self.word("a system operation")
            if op.text not in SYSTEM_OPS:
                self.i -= 1
                self.error([repr(k) for k in SYSTEM_OPS])
            args = self.call_args()
            self.expect(";")
            return SystemExpr(name, op.text, args, self.span_from(start))
        self.expect("over")
        magma = self.ident("a magma name").text
        self.expect("vars")
        vars_ = self.varset().names
        domain = None
        if self.at("domain"):
            self.i += 1
            domain = self.config_block()
        if self.at("table"):
            self.i += 1
            self.expect("{")
            rows = []
            while not self.at("}"):
                a = self.config()
                self.expect("->")
                b = self.config()
                self.expect(";")
                rows.append((a, b))
            self.expect("}")
            return SystemDef(name, magma, vars_, None, tuple(rows), domain, self.span_from(start))
        self.expect("{")
        rules = []
        while not self.at("}"):
            if self.tok.kind != "word":
                self.error(["a variable", "'}'"])
            vt = self.ident("a variable")
            self.expect(":=")
            term = self.term()
            self.expect(";")
            rules.append(Rule(vt.text, term, self.span_from(vt)))
        self.expect("}")
        return SystemDef(name, magma, vars_, tuple(rules), None, domain, self.span_from(start))

    def p_team(self):
        start = self.expect("team")
        name = self.ident("a team name").text
        self.expect("over")
        magma = self.ident("a magma name").text
        self.expect("vars")
        vars_ = self.varset().names
        rows = self.config_block()
        return TeamDef(name, magma, vars_, rows, self.span_from(start))

    def p_cover(self):
        start = self.expect("cover")
        name = self.ident("a cover name").text
        self.expect("=")
        X = self.varset().names
        self.expect("|")
        Y = self.varset().names
        self.expect(";")
        return CoverDef(name, X, Y, self.span_from(start))

    def p_classical(self):
        start = self.expect("classical")
        name = self.ident("a model name").text
        self.expect("{")
        sets = {}
        for key in ("X", "U", "Y", "I"):
            self.expect(key)
            self.expect(":")
            sets[key] = self.word_list()
            self.expect(";")
        maps = {}
        for key, arity in (("f", 2), ("h", 1), ("phi", 2), ("pi", 1)):
            self.expect(key)
            self.expect(":")
            self.expect("{")
            entries = []
            while not self.at("}"):
                args = [self.word("an element").text]
                while self.at(","):
                    self.i += 1
                    args.append(self.word("an element").text)
                if len(args) != arity:
                    t = self.toks[self.i - 1]
                    raise ParseError(f"{key} takes {arity} argument(s), got {len(args)}",
                                     (t.line, t.col) + t.end, ("'->'",))
                self.expect("->")
                entries.append((tuple(args), self.word("an element").text))
                self.expect(";")
            self.expect("}")
            maps[key] = tuple(entries)
        self.expect("}")
        return ClassicalDef(name, sets["X"], sets["U"], sets["Y"], sets["I"],
                            maps["f"], maps["h"], maps["phi"], maps["pi"], self.span_from(start))

    def p_query(self):
        start = self.expect("query")
        name = self.ident("a query name").text
        self.expect(":")
        kt = self.word("a query kind")
        if kt.text not in QUERY_KINDS:
            self.i -= 1
            self.error([repr(k) for k in QUERY_KINDS])
        args = self.call_args()
        self.expect(";")
        return QueryDef(name, kt.text, args, self.span_from(start))

    # -- arguments
    def call_args(self):
        self.expect("(")
        args = []
        while not self.at(")"):
            args.append(self.arg())
            if not self.at(")"):
                self.expect(",")
        self.expect(")")
        return tuple(args)

    def arg(self):
        t = self.tok
        if self.at("{"):
            nxt = self.peek(2)
            if self.peek(1).kind == "word" and nxt.kind == "sym" and nxt.text == "=":
                return self.config()
            if self.peek(1).kind == "word" and nxt.kind == "sym" and nxt.text == "->":
                start = self.expect("{")
                pairs = []
                while not self.at("}"):
                    a = self.ident("a variable").text
                    self.expect("->")
                    pairs.append((a, self.ident("a variable").text))
                    if not self.at("}"):
                        self.expect(",")
                self.expect("}")
                return GlueLit(tuple(pairs), self.span_from(start))
            return self.varset()
        if self.at("["):
            start = self.expect("[")
            items = []
            while not self.at("]"):
                items.append(self.arg())
                if not self.at("]"):
                    self.expect(",")
            self.expect("]")
            return ListLit(tuple(items), self.span_from(start))
        if t.kind == "word":
            self.i += 1
            span = (t.line, t.col) + t.end
            if t.text.isdigit():
                return IntLit(int(t.text), span)
            return Ref(t.text, span)
        self.error(["a name", "an integer", "'{'", "'['"])

    # -- terms
    def term(self):
        left = self.atom()
        while self.at("•", "."):
            self.i += 1
            left = Op(left, self.atom())
        return left

    def atom(self):
        if self.at("#"):
            self.i += 1
            return Const(self.word("an element").text)
        if self.at("("):
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        name = self.ident("a variable or function")
        if self.at("("):
            self.i += 1
            args = []
            while not self.at(")"):
                args.append(self.term())
                if not self.at(")"):
                    self.expect(",")
            self.expect(")")
            return Call(name.text, tuple(args))
        return Var(name.text)


def parse(text: str) -> Document:
    return Parser(text).document()
