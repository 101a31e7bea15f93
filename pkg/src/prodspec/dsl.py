"""A small language for ring descriptions.

Grammar (LL(1); quotient binds tighter than product)::

    expr  := term { "x" term }
    term  := atom [ "/" "(" gens ")" ]
    atom  := "Z" "/" nat | "(" expr ")" | fixtureName
    gens  := elem { "," elem }
    elem  := nat | "(" elem { "," elem } ")"

Examples: ``Z/12``, ``Z/4 x Z/9 x Z/25``, ``(Z/12)/(6)``, ``F2xy2 x Z/2``.
"""
import re
from dataclasses import dataclass

from .errors import RingError, ZeroRingFactorError
from .fixtures import FIXTURES, fixture
from .ideals import ideal_from_generators
from .rings import ModularRing, ProductRing, QuotientRing, TableRing


class DSLError(RingError):
    pass


class ParseError(DSLError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SemanticError(DSLError):
    def __init__(self, message, path):
        self.path = path
        super().__init__(f"at {path}: {message}")


@dataclass(frozen=True)
class ZMod:
    n: int


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Quot:
    base: object
    gens: tuple


@dataclass(frozen=True)
class NamedFixture:
    name: str


# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[/(),×]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "nat" | "ident" | "x" | "/" | "(" | ")" | "," | "eof"
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(offset):
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                break
            offset = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", *where(offset))
        start = m.start(m.lastgroup)
        value = m.group(m.lastgroup)
        if m.lastgroup == "nat":
            kind = "nat"
        elif m.lastgroup == "ident":
            kind = "x" if value == "x" else "ident"
        else:
            kind = "x" if value == "×" else value
        tokens.append(Token(kind, value, *where(start)))
        pos = m.end()
    tokens.append(Token("eof", "", *where(len(text))))
    return tokens


# ---------------------------------------------------------------------------
# parser

class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def expect(self, kind, what=None):
        t = self.tok
        if t.kind != kind:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {what or repr(kind)}, found {found}", t.line, t.column)
        self.pos += 1
        return t

    def expr(self):
        terms = [self.term()]
        while self.tok.kind == "x":
            self.pos += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Prod(tuple(terms))

    def term(self):
        base = self.atom()
        if self.tok.kind == "/":
            self.pos += 1
            self.expect("(", "'(' opening the generator list")
            gens = self.gens()
            self.expect(")", "')' closing the generator list")
            return Quot(base, gens)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "ident" and t.text == "Z":
            self.pos += 1
            self.expect("/", "'/' after Z")
            return ZMod(int(self.expect("nat", "a modulus").text))
        if t.kind == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if t.kind == "ident":
            self.pos += 1
            return NamedFixture(t.text)
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"expected a ring (Z/n, '(' or a fixture name), found {found}", t.line, t.column)

    def gens(self):
        out = [self.elem()]
        while self.tok.kind == ",":
            self.pos += 1
            out.append(self.elem())
        return tuple(out)

    def elem(self):
        t = self.tok
        if t.kind == "nat":
            self.pos += 1
            return int(t.text)
        if t.kind == "(":
            self.pos += 1
            parts = [self.elem()]
            while self.tok.kind == ",":
                self.pos += 1
                parts.append(self.elem())
            self.expect(")", "')' closing a tuple")
            return tuple(parts)
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"expected an element literal, found {found}", t.line, t.column)

    def finish(self):
        self.expect("eof", "end of input")


def parse(text):
    """Parse a ring expression into its syntax tree."""
    p = _Parser(text)
    out = p.expr()
    p.finish()
    return out


def parse_elements(text):
    """Parse a comma-separated element literal list (the ``gens`` rule)."""
    p = _Parser(text)
    out = p.gens()
    p.finish()
    return out


# ---------------------------------------------------------------------------
# printer

def literal_text(lit):
    if isinstance(lit, tuple):
        return "(" + ",".join(literal_text(x) for x in lit) + ")"
    return str(lit)


def to_text(expr):
    """Inverse of ``parse`` up to whitespace and redundant parentheses."""
    if isinstance(expr, ZMod):
        return f"Z/{expr.n}"
    if isinstance(expr, NamedFixture):
        return expr.name
    if isinstance(expr, Prod):
        return " x ".join(f"({to_text(f)})" if isinstance(f, Prod) else to_text(f) for f in expr.factors)
    if isinstance(expr, Quot):
        return f"({to_text(expr.base)})/({','.join(literal_text(g) for g in expr.gens)})"
    raise TypeError(f"not a ring expression: {expr!r}")


# ---------------------------------------------------------------------------
# elaboration

def elaborate(expr, path="expr"):
    """Build the ring an expression describes."""
    if isinstance(expr, ZMod):
        if expr.n < 1:
            raise SemanticError("modulus must be at least 1", path)
        return ModularRing(expr.n)
    if isinstance(expr, NamedFixture):
        if expr.name not in FIXTURES:
            raise SemanticError(f"unknown ring {expr.name!r}; fixtures: {', '.join(sorted(FIXTURES))}", path)
        return fixture(expr.name)
    if isinstance(expr, Prod):
        factors = [elaborate(f, f"{path}.factors[{i}]") for i, f in enumerate(expr.factors)]
        for i, f in enumerate(factors):
            if f.is_zero_ring:
                raise SemanticError("the zero ring cannot be a product factor", f"{path}.factors[{i}]")
        try:
            return ProductRing(factors)
        except ZeroRingFactorError as exc:  # pragma: no cover - guarded above
            raise SemanticError(str(exc), path) from None
    if isinstance(expr, Quot):
        base = elaborate(expr.base, f"{path}.base")
        gens = [element_index(base, g, f"{path}.gens[{i}]") for i, g in enumerate(expr.gens)]
        ideal = ideal_from_generators(base, [base.at(g) for g in gens])
        return QuotientRing(base, ideal)
    raise SemanticError(f"not a ring expression: {expr!r}", path)


def element_index(ring, lit, path="elem"):
    """Type-check a literal against ``ring`` and return its element index."""
    if isinstance(ring, ModularRing):
        if isinstance(lit, tuple):
            raise SemanticError(f"expected a residue of Z/{ring.modulus}, got a tuple", path)
        if not 0 <= lit < ring.modulus:
            raise SemanticError(f"residue {lit} out of range for Z/{ring.modulus}", path)
        return lit
    if isinstance(ring, ProductRing):
        if not isinstance(lit, tuple) or len(lit) != ring.arity:
            raise SemanticError(f"expected a {ring.arity}-tuple for {ring}, got {literal_text(lit)}", path)
        comps = [element_index(f, x, f"{path}[{i}]") for i, (f, x) in enumerate(zip(ring.factors, lit))]
        return ring.from_components(comps)
    if isinstance(ring, QuotientRing):
        return int(ring.class_of[element_index(ring.base, lit, path)])
    if isinstance(ring, TableRing):
        if isinstance(lit, tuple) or not 0 <= lit < ring.size:
            raise SemanticError(f"expected an index below {ring.size} for {ring}", path)
        return lit
    raise SemanticError(f"literals are not supported for {ring}", path)


def element(ring, lit, path="elem"):
    return ring.at(element_index(ring, lit, path))


def ring_from_text(text):
    return elaborate(parse(text))


def _lit_json(lit):
    return [_lit_json(x) for x in lit] if isinstance(lit, tuple) else lit


def _lit_from_json(obj):
    return tuple(_lit_from_json(x) for x in obj) if isinstance(obj, list) else int(obj)


def ast_to_json(expr):
    """A JSON-friendly tree that keeps the exact AST (nesting included)."""
    if isinstance(expr, ZMod):
        return {"Z": expr.n}
    if isinstance(expr, NamedFixture):
        return {"fixture": expr.name}
    if isinstance(expr, Prod):
        return {"prod": [ast_to_json(f) for f in expr.factors]}
    if isinstance(expr, Quot):
        return {"quot": ast_to_json(expr.base), "gens": [_lit_json(g) for g in expr.gens]}
    raise TypeError(f"not a ring expression: {expr!r}")


def ast_from_json(obj):
    if "Z" in obj:
        return ZMod(int(obj["Z"]))
    if "fixture" in obj:
        return NamedFixture(obj["fixture"])
    if "prod" in obj:
        return Prod(tuple(ast_from_json(f) for f in obj["prod"]))
    if "quot" in obj:
        return Quot(ast_from_json(obj["quot"]), tuple(_lit_from_json(g) for g in obj["gens"]))
    raise ValueError(f"not an encoded ring expression: {obj!r}")
