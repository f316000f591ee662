"""Named lattices and codes, and the small constructor expression language.

Grammar:

    expr   := term ('+' term)*              direct sum
    term   := scalar '*' term | factor
    scalar := 'sqrt2' | integer             Gram x2, Gram x k^2
    factor := atom | '(' expr ')'
    atom   := A<n> | D<n> | E8 | Z<n> | Gamma16 | 2A1
            | gram([[...], ...])
            | zero(n) | rep(n) | hamming8 | rm14 | code(n, 0101...)
            | lb(<code expr>)               Construction B over the code

E8 is built as D8 extended by the all-half glue vector, Gamma16 as D16
extended the same way.  The catalog below ships every object the reports
and the acceptance suite need, each with its pinned invariants.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import intmat
from .codes import BinaryCode, hamming8, make_code, repetition_code, rm14, zero_code
from .constrb import build_construction_b
from .errors import ParseError, UnknownName
from .lattice import Lattice, direct_sum, make_lattice, rescale

_TOKEN_RE = re.compile(r"\s*(?:(?P<word>[0-9]*[A-Za-z][A-Za-z0-9]*)"
                       r"|(?P<int>-?[0-9]+)"
                       r"|(?P<sym>[+*(),\[\]]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0],
                             position=len(text) - len(stripped))
        if m.group("word"):
            tokens.append(("word", m.group("word"), m.start("word")))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int")), m.start("int")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _cartan_a(n):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return make_lattice(g)


def _embedding_lattice(rows):
    """Lattice of the row span under the standard dot product."""
    scaled, den = intmat.scaled_integer_rows(rows)
    basis = intmat.hnf(scaled, len(rows[0]))
    bfrac = [[Fraction(x, den) for x in row] for row in basis]
    n = len(bfrac)
    gram = [[sum(bfrac[i][k] * bfrac[j][k] for k in range(len(bfrac[0])))
             for j in range(n)] for i in range(n)]
    return make_lattice([[int(x) for x in row] for row in gram])


def _d_rows(n):
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    r = [0] * n
    r[n - 2], r[n - 1] = 1, 1
    rows.append(r)
    return rows


def _d_lattice(n):
    if n < 2:
        raise UnknownName("D%d is not defined" % n)
    return _embedding_lattice(_d_rows(n))


def _glued_d(n):
    rows = [[Fraction(x) for x in r] for r in _d_rows(n)]
    rows.append([Fraction(1, 2)] * n)
    return _embedding_lattice(rows)


def _atom_from_word(word, pos):
    if word == "2A1":
        return make_lattice([[8]])
    if word == "E8":
        return _glued_d(8)
    if word == "Gamma16":
        return _glued_d(16)
    if word == "hamming8":
        return hamming8()
    if word == "rm14":
        return rm14()
    m = re.fullmatch(r"A([0-9]+)", word)
    if m:
        return _cartan_a(int(m.group(1)))
    m = re.fullmatch(r"D([0-9]+)", word)
    if m:
        return _d_lattice(int(m.group(1)))
    m = re.fullmatch(r"Z([0-9]+)", word)
    if m:
        n = int(m.group(1))
        return make_lattice([[1 if i == j else 0 for j in range(n)]
                             for i in range(n)])
    raise UnknownName("unknown name %r" % word, position=pos)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise ParseError("expected %r" % sym, position=pos)

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", position=pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, pos = self.peek()
            if kind == "sym" and val == "+":
                self.next()
                rhs = self.term()
                if not isinstance(value, Lattice) or not isinstance(rhs, Lattice):
                    raise ParseError("direct sum needs two lattices", position=pos)
                value = direct_sum(value, rhs)
            else:
                return value

    def term(self):
        kind, val, pos = self.peek()
        if kind in ("int", "word") and self.i + 1 < len(self.tokens):
            nxt = self.tokens[self.i + 1]
            if nxt[0] == "sym" and nxt[1] == "*" and (
                    kind == "int" or val == "sqrt2"):
                self.next()
                self.next()
                inner = self.term()
                if not isinstance(inner, Lattice):
                    raise ParseError("scaling needs a lattice", position=pos)
                if kind == "word":
                    return rescale(inner, 2)
                if val <= 0:
                    raise ParseError("scale factor must be positive", position=pos)
                return rescale(inner, val * val)
        return self.factor()

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "sym" and val == "(":
            self.next()
            value = self.expr()
            self.expect_sym(")")
            return value
        if kind == "word":
            return self.atom()
        raise ParseError("expected a name or '('", position=pos)

    def atom(self):
        kind, word, pos = self.next()
        nxt = self.peek()
        call = nxt[0] == "sym" and nxt[1] == "("
        if word == "gram":
            self.expect_sym("(")
            mat = self.matrix_literal()
            self.expect_sym(")")
            return make_lattice(mat)
        if word == "zero" and call:
            return zero_code(self.int_call())
        if word == "rep" and call:
            return repetition_code(self.int_call())
        if word == "code" and call:
            return self.code_literal()
        if word == "lb" and call:
            self.expect_sym("(")
            inner = self.expr()
            self.expect_sym(")")
            if not isinstance(inner, BinaryCode):
                raise ParseError("lb(...) needs a code", position=pos)
            lat, _ = build_construction_b(inner)
            return lat
        if call:
            raise ParseError("%r is not a constructor" % word, position=pos)
        return _atom_from_word(word, pos)

    def int_call(self):
        self.expect_sym("(")
        kind, val, pos = self.next()
        if kind != "int":
            raise ParseError("expected an integer", position=pos)
        self.expect_sym(")")
        return val

    def matrix_literal(self):
        self.expect_sym("[")
        rows = []
        while True:
            self.expect_sym("[")
            row = []
            while True:
                kind, val, pos = self.next()
                if kind != "int":
                    raise ParseError("expected an integer entry", position=pos)
                row.append(val)
                kind, val, pos = self.next()
                if kind == "sym" and val == ",":
                    continue
                if kind == "sym" and val == "]":
                    break
                raise ParseError("expected ',' or ']'", position=pos)
            rows.append(row)
            kind, val, pos = self.next()
            if kind == "sym" and val == ",":
                continue
            if kind == "sym" and val == "]":
                return rows
            raise ParseError("expected ',' or ']'", position=pos)

    def code_literal(self):
        self.expect_sym("(")
        kind, n, pos = self.next()
        if kind != "int":
            raise ParseError("expected the code length", position=pos)
        gens = []
        while True:
            kind, val, pos = self.next()
            if kind == "sym" and val == ")":
                break
            if kind != "sym" or val != ",":
                raise ParseError("expected ',' or ')'", position=pos)
            kind, val, pos = self.next()
            if kind == "int":
                val = str(val)
            if not isinstance(val, str) or set(val) - {"0", "1"}:
                raise ParseError("expected a 0/1 word", position=pos)
            gens.append(val.zfill(n) if len(val) < n else val)
        return make_code(n, gens)


def parse_spec(text):
    """Evaluate a constructor expression to a Lattice or BinaryCode."""
    return _Parser(text).parse()


def lattice_from_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if "gram" in doc:
        return make_lattice(doc["gram"])
    if "length" in doc:
        return make_code(int(doc["length"]), list(doc.get("generators", [])))
    raise ParseError("input file needs a 'gram' or 'length' field")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str            # "lattice" | "code" | "odd"
    constructor: str
    expected: dict = field(default_factory=dict)

    def build(self):
        return parse_spec(self.constructor)


CATALOG = (
    # even lattices, ranks 1..16
    CatalogEntry("A1", "lattice", "A1",
                 {"rank": 1, "det": 2, "roots": 2, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("2A1", "lattice", "2A1",
                 {"rank": 1, "det": 8, "roots": 0, "frame_cosets": 1,
                  "orbit_size": 3, "stabilizer_order": 2, "aut_order": 6,
                  "exceeds": True}),
    CatalogEntry("sqrt2A1", "lattice", "sqrt2*A1",
                 {"rank": 1, "det": 4, "roots": 0, "frame_cosets": 0,
                  "orbit_size": 1, "stabilizer_order": 2, "aut_order": 2,
                  "exceeds": False}),
    CatalogEntry("A2", "lattice", "A2",
                 {"rank": 2, "det": 3, "roots": 6, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("sqrt2A1A1", "lattice", "sqrt2*(A1+A1)",
                 {"rank": 2, "det": 16, "roots": 0, "frame_cosets": 1,
                  "orbit_size": 3, "stabilizer_order": 16, "aut_order": 48,
                  "exceeds": True}),
    CatalogEntry("A3", "lattice", "A3",
                 {"rank": 3, "det": 4, "roots": 12, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("sqrt2A3", "lattice", "sqrt2*A3",
                 {"rank": 3, "det": 32, "roots": 0, "frame_cosets": 1,
                  "orbit_size": 3, "stabilizer_order": 192, "aut_order": 576,
                  "exceeds": True}),
    CatalogEntry("D4", "lattice", "D4",
                 {"rank": 4, "det": 4, "roots": 24, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("A2A2", "lattice", "A2+A2",
                 {"rank": 4, "det": 9, "roots": 12, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("lbzero4", "lattice", "lb(zero(4))",
                 {"rank": 4, "det": 64, "roots": 0, "exceeds": True,
                  "cond_a": False, "cond_b": False, "cond_c": False}),
    CatalogEntry("D8", "lattice", "D8",
                 {"rank": 8, "det": 4, "roots": 112, "exceeds": True,
                  "cond_a": True, "twisted_sign": "-"}),
    CatalogEntry("lbhamming8", "lattice", "lb(hamming8)",
                 {"rank": 8, "det": 4, "roots": 112, "exceeds": True,
                  "cond_a": True, "twisted_sign": "-"}),
    CatalogEntry("lbrep8", "lattice", "lb(rep(8))",
                 {"rank": 8, "det": 256, "roots": 0, "exceeds": True,
                  "cond_a": True, "twisted_sign": "-", "twisted_count": 256}),
    CatalogEntry("E8", "lattice", "E8",
                 {"rank": 8, "det": 1, "roots": 240, "frame_cosets": 0,
                  "orbit_size": 2, "exceeds": True, "cond_a": False,
                  "cond_b": False, "cond_c": True, "twisted_sign": "-",
                  "twisted_count": 1}),
    CatalogEntry("D16", "lattice", "D16",
                 {"rank": 16, "det": 4, "roots": 480, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("lbrm14", "lattice", "lb(rm14)",
                 {"rank": 16, "det": 256, "roots": 0, "exceeds": True,
                  "cond_a": False, "cond_b": True, "cond_c": False,
                  "twisted_sign": "+"}),
    CatalogEntry("E8E8", "lattice", "E8+E8",
                 {"rank": 16, "det": 1, "roots": 480, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    CatalogEntry("Gamma16", "lattice", "Gamma16",
                 {"rank": 16, "det": 1, "roots": 480, "frame_cosets": 0,
                  "orbit_size": 1, "exceeds": False}),
    # odd lattices, reported through their even part
    CatalogEntry("Z1", "odd", "Z1", {"rank": 1, "even_part_det": 4}),
    CatalogEntry("Z2", "odd", "Z2", {"rank": 2, "even_part_det": 4}),
    # codes
    CatalogEntry("zero1", "code", "zero(1)",
                 {"dim": 0, "doubly_even": True, "all_one": False}),
    CatalogEntry("zero4", "code", "zero(4)",
                 {"dim": 0, "doubly_even": True, "all_one": False}),
    CatalogEntry("rep4", "code", "rep(4)",
                 {"dim": 1, "doubly_even": True, "all_one": True}),
    CatalogEntry("rep8", "code", "rep(8)",
                 {"dim": 1, "doubly_even": True, "all_one": True,
                  "weights": {0: 1, 8: 1}}),
    CatalogEntry("hamming8", "code", "hamming8",
                 {"dim": 4, "doubly_even": True, "all_one": True,
                  "weights": {0: 1, 4: 14, 8: 1}}),
    CatalogEntry("rm14", "code", "rm14",
                 {"dim": 5, "doubly_even": True, "all_one": True,
                  "weights": {0: 1, 8: 30, 16: 1}}),
)


def catalog_entry(name):
    for entry in CATALOG:
        if entry.name == name:
            return entry
    raise UnknownName("no catalog entry named %r" % name)


def even_lattice_entries():
    return [e for e in CATALOG if e.kind == "lattice"]
