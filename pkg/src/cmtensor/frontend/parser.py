"""Tokenizer, recursive-descent parser, and AST for the session DSL.

Grammar (statements end with ';', '#' starts a line comment):

    session := { stmt ";" }
    stmt    := "ring" NAME "=" ( "poly" "(" [vars] ")" [ "/" "(" polys ")" ]
                               | "tensor" "(" NAME "," NAME ")" )
             | "ideal" NAME "=" NAME ":" "(" polys ")"
             | "assert" expr CMP expr
             | "check" CHECKID "(" args ")"
             | "compute" expr
    expr    := "grade" "(" NAME "," NAME ")" | "dim" "(" NAME ["," NAME] ")"
             | "height" "(" NAME "," NAME ")" | "is_cm" "(" NAME ")"
             | INT | "true" | "false"
    arg     := NAME | "(" polys ")"

Polynomial expressions use ^ over * over binary +/- with explicit *, and
integer literals are reduced modulo the session prime at parse time.
Names must be declared before use and are never shadowed; violations are
parse errors carrying the source position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ParseError, SessionError
from ..polyring import DEFAULT_PRIME, Polynomial, PolyRing

_TWO_CHAR = ("==", "!=", "<=", ">=")
_ONE_CHAR = "(),;=:+-*^/<>"

EXPR_FUNCTIONS = {
    "grade": (("ring", "ideal"),),
    "dim": (("ring",), ("ring", "ideal")),
    "height": (("ring", "ideal"),),
    "is_cm": (("ring",),),
}

CHECK_SIGNATURES = {
    "thm_1_1_a": ("ring", "ring", "ideal"),
    "thm_1_1_b": ("ring", "ring", "ideal", "ideal"),
    "thm_1_1_c": ("ring", "ring", "ideal", "ideal"),
    "lemma_1_2": ("ring", "ring", "polys", "polys"),
    "prop_2_3_a": ("ring", "ideal"),
    "thm_2_1": ("ring", "ring"),
    "remark_2_5": ("ring", "ideal"),
}

COMPARISONS = ("==", "!=", "<=", ">=", "<", ">")


@dataclass(frozen=True)
class Token:
    kind: str  # ident | int | op | eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and (text[j].isalpha() or text[j] == "_"):
                raise ParseError(
                    f"number runs into a name (write an explicit '*'?)", line, col
                )
            tokens.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR:
            tokens.append(Token("op", two, line, col))
            i += 2
            col += 2
            continue
        if ch in _ONE_CHAR:
            tokens.append(Token("op", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# AST

def _render_coeff_mono(coeff: int, mono: tuple, p: int) -> tuple:
    """Signed display pieces for one term under the balanced lift."""
    c = coeff - p if coeff > p // 2 else coeff
    body = "*".join(nm if e == 1 else f"{nm}^{e}" for nm, e in mono)
    mag = abs(c)
    if body:
        if mag != 1:
            body = f"{mag}*{body}"
    else:
        body = str(mag)
    return ("-" if c < 0 else "+", body)


@dataclass(frozen=True)
class PolyLiteral:
    """A parsed polynomial: canonical term tuple over variable names."""

    terms: tuple  # ((coeff, ((name, exp), ...)), ...) sorted
    prime: int

    def render(self) -> str:
        if not self.terms:
            return "0"
        chunks = [_render_coeff_mono(c, m, self.prime) for c, m in self.terms]
        sign, body = chunks[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def to_polynomial(self, ring: PolyRing) -> Polynomial:
        if ring.field.p != self.prime:
            raise SessionError("polynomial literal parsed under a different prime")
        n = ring.nvars
        terms = {}
        for coeff, mono in self.terms:
            exps = [0] * n
            for name, e in mono:
                try:
                    exps[ring.index(name)] = e
                except ValueError:
                    raise SessionError(
                        f"unknown variable {name!r}; the ring has {ring.names}"
                    ) from None
            terms[tuple(exps)] = coeff
        return Polynomial(ring, terms)


def _canon_literal(term_map: dict, p: int) -> PolyLiteral:
    items = [(c, m) for m, c in term_map.items() if c % p]
    # degree first, then alphabetically with higher powers leading, so
    # (x+y)^2 prints as x^2 + 2*x*y + y^2
    items.sort(
        key=lambda cm: (
            -sum(e for _, e in cm[1]),
            tuple((name, -e) for name, e in cm[1]),
        )
    )
    return PolyLiteral(tuple((c % p, m) for c, m in items), p)


def _term_mul(m1: tuple, m2: tuple) -> tuple:
    acc = dict(m1)
    for name, e in m2:
        acc[name] = acc.get(name, 0) + e
    return tuple(sorted((nm, e) for nm, e in acc.items() if e))


def _map_add(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = (out.get(m, 0) + c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _map_mul(a: dict, b: dict, p: int) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = _term_mul(m1, m2)
            v = (out.get(m, 0) + c1 * c2) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


@dataclass(frozen=True)
class IntLit:
    value: int

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class BoolLit:
    value: bool

    def render(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class CallExpr:
    fn: str
    args: tuple

    def render(self) -> str:
        return f"{self.fn}({', '.join(self.args)})"


@dataclass(frozen=True)
class NameArg:
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class PolysArg:
    polys: tuple

    def render(self) -> str:
        return "(" + ", ".join(p.render() for p in self.polys) + ")"


@dataclass
class RingDecl:
    name: str
    kind: str  # poly | tensor
    vars: tuple = ()
    relations: tuple = ()
    factors: tuple = ()
    pos: tuple = field(default=(0, 0), compare=False)

    def render(self) -> str:
        if self.kind == "tensor":
            return f"ring {self.name} = tensor({self.factors[0]}, {self.factors[1]})"
        body = f"ring {self.name} = poly({', '.join(self.vars)})"
        if self.relations:
            body += " / (" + ", ".join(r.render() for r in self.relations) + ")"
        return body


@dataclass
class IdealDecl:
    name: str
    owner: str
    gens: tuple = ()
    pos: tuple = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"ideal {self.name} = {self.owner}:(" + ", ".join(
            g.render() for g in self.gens
        ) + ")"


@dataclass
class AssertStmt:
    lhs: object
    op: str
    rhs: object
    pos: tuple = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"assert {self.lhs.render()} {self.op} {self.rhs.render()}"


@dataclass
class CheckStmt:
    check_id: str
    args: tuple = ()
    pos: tuple = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"check {self.check_id}(" + ", ".join(a.render() for a in self.args) + ")"


@dataclass
class ComputeStmt:
    expr: object
    pos: tuple = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"compute {self.expr.render()}"


@dataclass
class Session:
    prime: int
    statements: tuple = ()

    @property
    def declarations(self) -> tuple:
        return tuple(s for s in self.statements if isinstance(s, (RingDecl, IdealDecl)))

    @property
    def commands(self) -> tuple:
        return tuple(
            s for s in self.statements if isinstance(s, (AssertStmt, CheckStmt, ComputeStmt))
        )

    def render(self) -> str:
        return "\n".join(s.render() + ";" for s in self.statements) + (
            "\n" if self.statements else ""
        )


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, tokens, prime):
        self.tokens = tokens
        self.i = 0
        self.prime = prime
        self.symbols = {}  # name -> "ring" | "ideal"

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect_op(self, text) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            self.fail(f"expected {text!r}, found {tok.text!r}" if tok.text else f"expected {text!r}, found end of input")
        return self.advance()

    def expect_ident(self, what="a name") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            self.fail(f"expected {what}, found {tok.text!r}" if tok.text else f"expected {what}, found end of input")
        return self.advance()

    def at_keyword(self, word) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == word

    # -- bindings ------------------------------------------------------------

    def bound(self, tok: Token, kind: str) -> str:
        name = tok.text
        if name not in self.symbols:
            self.fail(f"unbound name {name!r}", tok)
        if self.symbols[name] != kind:
            self.fail(f"{name!r} is bound as a {self.symbols[name]}, not a {kind}", tok)
        return name

    def declare(self, tok: Token, kind: str) -> str:
        name = tok.text
        if name in self.symbols:
            self.fail(f"{name!r} is already declared (no shadowing)", tok)
        self.symbols[name] = kind
        return name

    # -- polynomial expressions ----------------------------------------------

    def parse_poly(self) -> PolyLiteral:
        acc = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.parse_term()
            if op == "-":
                rhs = {m: -c % self.prime for m, c in rhs.items()}
            acc = _map_add(acc, rhs, self.prime)
        return _canon_literal(acc, self.prime)

    def parse_term(self) -> dict:
        acc = self.parse_factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            acc = _map_mul(acc, self.parse_factor(), self.prime)
        return acc

    def parse_factor(self) -> dict:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            inner = self.parse_factor()
            return {m: -c % self.prime for m, c in inner.items()}
        base = self.parse_atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            etok = self.peek()
            if etok.kind != "int":
                self.fail("expected an integer exponent")
            self.advance()
            e = int(etok.text)
            out = {(): 1}
            while e:
                if e & 1:
                    out = _map_mul(out, base, self.prime)
                base = _map_mul(base, base, self.prime)
                e >>= 1
            return out
        return base

    def parse_atom(self) -> dict:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            c = int(tok.text) % self.prime
            return {(): c} if c else {}
        if tok.kind == "ident":
            self.advance()
            return {((tok.text, 1),): 1}
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            lit = self.parse_poly()
            self.expect_op(")")
            return {m: c for c, m in lit.terms}
        self.fail(f"expected a polynomial, found {tok.text!r}" if tok.text else "expected a polynomial, found end of input")

    def parse_poly_list(self) -> tuple:
        polys = [self.parse_poly()]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.advance()
            polys.append(self.parse_poly())
        return tuple(polys)

    # -- expressions -----------------------------------------------------------

    def parse_expr(self):
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return IntLit(int(tok.text))
        if tok.kind == "ident" and tok.text in ("true", "false"):
            self.advance()
            return BoolLit(tok.text == "true")
        if tok.kind == "ident" and tok.text in EXPR_FUNCTIONS:
            fn = self.advance().text
            self.expect_op("(")
            names = [self.expect_ident()]
            while self.peek().kind == "op" and self.peek().text == ",":
                self.advance()
                names.append(self.expect_ident())
            close = self.peek()
            self.expect_op(")")
            for sig in EXPR_FUNCTIONS[fn]:
                if len(sig) == len(names):
                    args = tuple(
                        self.bound(t, kind) for t, kind in zip(names, sig)
                    )
                    return CallExpr(fn, args)
            expected = " or ".join(str(len(s)) for s in EXPR_FUNCTIONS[fn])
            self.fail(
                f"arity mismatch: {fn} takes {expected} argument(s), got {len(names)}",
                close,
            )
        self.fail(
            "expected grade/dim/height/is_cm, an integer, or true/false"
            + (f", found {tok.text!r}" if tok.text else "")
        )

    # -- statements --------------------------------------------------------------

    def parse_ring_decl(self) -> RingDecl:
        start = self.advance()  # 'ring'
        name_tok = self.expect_ident("a ring name")
        self.expect_op("=")
        head = self.peek()
        if self.at_keyword("poly"):
            self.advance()
            self.expect_op("(")
            vars_ = []
            if not (self.peek().kind == "op" and self.peek().text == ")"):
                vars_.append(self.expect_ident("a variable name").text)
                while self.peek().kind == "op" and self.peek().text == ",":
                    self.advance()
                    vars_.append(self.expect_ident("a variable name").text)
            self.expect_op(")")
            if len(set(vars_)) != len(vars_):
                self.fail("duplicate variable name", head)
            relations = ()
            if self.peek().kind == "op" and self.peek().text == "/":
                self.advance()
                self.expect_op("(")
                relations = self.parse_poly_list()
                self.expect_op(")")
            name = self.declare(name_tok, "ring")
            return RingDecl(
                name, "poly", tuple(vars_), relations, (), (start.line, start.col)
            )
        if self.at_keyword("tensor"):
            self.advance()
            self.expect_op("(")
            left = self.bound(self.expect_ident("a ring name"), "ring")
            self.expect_op(",")
            right = self.bound(self.expect_ident("a ring name"), "ring")
            self.expect_op(")")
            name = self.declare(name_tok, "ring")
            return RingDecl(name, "tensor", (), (), (left, right), (start.line, start.col))
        self.fail("expected poly(...) or tensor(...)", head)

    def parse_ideal_decl(self) -> IdealDecl:
        start = self.advance()  # 'ideal'
        name_tok = self.expect_ident("an ideal name")
        self.expect_op("=")
        owner = self.bound(self.expect_ident("a ring name"), "ring")
        self.expect_op(":")
        self.expect_op("(")
        gens = self.parse_poly_list()
        self.expect_op(")")
        name = self.declare(name_tok, "ideal")
        return IdealDecl(name, owner, gens, (start.line, start.col))

    def parse_assert(self) -> AssertStmt:
        start = self.advance()  # 'assert'
        lhs = self.parse_expr()
        tok = self.peek()
        if tok.kind != "op" or tok.text not in COMPARISONS:
            self.fail("expected a comparison (==, !=, <, <=, >, >=)")
        self.advance()
        rhs = self.parse_expr()
        return AssertStmt(lhs, tok.text, rhs, (start.line, start.col))

    def parse_check(self) -> CheckStmt:
        start = self.advance()  # 'check'
        id_tok = self.expect_ident("a check id")
        if id_tok.text not in CHECK_SIGNATURES:
            self.fail(f"unknown check id {id_tok.text!r}", id_tok)
        sig = CHECK_SIGNATURES[id_tok.text]
        self.expect_op("(")
        args = []
        if not (self.peek().kind == "op" and self.peek().text == ")"):
            args.append(self.parse_check_arg())
            while self.peek().kind == "op" and self.peek().text == ",":
                self.advance()
                args.append(self.parse_check_arg())
        close = self.peek()
        self.expect_op(")")
        if len(args) != len(sig):
            self.fail(
                f"arity mismatch: {id_tok.text} takes {len(sig)} argument(s), got {len(args)}",
                close,
            )
        checked = []
        for (arg, tok), kind in zip(args, sig):
            if kind == "polys":
                if not isinstance(arg, PolysArg):
                    self.fail("expected a parenthesized polynomial list", tok)
            else:
                if not isinstance(arg, NameArg):
                    self.fail(f"expected a {kind} name", tok)
                self.bound(tok, kind)
            checked.append(arg)
        return CheckStmt(id_tok.text, tuple(checked), (start.line, start.col))

    def parse_check_arg(self):
        tok = self.peek()
        if tok.kind == "ident":
            self.advance()
            return NameArg(tok.text), tok
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            polys = self.parse_poly_list()
            self.expect_op(")")
            return PolysArg(polys), tok
        self.fail(f"expected a name or a polynomial list, found {tok.text!r}" if tok.text else "expected a name or a polynomial list")

    def parse_session(self) -> Session:
        statements = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if self.at_keyword("ring"):
                stmt = self.parse_ring_decl()
            elif self.at_keyword("ideal"):
                stmt = self.parse_ideal_decl()
            elif self.at_keyword("assert"):
                stmt = self.parse_assert()
            elif self.at_keyword("check"):
                stmt = self.parse_check()
            elif self.at_keyword("compute"):
                start = self.advance()
                stmt = ComputeStmt(self.parse_expr(), (start.line, start.col))
            else:
                self.fail(
                    f"expected a statement (ring/ideal/assert/check/compute), found {tok.text!r}"
                    if tok.text
                    else "expected a statement"
                )
            self.expect_op(";")
            statements.append(stmt)
        return Session(self.prime, tuple(statements))


def parse_session(text: str, prime: int = DEFAULT_PRIME) -> Session:
    """Parse a session; every failure is a ParseError with line and column."""
    return _Parser(tokenize(text), prime).parse_session()
