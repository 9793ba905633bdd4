"""ASCII concrete syntax for formulas, knowledge bases and sequents.

Grammar, loosest binding first::

    formula := par ("->" formula)?
    par     := oplus ("%" oplus)*
    oplus   := with ("|" with)*
    with    := times ("&" times)*
    times   := unary ("*" unary)*
    unary   := "~" unary | atom | weight | "(" formula ")"
    atom    := [a-zA-Z_][a-zA-Z0-9_]*
    weight  := decimal in [0,1] | integer "/" integer

``->`` associates to the right, every other binary operator to the left.
Derived connectives are expanded while parsing, and :func:`print_formula`
folds the expansions back so that printing and re-parsing is the identity on
syntax trees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Atom,
    Const,
    Formula,
    Neg,
    Times,
    Weight,
    With,
    is_l1,
    make_arrow,
    make_oplus,
    make_par,
    match_arrow,
    match_oplus,
    match_par,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(ValueError):
    """A syntax error, carrying the offending :class:`SourceSpan`.

    ``line`` is set (1-based) when the error comes from a multi-line input
    such as a knowledge-base file.
    """

    def __init__(self, message: str, span: SourceSpan, line: int | None = None):
        self.message = message
        self.span = span
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{where}offset {span.start}-{span.end}: {message}")


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<num>\d+(?:\.\d+)?|\.\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[~*&|%()/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "ident", "op", "eof"
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1))
        kind = m.lastgroup
        if kind != "ws":
            if kind == "arrow":
                kind = "op"
            toks.append(_Tok(kind, m.group(), SourceSpan(m.start(), m.end())))
        pos = m.end()
    toks.append(_Tok("eof", "", SourceSpan(len(text), len(text))))
    return toks


MAX_DEPTH = 100  # deepest syntax tree the parser accepts


def _depth(f: Formula) -> int:
    best = 0
    stack = [(f, 1)]
    while stack:
        g, d = stack.pop()
        best = max(best, d)
        stack.extend((c, d + 1) for c in g.children())
    return best


# binary operators by precedence level (loosest first), excluding "->"
_LEVELS = [("%", make_par), ("|", make_oplus), ("&", With), ("*", Times)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.nest = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self) -> Formula:
        f = self.formula()
        if _depth(f) > MAX_DEPTH:
            raise ParseError(f"formula nested deeper than {MAX_DEPTH}", SourceSpan(0, len(self.text)))
        if self.tok.kind != "eof":
            t = self.tok
            if t.text == ")":
                raise ParseError("unbalanced ')'", t.span)
            raise ParseError(f"unexpected {t.text!r}", t.span)
        return f

    def formula(self) -> Formula:
        left = self.binary(0)
        if self.at("->"):
            self.advance()
            self._expect_operand("->")
            return make_arrow(left, self.formula())
        return left

    def binary(self, level: int) -> Formula:
        if level == len(_LEVELS):
            return self.unary()
        sym, build = _LEVELS[level]
        left = self.binary(level + 1)
        while self.at(sym):
            self.advance()
            self._expect_operand(sym)
            left = build(left, self.binary(level + 1))
        return left

    def _expect_operand(self, after: str):
        t = self.tok
        if t.kind == "eof" or (t.kind == "op" and t.text not in ("~", "(")):
            raise ParseError(f"dangling operator {after!r}", t.span)

    def unary(self) -> Formula:
        t = self.tok
        if t.kind == "op" and t.text in "~(":
            self.nest += 1
            if self.nest > MAX_DEPTH:
                raise ParseError(f"formula nested deeper than {MAX_DEPTH}", t.span)
            try:
                return self._nested(t)
            finally:
                self.nest -= 1
        return self._leaf(t)

    def _nested(self, t: _Tok) -> Formula:
        if t.text == "~":
            self.advance()
            self._expect_operand("~")
            return Neg(self.unary())
        self.advance()
        if self.at(")"):
            raise ParseError("empty parentheses", SourceSpan(t.span.start, self.tok.span.end))
        inner = self.formula()
        if not self.at(")"):
            raise ParseError("unbalanced '('", SourceSpan(t.span.start, self.tok.span.end))
        self.advance()
        return inner

    def _leaf(self, t: _Tok) -> Formula:
        if t.kind == "ident":
            self.advance()
            return Atom(t.text)
        if t.kind == "num":
            return Const(self.weight())
        if t.kind == "eof":
            raise ParseError("unexpected end of input", t.span)
        if t.text == ")":
            raise ParseError("unbalanced ')'", t.span)
        raise ParseError(f"unexpected {t.text!r}", t.span)

    def weight(self) -> Weight:
        t = self.advance()
        start = t.span.start
        if self.at("/"):
            self.advance()
            d = self.tok
            if d.kind != "num" or "." in d.text or "." in t.text:
                raise ParseError("fraction needs integer numerator and denominator",
                                 SourceSpan(start, d.span.end))
            self.advance()
            span = SourceSpan(start, d.span.end)
            if int(d.text) == 0:
                raise ParseError("zero denominator", span)
            w = Fraction(int(t.text), int(d.text))
        else:
            span = t.span
            w = Fraction(t.text)
        if not 0 <= w <= 1:
            raise ParseError(f"weight {self.text[span.start:span.end]} outside [0, 1]", span)
        return w


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a core syntax tree.

    >>> parse_formula("~p & q * r")
    With(left=Neg(sub=Atom(name='p')), right=Times(left=Atom(name='q'), right=Atom(name='r')))
    """
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# printing
# --------------------------------------------------------------------------

# precedence of each printed form; larger binds tighter
_ARROW, _PAR, _OPLUS, _WITH, _TIMES, _UNARY = range(6)

_ASCII = {"->": "->", "%": "%", "|": "|", "&": "&", "*": "*", "~": "~", "|-": "|-"}
_UNICODE = {"->": "→", "%": "℘", "|": "⊕", "&": "&", "*": "⊗", "~": "¬", "|-": "⊢"}


def format_weight(w: Weight) -> str:
    """Decimal spelling when it is finite, ``p/q`` otherwise."""
    w = Fraction(w)
    d = w.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{w.numerator}/{w.denominator}"
    if w.denominator == 1:
        return str(w.numerator)
    places = max(twos, fives)
    scaled = w.numerator * 10**places // w.denominator
    digits = str(scaled).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def decimal_or_none(w: Weight) -> str | None:
    s = format_weight(w)
    return None if "/" in s else s


def _shape(f: Formula):
    """Classify ``f`` as (precedence, symbol, left, right) or a leaf/unary."""
    if isinstance(f, Neg):
        m = match_par(f)
        # ~(~a * ~b) is both a % b and ~a -> b; prefer the arrow when ~a
        # would itself print as a derived connective
        if m and _shape(f.sub.left)[1] == "~":
            return _PAR, "%", m
        m = match_arrow(f)
        if m:
            return _ARROW, "->", m
        m = match_oplus(f)
        if m:
            return _OPLUS, "|", m
        return _UNARY, "~", (f.sub,)
    if isinstance(f, With):
        return _WITH, "&", (f.left, f.right)
    if isinstance(f, Times):
        return _TIMES, "*", (f.left, f.right)
    return _UNARY, None, ()


def print_formula(a: Formula, unicode: bool = False) -> str:
    """Render ``a`` with the fewest parentheses that parse back to ``a``."""
    syms = _UNICODE if unicode else _ASCII

    # derived connectives group several nodes, so walk the shapes rather than
    # the raw tree, with an explicit stack
    done: dict[int, tuple[int, str]] = {}
    stack = [(a, False)]
    while stack:
        f, ready = stack.pop()
        prec, sym, parts = _shape(f)
        if not ready:
            stack.append((f, True))
            stack.extend((x, False) for x in parts if id(x) not in done)
            continue
        if sym is None:
            done[id(f)] = (_UNARY, f.name if isinstance(f, Atom) else format_weight(f.w))
            continue
        if sym == "~":
            p, s = done[id(parts[0])]
            done[id(f)] = (_UNARY, syms["~"] + (f"({s})" if p < _UNARY else s))
            continue
        (lp, ls), (rp, rs) = done[id(parts[0])], done[id(parts[1])]
        if sym == "->":
            if lp <= _ARROW:
                ls = f"({ls})"
        else:
            if lp < prec:
                ls = f"({ls})"
            if rp <= prec:
                rs = f"({rs})"
        done[id(f)] = (prec, f"{ls} {syms[sym]} {rs}")
    return done[id(a)][1]


# --------------------------------------------------------------------------
# knowledge bases and sequents
# --------------------------------------------------------------------------


def parse_kb(text: str) -> list[tuple[Weight, Formula]]:
    """Parse ``weight :: formula`` lines; ``#`` starts a comment line."""
    out = []
    offset = 0
    for lineno, line in enumerate(text.splitlines(keepends=True), start=1):
        body = line.rstrip("\r\n")
        stripped = body.strip()
        if stripped and not stripped.startswith("#"):
            out.append(_parse_kb_line(body, lineno, offset))
        offset += len(line)
    return out


def _parse_kb_line(line: str, lineno: int, offset: int) -> tuple[Weight, Formula]:
    def fail(msg, start, end):
        raise ParseError(msg, SourceSpan(offset + start, offset + end), line=lineno)

    if "::" not in line:
        fail("expected 'weight :: formula'", 0, len(line))
    wtext, ftext = line.split("::", 1)
    fstart = len(wtext) + 2
    try:
        w = parse_formula(wtext)
    except ParseError as e:
        fail(e.message, e.span.start, e.span.end)
    if not isinstance(w, Const):
        fail("clause weight must be a number", 0, len(wtext))
    try:
        body = parse_formula(ftext)
    except ParseError as e:
        fail(e.message, fstart + e.span.start, fstart + e.span.end)
    if not is_l1(body):
        fail("clause body not in L1 (contains a constant strictly between 0 and 1)",
             fstart, len(line))
    return w.w, body


def format_kb(clauses, unicode: bool = False) -> str:
    """Inverse of :func:`parse_kb`: one ``weight :: body`` line per clause."""
    lines = []
    for c in clauses:
        w, body = (c.weight, c.body) if hasattr(c, "weight") else c
        lines.append(f"{format_weight(w)} :: {print_formula(body, unicode)}")
    return "".join(line + "\n" for line in lines)


def print_sequent(gamma, delta, unicode: bool = False) -> str:
    turnstile = _UNICODE["|-"] if unicode else "|-"
    lhs = ", ".join(print_formula(f, unicode) for f in gamma)
    rhs = ", ".join(print_formula(f, unicode) for f in delta)
    return f"{lhs} {turnstile} {rhs}".strip()


def parse_sequent(text: str) -> tuple[tuple[Formula, ...], tuple[Formula, ...]]:
    """Parse ``A, B |- C`` (either side may be empty)."""
    if text.count("|-") != 1:
        raise ParseError("sequent needs exactly one '|-'", SourceSpan(0, len(text)))
    cut = text.index("|-")

    def side(part: str, base: int):
        if not part.strip():
            return ()
        out = []
        pos = 0
        for chunk in part.split(","):
            try:
                out.append(parse_formula(chunk))
            except ParseError as e:
                raise ParseError(e.message, SourceSpan(base + pos + e.span.start,
                                                       base + pos + e.span.end)) from None
            pos += len(chunk) + 1
        return tuple(out)

    return side(text[:cut], 0), side(text[cut + 2:], cut + 2)
