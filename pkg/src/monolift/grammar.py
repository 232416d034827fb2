"""Tokenizer and recursive-descent parser for the polynomial text grammar.

Variables are ``x<k>`` and ``u<k>`` (1-based), powers use ``^``, products ``*``,
sums ``+``/``-`` and coefficients are integers or ``a/b`` rationals.  A comma
separates the generators of an ideal.  The parser produces a neutral term
list; callers decide how many variables the ambient ring has.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<var>[xu])(?P<idx>\d+)|(?P<int>\d+)|(?P<op>[-+*^/,]))")


def _tokenize(text):
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        # track newlines inside whitespace for error positions
        while pos < len(text) and text[pos].isspace():
            if text[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, text)
        col = pos - line_start + 1
        if m.group("var"):
            idx = int(m.group("idx"))
            if idx < 1:
                raise ParseError("variable indices start at 1", line, col, text)
            tokens.append(("var", (m.group("var"), idx), line, col))
        elif m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), line, col))
        else:
            tokens.append((m.group("op"), None, line, col))
        pos = m.end()
    tokens.append(("end", None, line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def fail(self, message):
        _, _, line, col = self.peek()
        raise ParseError(message, line, col, self.text)

    def polynomial(self):
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.term(sign))
        return terms

    def term(self, sign):
        coeff_box = [Fraction(sign)]
        powers = {}
        self.factor(powers, coeff_box)
        while self.peek()[0] == "*":
            self.take()
            self.factor(powers, coeff_box)
        return coeff_box[0], powers

    def factor(self, powers, coeff_box):
        kind, value, _, _ = self.peek()
        if kind == "int":
            self.take()
            num = value
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")[1]
                if den == 0:
                    self.fail("zero denominator")
                coeff_box[0] *= Fraction(num, den)
            else:
                coeff_box[0] *= num
        elif kind == "var":
            self.take()
            exp = 1
            if self.peek()[0] == "^":
                self.take()
                exp = self.take("int")[1]
            powers[value] = powers.get(value, 0) + exp
        else:
            self.fail("expected a coefficient or a variable")


def parse_terms(text):
    """Parse one polynomial into ``[(Fraction, {("x"|"u", k): exp}), ...]``."""
    p = _Parser(text)
    terms = p.polynomial()
    if p.peek()[0] != "end":
        p.fail("trailing input")
    return terms


def parse_term_lists(text):
    """Parse a comma-separated list of polynomials."""
    p = _Parser(text)
    out = [p.polynomial()]
    while p.peek()[0] == ",":
        p.take()
        out.append(p.polynomial())
    if p.peek()[0] != "end":
        p.fail("expected ',' or end of input")
    return out


def ambient_size(term_lists):
    """Largest x- and u-index mentioned across parsed terms."""
    n = t = 0
    for terms in term_lists:
        for _, powers in terms:
            for kind, idx in powers:
                if kind == "x":
                    n = max(n, idx)
                else:
                    t = max(t, idx)
    return n, t


def exponent_vector(powers, n, t):
    vec = [0] * (n + t)
    for (kind, idx), e in powers.items():
        if kind == "x":
            if idx > n:
                raise ParseError(f"x{idx} outside ambient ring with {n} x-variables")
            vec[idx - 1] += e
        else:
            if idx > t:
                raise ParseError(f"u{idx} outside ambient ring with {t} u-variables")
            vec[n + idx - 1] += e
    return tuple(vec)


def format_exponents(exps, n):
    """Canonical product string for an exponent vector; the first ``n`` slots are x's."""
    parts = []
    for k, e in enumerate(exps):
        if e == 0:
            continue
        name = f"x{k + 1}" if k < n else f"u{k - n + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"
