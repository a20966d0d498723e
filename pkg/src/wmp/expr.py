"""Named-graph expressions such as ``"C5"``, ``"K2+E1"`` or ``"3*K2 + K1,3"``.

Grammar (whitespace between tokens is ignored)::

    expr := term ("+" term)*
    term := [count "*"] atom
    atom := "K" int ("," int)* | "E" int | "P" int | "C" int
          | "paw" | "Y" | "diamond" | "cricket" | "dart" | "hourglass"

``+`` is disjoint union, evaluated left to right. ``K a,b,...`` with two or
more parts is the complete multipartite graph.
"""

from __future__ import annotations

import re

from . import graph as gc
from .errors import ParseError, SizeOutOfRange
from .graph import Graph

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z]+)|(?P<op>[+*,]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                             len(text) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", tok[2])
        self.i += 1
        return tok

    def positive(self) -> int:
        _, text, pos = self.take("int", "an integer")
        value = int(text)
        if value < 1:
            raise ParseError("integer parameters must be >= 1", pos)
        return value

    def expr(self) -> Graph:
        g = self.term()
        while self.peek()[1] == "+":
            pos = self.peek()[2]
            self.i += 1
            try:
                g = gc.disjoint_union(g, self.term())
            except SizeOutOfRange as exc:
                raise ParseError(str(exc), pos) from exc
        self.take("end", "'+' or end of input")
        return g

    def term(self) -> Graph:
        count = 1
        kind, _, pos = self.peek()
        if kind == "int":
            count = self.positive()
            star = self.peek()
            if star[1] != "*":
                raise ParseError("expected '*' after repetition count", star[2])
            self.i += 1
        g = self.atom()
        try:
            out = g
            for _ in range(count - 1):
                out = gc.disjoint_union(out, g)
        except SizeOutOfRange as exc:
            raise ParseError(str(exc), pos) from exc
        return out

    def atom(self) -> Graph:
        _, word, pos = self.take("word", "a graph name")
        try:
            if word in gc.NAMED_GRAPHS:
                return gc.named(word)
            if word == "K":
                parts = [self.positive()]
                while self.peek()[1] == ",":
                    self.i += 1
                    parts.append(self.positive())
                if len(parts) == 1:
                    return gc.complete(parts[0])
                return gc.complete_multipartite(*parts)
            if word in ("E", "P", "C"):
                n = self.positive()
                return {"E": gc.empty, "P": gc.path, "C": gc.cycle}[word](n)
        except SizeOutOfRange as exc:
            raise ParseError(str(exc), pos) from exc
        raise ParseError(f"unknown graph name {word!r}", pos)


def parse_expr(text: str) -> Graph:
    """Evaluate a graph expression; raises :class:`ParseError` with a position."""
    return _Parser(text).expr()
