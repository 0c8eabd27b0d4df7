"""Cycle/kill notation for rook elements.

Grammar::

    expr := term {term}
    term := base ["'"]
    base := cycle | kill | "e"
    cycle := "(" int {sp int} ")"
    kill := "k{" int {"," int} "}"

Juxtaposed terms are composed left to right and ``'`` is the star.
``"(1 2)k{2}"`` is ``(1 2)`` followed by killing output 2, i.e. the map
``1 -> KILL, 2 -> 1``.
"""
from .errors import DuplicatePoint, EmptyCycle, ExprSyntaxError
from .quasicycle import CYCLE, decompose
from .rook import IDENTITY, compose, cycle, epsilon, star


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.peek().isspace():
            self.pos += 1

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExprSyntaxError(f"expected a positive integer, found {found}", start)
        value = int(self.text[start:self.pos])
        if value < 1:
            raise ExprSyntaxError(f"indices start at 1, got {value}", start)
        return value, start

    def parse(self):
        self.skip_ws()
        if not self.peek():
            raise ExprSyntaxError("empty expression", self.pos)
        result = IDENTITY
        while True:
            self.skip_ws()
            if not self.peek():
                return result
            result = compose(result, self.term())

    def term(self):
        value = self.base()
        self.skip_ws()
        while self.peek() == "'":
            self.pos += 1
            value = star(value)
            self.skip_ws()
        return value

    def base(self):
        ch = self.peek()
        if ch == "e":
            self.pos += 1
            return IDENTITY
        if ch == "(":
            return self.cycle()
        if ch == "k":
            return self.kill()
        raise ExprSyntaxError(f"unexpected character {ch!r}", self.pos)

    def cycle(self):
        open_pos = self.pos
        self.expect("(")
        self.skip_ws()
        if self.peek() == ")":
            raise EmptyCycle("empty cycle", open_pos)
        points = []
        while True:
            value, at = self.integer()
            if value in points:
                raise DuplicatePoint(f"point {value} repeats in a cycle", at)
            points.append(value)
            if self.peek() == ")":
                self.pos += 1
                return cycle(points)
            if not self.peek().isspace():
                self.expect(")")
            self.skip_ws()
            if self.peek() == ")":
                self.pos += 1
                return cycle(points)

    def kill(self):
        self.expect("k")
        self.expect("{")
        points = []
        while True:
            self.skip_ws()
            value, _ = self.integer()
            points.append(value)
            self.skip_ws()
            if self.peek() == "}":
                self.pos += 1
                return epsilon(points)
            self.expect(",")


def parse(text):
    """Evaluate an element expression."""
    return _Parser(text).parse()


def format_element(r):
    """Canonical string of ``r``: its quasicycle factors by least point."""
    factors = decompose(r)
    if not factors:
        return "e"
    parts = []
    for q in factors:
        body = "(" + " ".join(map(str, q.points)) + ")"
        if q.kind != CYCLE:
            body += "k{%d}" % q.points[0]
        parts.append(body)
    return "".join(parts)


format = format_element  # noqa: A001
