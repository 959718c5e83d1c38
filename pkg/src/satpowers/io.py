"""Text syntax for monomial ideals and table serialization.

Grammar (whitespace is ignored)::

    ideal  := term (',' term)*
    term   := factor ('*' factor)*
    factor := ident ('^' positive-integer)?

As extensions, a term may be the literal ``1`` (the unit monomial) and the
whole text may be ``0`` (the zero ideal); these make rendering round-trip.
Positions in error messages are 1-based columns.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from satpowers.monomial import MonomialIdeal

__all__ = ["IdealSource", "ParseError", "parse_ideal", "parse_variables", "render_ideal", "rows_to_csv", "rows_to_json"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


class ParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class IdealSource:
    variable_names: tuple[str, ...]
    generator_terms: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.variable_names)) != len(self.variable_names):
            raise ValueError(f"duplicate variable names in {list(self.variable_names)}")
        for name in self.variable_names:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")

    def to_ideal(self) -> MonomialIdeal:
        return parse_ideal(", ".join(self.generator_terms), self.variable_names)


def parse_variables(text: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise ValueError("no variables declared")
    IdealSource(names, ())
    return names


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, pattern: re.Pattern) -> str | None:
        self.skip()
        match = pattern.match(self.text, self.pos)
        if match is None:
            return None
        self.pos = match.end()
        return match.group()

    def column(self) -> int:
        self.skip()
        return self.pos + 1


def parse_ideal(text: str, variables: Sequence[str]) -> MonomialIdeal:
    variables = tuple(variables)
    index = {name: k for k, name in enumerate(variables)}
    if len(index) != len(variables):
        raise ValueError(f"duplicate variable names in {list(variables)}")
    d = len(variables)
    if text.strip() == "0":
        return MonomialIdeal.zero(d)
    sc = _Scanner(text)
    gens = []
    while True:
        gens.append(_parse_term(sc, index, d))
        ch = sc.peek()
        if ch == "":
            break
        if ch != ",":
            raise ParseError(f"expected ',' or '*' but found {ch!r}", sc.column())
        sc.pos += 1
    return MonomialIdeal(d, gens)


def _parse_term(sc: _Scanner, index: dict[str, int], d: int) -> tuple[int, ...]:
    exps = [0] * d
    if sc.peek() in ("", ",", "*"):
        raise ParseError("empty term", sc.column())
    if sc.peek() == "1":
        start = sc.column()
        tok = sc.take(_INT)
        if tok != "1":
            raise ParseError(f"unexpected number {tok}", start)
        if sc.peek() not in ("", ","):
            raise ParseError("the unit term '1' cannot be multiplied", sc.column())
        return tuple(exps)
    while True:
        start = sc.column()
        name = sc.take(_IDENT)
        if name is None:
            ch = sc.peek()
            if ch in ("", ",", "*"):
                raise ParseError("empty factor", start)
            raise ParseError(f"unexpected character {ch!r}", start)
        if name not in index:
            raise ParseError(f"unknown variable {name}", start)
        power = 1
        if sc.peek() == "^":
            sc.pos += 1
            at = sc.column()
            digits = sc.take(_INT)
            if digits is None or int(digits) < 1:
                raise ParseError("malformed exponent (expected a positive integer)", at)
            power = int(digits)
        exps[index[name]] += power
        if sc.peek() != "*":
            return tuple(exps)
        sc.pos += 1


def render_ideal(ideal: MonomialIdeal, variables: Sequence[str]) -> str:
    if len(variables) != ideal.d:
        raise ValueError(f"{len(variables)} names for {ideal.d} variables")
    if ideal.is_zero():
        return "0"
    terms = []
    for g in ideal.gens:
        factors = [name if k == 1 else f"{name}^{k}" for name, k in zip(variables, g) if k]
        terms.append("*".join(factors) or "1")
    return ", ".join(terms)


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    return value


def rows_to_json(rows: Iterable[dict], **extra) -> str:
    """Integers become strings so consumers never overflow."""
    payload = dict(extra)
    payload["rows"] = [{k: _jsonable(v) for k, v in row.items()} for row in rows]
    return json.dumps(payload, indent=2)


def rows_to_csv(rows: Sequence[dict]) -> str:
    rows = list(rows)
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()
