"""Text and JSON forms of monomial ideals.

Grammar (whitespace between factors means multiplication)::

    ideal  := '(' term (',' term)* ')'
    term   := factor (('*' | ws) factor)*  |  '1'
    factor := var ('^' uint)?
    var    := x | y | z | w          (d <= 4)
            | 'x' uint               (indexed, x1 .. xd)

``(0)`` is the zero ideal and ``(1)`` the unit ideal.  Custom variable names
can be supplied explicitly; the dimension is then their count.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import MonomialIdeal, Vector, vector

LETTERS = ("x", "y", "z", "w")


class ParseError(ValueError):
    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


def default_names(d: int) -> tuple[str, ...]:
    if d <= len(LETTERS):
        return LETTERS[:d]
    return tuple(f"x{i}" for i in range(1, d + 1))


def indexed_names(d: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, d + 1))


@dataclass(frozen=True)
class IdealExpression:
    source: str
    d: int
    gens: tuple[Vector, ...]
    names: tuple[str, ...]

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.d, self.gens)

    def format(self, I: MonomialIdeal) -> str:
        """Print another ideal with this expression's naming convention."""
        if I.d != self.d:
            return format_ideal(I)
        return format_ideal(I, self.names)


class _Scanner:
    def __init__(self, text: str, names: Optional[Sequence[str]]):
        self.text = text
        self.pos = 0
        self.names = tuple(names) if names is not None else None
        self.style: Optional[str] = None

    def skip_ws(self) -> bool:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos > start

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def uint(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a non-negative integer", start)
        return int(self.text[start:self.pos])

    def variable(self) -> Optional[tuple[int, str]]:
        """Return ``(0-based index, style)`` for a variable at the cursor, else None."""
        start = self.pos
        if self.names is not None:
            best = None
            for k, name in enumerate(self.names):
                if self.text.startswith(name, start) and (best is None or len(name) > len(self.names[best])):
                    best = k
            if best is None:
                if self.peek().isalpha():
                    raise ParseError(f"unknown variable starting {self.peek()!r}", start)
                return None
            self.pos += len(self.names[best])
            return best, "explicit"
        ch = self.peek()
        if not ch.isalpha():
            return None
        if ch == "x" and self.text[start + 1:start + 2].isdigit():
            self.pos += 1
            k = self.uint()
            if k < 1:
                raise ParseError("indexed variables start at x1", start)
            return k - 1, "indexed"
        if ch not in LETTERS:
            raise ParseError(f"unknown variable {ch!r} (declare names explicitly)", start)
        self.pos += 1
        return LETTERS.index(ch), "letters"


def parse_ideal(text: str, names: Optional[Sequence[str]] = None) -> IdealExpression:
    """Parse an ideal expression.

    With ``names`` the variables are exactly those names, in order; otherwise
    the dimension is inferred from the highest variable used.
    """
    if not text or not text.strip():
        raise ParseError("empty ideal expression")
    if names is not None:
        names = tuple(n.strip() for n in names)
        if not names or any(not n or not n[0].isalpha() for n in names):
            raise ParseError(f"bad variable names {names!r}")
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate variable names {names!r}")
    sc = _Scanner(text, names)
    sc.expect("(")
    terms: list[Optional[dict[int, int]]] = []
    constants = set()
    while True:
        sc.skip_ws()
        if sc.peek().isdigit():
            at = sc.pos
            value = sc.uint()
            if value not in (0, 1):
                raise ParseError("coefficients are not part of monomial ideal data", at)
            constants.add(value)
            terms.append(None if value == 0 else {})
        else:
            terms.append(_term(sc))
        sc.skip_ws()
        if sc.peek() == ",":
            sc.pos += 1
            continue
        break
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input", sc.pos)
    if 0 in constants and len(terms) > 1:
        raise ParseError("0 cannot be combined with other generators")

    used = [i for t in terms if t for i in t]
    if names is not None:
        d = len(names)
        out_names = names
    else:
        if not used:
            raise ParseError("cannot infer the number of variables from a constant ideal")
        d = max(used) + 1
        out_names = indexed_names(d) if sc.style == "indexed" else default_names(d)
    gens = []
    for t in terms:
        if t is None:
            continue
        v = [0] * d
        for i, a in t.items():
            v[i] += a
        gens.append(vector(v, d))
    I = MonomialIdeal(d, tuple(gens))
    return IdealExpression(text, d, I.gens, tuple(out_names))


def _term(sc: _Scanner) -> dict[int, int]:
    exps: dict[int, int] = {}
    nfactors = 0
    while True:
        sc.skip_ws()
        at = sc.pos
        var = sc.variable()
        if var is None:
            if nfactors == 0:
                found = repr(sc.peek()) if sc.peek() else "end of input"
                raise ParseError(f"expected a variable, found {found}", at)
            return exps
        idx, style = var
        if style != "explicit":
            if sc.style is not None and sc.style != style:
                raise ParseError("mixed variable conventions (letters and indexed)", at)
            sc.style = style
        power = 1
        sc.skip_ws()
        if sc.peek() == "^":
            sc.pos += 1
            sc.skip_ws()
            power = sc.uint()
        exps[idx] = exps.get(idx, 0) + power
        nfactors += 1
        sc.skip_ws()
        if sc.peek() == "*":
            sc.pos += 1
            sc.skip_ws()
            if not sc.peek().isalpha():
                raise ParseError("expected a variable after '*'", sc.pos)


def format_monomial(v: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    names = default_names(len(v)) if names is None else names
    parts = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, v) if a]
    return " ".join(parts) if parts else "1"


def format_pure(q, names: Optional[Sequence[str]] = None) -> str:
    """Pure-power ideal with generators in variable order."""
    names = default_names(q.d) if names is None else names
    return "(" + ", ".join(names[i] if a == 1 else f"{names[i]}^{a}" for i, a in q.powers) + ")"


def format_ideal(I: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"d": I.d, "gens": [list(g) for g in I.gens]}


def ideal_from_json(obj: dict) -> MonomialIdeal:
    return MonomialIdeal(int(obj["d"]), tuple(tuple(g) for g in obj["gens"]))
