"""Parser for the element text grammar shared by the CLI and report files.

    perm     ()  (a b c)  s  s^k        juxtaposition = group product
    vmap     v{a,b,c}  v{}  z@i         juxtaposition = pointwise product
    gelement g@i[<vmap>; <perm>]
    word     w@i[A:<gelement>; B:<gelement>; ...]

Any of these may be wrapped as ``inv(...)``. Printers live beside the types;
``parse(str(x)) == x`` for every canonical value.
"""

from __future__ import annotations

import re
from typing import Union

from . import amalgam, charmap, perm, semidirect
from .amalgam import Syllable, Word
from .charmap import VMap
from .errors import ParseError
from .perm import ShiftedPermutation
from .semidirect import GElement

Element = Union[ShiftedPermutation, VMap, GElement, Word]

_INT = re.compile(r"-?\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.ws()
        return self.text.startswith(lit, self.pos)

    def eat(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.eat(lit):
            self.error(f"expected {lit!r}")

    def integer(self) -> int:
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.ws()
        return self.pos >= len(self.text)

    # expressions ---------------------------------------------------------

    def product(self, stop: str) -> Element:
        start = self.pos
        atoms = []
        while not self.at_end() and not self.peek(stop):
            atoms.append(self.atom())
        if not atoms:
            self.pos = start
            self.error("expected an element")
        kinds = {type(a) for a in atoms}
        if len(kinds) > 1:
            self.pos = start
            self.error("cannot multiply elements of different kinds")
        return _multiply(atoms, self, start)

    def atom(self) -> Element:
        self.ws()
        if self.eat("inv("):
            inner = self.product(")")
            self.expect(")")
            return _invert(inner)
        if self.peek("w@"):
            return self.word()
        if self.peek("g@"):
            return self.gelement()
        if self.peek("v{") or self.peek("z@"):
            return self.vatom()
        if self.peek("(") or self.peek("s"):
            return self.patom()
        self.error("unexpected input")

    def patom(self) -> ShiftedPermutation:
        if self.eat("s"):
            return perm.shift(self.integer() if self.eat("^") else 1)
        self.expect("(")
        points = []
        while not self.eat(")"):
            if self.at_end():
                self.error("unterminated cycle")
            points.append(self.integer())
        start = self.pos
        try:
            return ShiftedPermutation.cycle(*points)
        except ValueError as e:
            self.pos = start
            self.error(str(e))

    def vatom(self) -> VMap:
        if self.eat("z@"):
            return charmap.z(self.integer())
        self.expect("v{")
        points: set[int] = set()
        if not self.eat("}"):
            while True:
                j = self.integer()
                if j in points:
                    self.error(f"repeated point {j}")
                points.add(j)
                if self.eat("}"):
                    break
                self.expect(",")
        return VMap(frozenset(points))

    def gelement(self) -> GElement:
        self.expect("g@")
        level = self.integer()
        self.expect("[")
        start = self.pos
        v = self.product(";")
        if not isinstance(v, VMap):
            self.pos = start
            self.error("expected a v-map")
        self.expect(";")
        start = self.pos
        h = self.product("]")
        if not isinstance(h, ShiftedPermutation):
            self.pos = start
            self.error("expected a permutation")
        self.expect("]")
        try:
            return GElement(level, v, h)
        except ValueError as e:
            self.error(str(e))

    def word(self) -> Word:
        self.expect("w@")
        level = self.integer()
        self.expect("[")
        syl = []
        if not self.eat("]"):
            while True:
                self.ws()
                side = self.text[self.pos : self.pos + 1]
                if side not in ("A", "B"):
                    self.error("expected side A or B")
                self.pos += 1
                self.expect(":")
                start = self.pos
                g = self.product_until_any(";", "]")
                if not isinstance(g, GElement):
                    self.pos = start
                    self.error("expected a factor element")
                syl.append(Syllable(side, g))
                if self.eat("]"):
                    break
                self.expect(";")
        try:
            return amalgam.reduce(Word(level, tuple(syl)))
        except ValueError as e:
            self.error(str(e))

    def product_until_any(self, *stops: str) -> Element:
        start = self.pos
        atoms = []
        while not self.at_end() and not any(self.peek(s) for s in stops):
            atoms.append(self.atom())
        if not atoms:
            self.error("expected an element")
        if len({type(a) for a in atoms}) > 1:
            self.pos = start
            self.error("cannot multiply elements of different kinds")
        return _multiply(atoms, self, start)


def _multiply(atoms: list, parser: _Parser, start: int) -> Element:
    acc = atoms[0]
    for a in atoms[1:]:
        try:
            if isinstance(acc, ShiftedPermutation):
                acc = perm.compose(acc, a)
            elif isinstance(acc, VMap):
                acc = charmap.vmul(acc, a)
            elif isinstance(acc, GElement):
                acc = semidirect.gmul(acc, a)
            else:
                acc = amalgam.wmul(acc, a)
        except ValueError as e:
            parser.pos = start
            parser.error(str(e))
    return acc


def _invert(x: Element) -> Element:
    if isinstance(x, ShiftedPermutation):
        return perm.inverse(x)
    if isinstance(x, VMap):
        return x
    if isinstance(x, GElement):
        return semidirect.ginv(x)
    return amalgam.winv(x)


def parse(text: str) -> Element:
    p = _Parser(text)
    x = p.product("\x00")
    if not p.at_end():
        p.error("trailing input")
    return x


def format_element(x: Element) -> str:
    return str(x)
