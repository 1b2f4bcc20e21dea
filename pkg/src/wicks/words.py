"""Letters, words and oriented Wicks forms.

Two textual syntaxes are accepted:

* verbose: whitespace separated tokens ``[a-z][a-z0-9]*`` with a trailing
  ``'`` marking an inverse, e.g. ``"a b c a' b' c'"``;
* compact: one ASCII letter per letter, upper case meaning inverse, e.g.
  ``"abcABC"``.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from . import _codes, errors

_TOKEN = re.compile(r"[a-z][a-z0-9]*'?")


class Letter(NamedTuple):
    base: str
    sign: int = 1

    def inverse(self) -> Letter:
        return Letter(self.base, -self.sign)

    def __str__(self):
        return self.base if self.sign > 0 else self.base + "'"


class Word(tuple):
    """An immutable sequence of :class:`Letter`; a linear representative."""

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, (Letter(*x) for x in letters))

    def rotate(self, k: int) -> Word:
        if not self:
            return self
        k %= len(self)
        return Word(self[k:] + self[:k])

    def bases(self) -> list[str]:
        """Bases in order of first occurrence."""
        return list(dict.fromkeys(x.base for x in self))

    def codes(self) -> tuple[int, ...]:
        """Signed integer codes, bases numbered by first occurrence from 1."""
        index = {b: i + 1 for i, b in enumerate(self.bases())}
        return tuple(index[x.base] * x.sign for x in self)

    def __str__(self):
        return " ".join(map(str, self))

    def __repr__(self):
        return f"Word({str(self)!r})"

    def compact(self) -> str:
        if len(self.bases()) > 26 or any(len(x.base) != 1 for x in self):
            raise ValueError("compact syntax needs single-letter bases")
        return "".join(x.base if x.sign > 0 else x.base.upper() for x in self)


def base_name(k: int) -> str:
    """Standard name of the ``k``-th base (0-based): a..z, a1..z1, a2..."""
    q, r = divmod(k, 26)
    return string.ascii_lowercase[r] + (str(q) if q else "")


def from_codes(codes: Iterable[int]) -> Word:
    return Word(Letter(base_name(abs(c) - 1), 1 if c > 0 else -1) for c in codes)


def parse(text: str, syntax: str = "auto") -> Word:
    """Parse a form written in verbose or compact syntax.

    ``syntax="auto"`` picks verbose when the text contains whitespace or an
    apostrophe, compact otherwise.

    >>> str(parse("abcABC"))
    "a b c a' b' c'"
    """
    stripped = text.strip()
    if not stripped:
        raise errors.ParseError("empty input")
    if syntax == "auto":
        syntax = "verbose" if (" " in stripped or "\t" in stripped
                               or "\n" in stripped or "'" in stripped) else "compact"
    if syntax == "compact":
        letters = []
        for i, ch in enumerate(text):
            if ch.isspace():
                continue
            if ch not in string.ascii_letters:
                raise errors.ParseError(f"unexpected character {ch!r}", i)
            letters.append(Letter(ch.lower(), -1 if ch.isupper() else 1))
        return Word(letters)
    if syntax != "verbose":
        raise ValueError(f"unknown syntax {syntax!r}")
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if not _TOKEN.fullmatch(tok):
            raise errors.ParseError(f"bad token {tok!r}", m.start())
        if tok.endswith("'"):
            letters.append(Letter(tok[:-1], -1))
        else:
            letters.append(Letter(tok, 1))
    return Word(letters)


def serialize(w: Word) -> str:
    return str(w)


@dataclass(frozen=True)
class WicksForm:
    """A validated oriented Wicks form, stored via a linear representative.

    Construction checks the three defining conditions cyclically and raises
    a subclass of :class:`~wicks.errors.InvalidForm` on failure.
    """

    word: Word

    def __post_init__(self):
        if not isinstance(self.word, Word):
            object.__setattr__(self, "word", Word(self.word))
        self.__dict__["partner"] = _codes.check(self.codes)

    @cached_property
    def codes(self) -> tuple[int, ...]:
        return self.word.codes()

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def edge_count(self) -> int:
        return len(self.word) // 2

    @cached_property
    def vertex_count(self) -> int:
        return len(_codes.vertex_cycles(self.partner))

    @cached_property
    def genus(self) -> int:
        # v - e + 1 = 2 - 2g
        return (self.edge_count - self.vertex_count + 1) // 2

    @property
    def is_maximal(self) -> bool:
        return self.length == 12 * self.genus - 6

    @cached_property
    def canonical_key(self) -> tuple[int, ...]:
        return _codes.canonical(self.codes)

    @cached_property
    def canonical(self) -> Word:
        return from_codes(_codes.from_rank(self.canonical_key))

    def base_of(self, name: str) -> int:
        """Code of base ``name`` in :attr:`codes`."""
        for x, c in zip(self.word, self.codes):
            if x.base == name:
                return abs(c)
        raise errors.UnknownBase(f"base {name!r} does not occur in the form")

    def __str__(self):
        return str(self.word)


def validate(w: Word | str) -> WicksForm:
    if isinstance(w, str):
        w = parse(w)
    return WicksForm(Word(w))


def canonicalize(f: WicksForm) -> Word:
    """Least rotation under first-occurrence renaming.

    First occurrences are always positive; a positive letter sorts before
    its inverse and bases sort by their renaming index.
    """
    return f.canonical


def is_isomorphic(f1: WicksForm, f2: WicksForm) -> bool:
    return f1.length == f2.length and f1.canonical_key == f2.canonical_key


GENUS_ONE = Word(parse("a b c a' b' c'"))
