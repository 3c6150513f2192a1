"""Bracket symbols, the label text grammar, and the 4-bit label table.

Symbol shapes: ``/`` opens rightward, ``>`` closes rightward, ``<`` opens
leftward, ``\\`` closes leftward.  A ``*`` suffix marks a superbracket
(structural arc); a plain shape is a semibracket (auxiliary arc).  A decimal
suffix > 0 is the skip index used by the non-projective extension, so
``>*2`` is a close-right superbracket with index 2 and ``<1`` is an
open-left semibracket with index 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import LabelParseError

OPEN_RIGHT = "/"
CLOSE_RIGHT = ">"
OPEN_LEFT = "<"
CLOSE_LEFT = "\\"
SHAPES = (OPEN_RIGHT, CLOSE_RIGHT, OPEN_LEFT, CLOSE_LEFT)
OPENING_SHAPES = frozenset((OPEN_RIGHT, OPEN_LEFT))
CLOSING_SHAPES = frozenset((CLOSE_RIGHT, CLOSE_LEFT))


class BracketSymbol(NamedTuple):
    shape: str
    is_super: bool
    index: int = 0

    @property
    def is_opening(self) -> bool:
        return self.shape in OPENING_SHAPES

    @property
    def is_closing(self) -> bool:
        return self.shape in CLOSING_SHAPES

    @property
    def text(self) -> str:
        return self.shape + ("*" if self.is_super else "") + (str(self.index) if self.index else "")


Label = tuple[BracketSymbol, ...]

EMPTY_LABEL: Label = ()


def render_label(label: Label) -> str:
    return "".join(sym.text for sym in label)


def parse_label(text: str) -> Label:
    """Parse concatenated bracket tokens; inverse of render_label."""
    symbols: list[BracketSymbol] = []
    i = 0
    while i < len(text):
        shape = text[i]
        if shape not in SHAPES:
            raise LabelParseError(text, i, f"unknown character {shape!r}")
        i += 1
        is_super = False
        if i < len(text) and text[i] == "*":
            is_super = True
            i += 1
        start = i
        while i < len(text) and text[i].isdigit():
            i += 1
        index = int(text[start:i]) if i > start else 0
        symbols.append(BracketSymbol(shape, is_super, index))
    return tuple(symbols)


# Within-label ordering: closing symbols first in increasing order of arc
# length, then opening symbols in decreasing order of arc length.  Ties
# (possible only in graphs with length-2 cycles) break so that decoding
# still pairs every bracket: semibrackets fetch before superbrackets pop on
# the closing side, and superbrackets are pushed below semibrackets on the
# opening side.

def _closer_key(sym: BracketSymbol, length: int) -> tuple:
    return (length, 1 if sym.is_super else 0, 0 if sym.shape == CLOSE_LEFT else 1)


def _opener_key(sym: BracketSymbol, length: int) -> tuple:
    return (-length, 0 if sym.is_super else 1, 0 if sym.shape == OPEN_RIGHT else 1)


def canonicalize(annotated: Sequence[tuple[BracketSymbol, int]]) -> Label:
    """Order a label's symbols given transient (symbol, arc length) pairs."""
    closers = sorted(
        ((s, l) for s, l in annotated if s.is_closing), key=lambda p: _closer_key(*p)
    )
    openers = sorted(
        ((s, l) for s, l in annotated if s.is_opening), key=lambda p: _opener_key(*p)
    )
    return tuple(s for s, _ in closers) + tuple(s for s, _ in openers)


# The sixteen labels of the 4-bit encoding.  b0: the node is a left (0) or
# right (1) dependent of its head; b1: it is the farthest dependent of its
# head in that direction; b2: it has left dependents; b3: it has right
# dependents.

class FourBitLabel(NamedTuple):
    b0: bool
    b1: bool
    b2: bool
    b3: bool

    @property
    def bits(self) -> str:
        return "".join("1" if b else "0" for b in self)

    @classmethod
    def from_bits(cls, bits: str) -> "FourBitLabel":
        if len(bits) != 4 or any(c not in "01" for c in bits):
            raise ValueError(f"need 4 bits, got {bits!r}")
        return cls(*(c == "1" for c in bits))


def fourbit_to_label(fb: FourBitLabel) -> Label:
    incoming = BracketSymbol(CLOSE_RIGHT if fb.b0 else OPEN_LEFT, fb.b1)
    label = [incoming]
    if fb.b2:
        label.insert(0, BracketSymbol(CLOSE_LEFT, True))
    if fb.b3:
        label.append(BracketSymbol(OPEN_RIGHT, True))
    return tuple(label)


def label_to_fourbit(label: Label) -> FourBitLabel:
    rest = list(label)
    b2 = bool(rest) and rest[0] == BracketSymbol(CLOSE_LEFT, True)
    if b2:
        rest.pop(0)
    b3 = bool(rest) and rest[-1] == BracketSymbol(OPEN_RIGHT, True)
    if b3:
        rest.pop()
    if len(rest) != 1 or rest[0].shape not in (CLOSE_RIGHT, OPEN_LEFT) or rest[0].index:
        raise ValueError(f"label {render_label(label)!r} is outside the 4-bit table")
    b0 = rest[0].shape == CLOSE_RIGHT
    b1 = rest[0].is_super
    return FourBitLabel(b0, b1, b2, b3)


@dataclass(frozen=True)
class LabelSequence:
    """One label per position, plus optional relation strings per token.

    ``labels`` covers positions 0..n when ``includes_root`` is set and
    1..n otherwise.  ``deprels`` is always token-aligned (length n).
    """

    labels: tuple[Label, ...]
    deprels: tuple[str | None, ...] | None = None
    includes_root: bool = False

    def __post_init__(self):
        if self.deprels is not None and len(self.deprels) != self.n:
            raise ValueError("deprels must have one entry per token")

    @property
    def n(self) -> int:
        return len(self.labels) - (1 if self.includes_root else 0)

    @property
    def token_labels(self) -> tuple[Label, ...]:
        return self.labels[1:] if self.includes_root else self.labels

    def token_texts(self) -> list[str]:
        return [render_label(l) for l in self.token_labels]

    def texts(self) -> list[str]:
        return [render_label(l) for l in self.labels]

    def max_index(self) -> int:
        return max((s.index for l in self.labels for s in l), default=0)

    def without_indices(self) -> "LabelSequence":
        labels = tuple(
            tuple(BracketSymbol(s.shape, s.is_super, 0) for s in l) for l in self.labels
        )
        return LabelSequence(labels, self.deprels, self.includes_root)

    @classmethod
    def from_texts(
        cls,
        texts: Iterable[str],
        deprels: Iterable[str | None] | None = None,
        includes_root: bool = False,
    ) -> "LabelSequence":
        labels = tuple(parse_label(t) for t in texts)
        rels = tuple(deprels) if deprels is not None else None
        return cls(labels, rels, includes_root)


INCOMING_SYMBOLS = frozenset(
    BracketSymbol(shape, sup)
    for shape in (CLOSE_RIGHT, OPEN_LEFT)
    for sup in (True, False)
)


def incoming_symbol_count(label: Label) -> int:
    """Number of head-marking symbols (every token of a tree carries one)."""
    return sum(1 for s in label if BracketSymbol(s.shape, s.is_super) in INCOMING_SYMBOLS)
