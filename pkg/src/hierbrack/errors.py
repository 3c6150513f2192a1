"""Exception types shared across the package."""

from __future__ import annotations


class HierbrackError(Exception):
    """Base class for all errors raised by this package."""


class LabelParseError(HierbrackError):
    """A label string does not match the bracket-token grammar."""

    def __init__(self, text: str, offset: int, reason: str):
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f"bad label {text!r} at offset {offset}: {reason}")


class ConlluError(HierbrackError):
    """Malformed CoNLL-U input."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class TreeStructureError(HierbrackError):
    """A sentence's HEAD column does not describe a usable structure."""

    def __init__(self, message: str, sentence: str | None = None):
        self.sentence = sentence
        if sentence is not None:
            message = f"sentence {sentence}: {message}"
        super().__init__(message)


class CoverError(HierbrackError):
    """A rope cover does not satisfy the preconditions of an encoder."""


class NonProjectiveInputError(HierbrackError):
    """A projective-only entry point received a graph with crossing arcs.

    ``pair`` names one offending pair of crossing arcs.
    """

    def __init__(self, message: str, pair=None):
        self.pair = pair
        if pair is not None:
            message = f"{message}: {pair[0]} crosses {pair[1]}"
        super().__init__(message)


class MaxIndexExceededError(HierbrackError):
    """An encoding needed a bracket index above the configured cap."""

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(f"encoding needs bracket index {needed}, cap is {cap}")


class EncodingConsistencyError(HierbrackError):
    """The encoder's decode self-check disagreed with the input graph.

    Should never fire; it is the safety net behind the stack simulation.
    Carries both graphs for post-mortem inspection.
    """

    def __init__(self, original, decoded):
        self.original = original
        self.decoded = decoded
        super().__init__(
            f"self-check mismatch: encoded {sorted(original.arcs)} "
            f"but decoding yields {sorted(decoded.arcs)}"
        )
