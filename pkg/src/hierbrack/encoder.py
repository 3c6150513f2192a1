"""Encoders: a graph plus a rope cover becomes a label sequence.

Every structural arc contributes an opening and a closing superbracket;
every auxiliary arc contributes one semibracket at the endpoint it does not
share with its supporter.  For graphs without crossing arcs that is the
whole story.  With crossing arcs, closing brackets need skip indices and
opening semibrackets need pass counts, both of which are fully determined
by the lifetimes of the superbrackets on the decode stack: an opening
superbracket sits on the stack from its own position until the sweep of its
closing superbracket removes it.  The encoder therefore computes every
index from those lifetimes instead of replaying the stack, and then runs
the real decoder as a self-check.
"""

from __future__ import annotations

from .brackets import (
    CLOSE_LEFT,
    CLOSE_RIGHT,
    OPEN_LEFT,
    OPEN_RIGHT,
    BracketSymbol,
    Label,
    LabelSequence,
    _closer_key,
    _opener_key,
)
from .decoder import decode_indexed, decode_noncrossing
from .deptree import Arc, DepGraph, arc_sort_key, find_crossing, leans_on
from .errors import (
    CoverError,
    EncodingConsistencyError,
    MaxIndexExceededError,
    NonProjectiveInputError,
)
from .ropecover import (
    RopeCover,
    fourbit_rope_cover,
    naive_rope_cover,
    proper_rope_cover,
)

SCHEMES = ("naive", "fourbit", "optimal", "optimal-np")
_SCHEME_ALIASES = {
    "optimal-projective": "optimal",
    "optimal-nonprojective": "optimal-np",
    "optimal_projective": "optimal",
    "optimal_nonprojective": "optimal-np",
}


def normalize_scheme(name: str) -> str:
    key = _SCHEME_ALIASES.get(name, name)
    if key not in SCHEMES:
        raise ValueError(f"unknown scheme {name!r}, expected one of {SCHEMES}")
    return key


class _Slot:
    """One bracket symbol under construction, annotated with its arc."""

    __slots__ = ("shape", "is_super", "length", "pos", "arc", "opener",
                 "target", "consumer", "index", "push_at", "removed_at", "sweep_at")

    def __init__(self, shape, is_super, length, pos, arc):
        self.shape = shape
        self.is_super = is_super
        self.length = length
        self.pos = pos
        self.arc = arc
        self.opener = None      # closing super: its opening slot
        self.target = None      # fetching semi (> or \): position it must match
        self.consumer = None    # pushed semi (< or /): position whose sweep consumes it
        self.index = 0
        self.push_at = None
        self.removed_at = None
        self.sweep_at = None

    @property
    def symbol(self) -> BracketSymbol:
        return BracketSymbol(self.shape, self.is_super, self.index)


def _aux_case(aux: Arc, share_low: bool) -> tuple[str, int, int | None, int | None]:
    """Symbol placement for an auxiliary arc given which endpoint is shared.

    Returns (shape, position, fetch target, consumer position).
    """
    h, d = aux.head, aux.dep
    if h < d:  # rightward auxiliary arc
        if share_low:   # supporter's left endpoint is the head
            return (CLOSE_RIGHT, d, h, None)
        return (OPEN_RIGHT, h, None, d)  # supporter's right endpoint is the dep
    if share_low:       # supporter's left endpoint is the dep
        return (CLOSE_LEFT, h, d, None)
    return (OPEN_LEFT, d, None, h)      # supporter's right endpoint is the head


def _matches(closer_shape: str, opener_shape: str) -> bool:
    return (closer_shape == CLOSE_RIGHT and opener_shape == OPEN_RIGHT) or (
        closer_shape == CLOSE_LEFT and opener_shape == OPEN_LEFT
    )


class _Encoding:
    def __init__(self, g: DepGraph, cover: RopeCover, include_root: bool):
        self.g = g
        self.cover = cover
        self.include_root = include_root
        self.slots: list[list[_Slot]] = [[] for _ in range(g.n + 1)]
        self.super_openers: list[_Slot] = []
        self.super_closers: list[_Slot] = []

    # -- placement -------------------------------------------------------

    def place_structural(self) -> None:
        for arc in sorted(self.cover.structural, key=arc_sort_key):
            if arc.is_rightward:
                op = _Slot(OPEN_RIGHT, True, arc.length, arc.head, arc)
                cl = _Slot(CLOSE_RIGHT, True, arc.length, arc.dep, arc)
            else:
                op = _Slot(OPEN_LEFT, True, arc.length, arc.dep, arc)
                cl = _Slot(CLOSE_LEFT, True, arc.length, arc.head, arc)
            cl.opener = op
            self.slots[op.pos].append(op)
            self.slots[cl.pos].append(cl)
            self.super_openers.append(op)
            self.super_closers.append(cl)

    def compute_instants(self) -> None:
        """Assign push, sweep, and removal instants to the superbracket slots.

        An instant is (position, phase, ordering key, serial); closers run
        before openers at the same position, in canonical label order.
        """
        serial = 0
        for pos, here in enumerate(self.slots):
            closers = sorted(
                (s for s in here if s.shape in (CLOSE_RIGHT, CLOSE_LEFT)),
                key=lambda s: _closer_key(s.symbol, s.length),
            )
            for s in closers:
                s.sweep_at = (pos, 0) + _closer_key(s.symbol, s.length) + (serial,)
                serial += 1
            openers = sorted(
                (s for s in here if s.shape in (OPEN_RIGHT, OPEN_LEFT)),
                key=lambda s: _opener_key(s.symbol, s.length),
            )
            for s in openers:
                s.push_at = (pos, 1) + _opener_key(s.symbol, s.length) + (serial,)
                serial += 1
        for cl in self.super_closers:
            cl.opener.removed_at = cl.sweep_at

    # -- static index queries ---------------------------------------------

    def _alive_supers(self, at) -> list[_Slot]:
        return [
            o
            for o in self.super_openers
            if o.push_at < at and (o.removed_at is None or o.removed_at > at)
        ]

    def fetch_index(self, instant, target: int) -> int:
        """Skip count for a closing semibracket fetching a superbracket at
        ``target``; the virtual root serves targets at the suppressed 0."""
        alive = self._alive_supers(instant)
        at_target = [o for o in alive if o.pos == target]
        if at_target:
            shallowest = max(o.push_at for o in at_target)
            return sum(1 for o in alive if o.push_at > shallowest)
        if target == 0 and not self.include_root:
            return len(alive)
        raise CoverError(
            f"no live superbracket at position {target} for a closing semibracket"
        )

    def sweep_index(self, closer: _Slot) -> int:
        """Number of same-direction superbrackets a closing superbracket
        skips above its own opener."""
        gold = closer.opener
        alive = self._alive_supers(closer.sweep_at)
        return sum(
            1
            for o in alive
            if o.push_at > gold.push_at and _matches(closer.shape, o.shape)
        )

    def pass_count(self, push_at, pos: int, consumer: int) -> int:
        """Number of sweeps that pass over an opening semibracket before the
        sweep at its consumer position reaches it."""
        count = 0
        for cl in self.super_closers:
            if pos < cl.pos < consumer and cl.opener.push_at < push_at:
                count += 1
        return count

    def _candidate_index(self, aux: Arc, share_low: bool) -> int:
        shape, pos, target, consumer = _aux_case(aux, share_low)
        sym = BracketSymbol(shape, False, 0)
        if target is not None:
            instant = (pos, 0) + _closer_key(sym, aux.length) + (-1,)
            return self.fetch_index(instant, target)
        push_at = (pos, 1) + _opener_key(sym, aux.length) + (-1,)
        return self.pass_count(push_at, pos, consumer)

    # -- auxiliary placement ----------------------------------------------

    def place_auxiliaries(self, minimize_indices: bool) -> None:
        structural = self.cover.structural
        aux_arcs = sorted(
            (a for a in self.g.arcs if a not in structural), key=arc_sort_key
        )
        for aux in aux_arcs:
            designee = self.cover.aux_support.get(aux)
            share_low = self._choose_class(aux, designee, minimize_indices)
            shape, pos, target, consumer = _aux_case(aux, share_low)
            slot = _Slot(shape, False, aux.length, pos, aux)
            slot.target = target
            slot.consumer = consumer
            self.slots[pos].append(slot)

    def _choose_class(self, aux: Arc, designee: Arc | None, minimize: bool) -> bool:
        has_low = any(
            s.left == aux.left and leans_on(aux, s) for s in self.cover.structural
        )
        has_high = any(
            s.right == aux.right and leans_on(aux, s) for s in self.cover.structural
        )
        if not (has_low or has_high):
            raise CoverError(f"arc {aux} leans on no structural arc")
        if has_low != has_high:
            return has_low
        # both endpoints admit a supporter
        head_low = aux.is_rightward  # head-sharing side, tried first
        if not minimize:
            if designee is not None and not (
                designee.left == aux.left and designee.right == aux.right
            ):
                return designee.left == aux.left
            return head_low
        low_idx = self._candidate_index(aux, True)
        high_idx = self._candidate_index(aux, False)
        if low_idx != high_idx:
            return low_idx < high_idx
        if designee is not None and not (
            designee.left == aux.left and designee.right == aux.right
        ):
            return designee.left == aux.left
        return head_low

    # -- assembly ----------------------------------------------------------

    def assign_indices(self) -> None:
        for cl in self.super_closers:
            cl.index = self.sweep_index(cl)
        for here in self.slots:
            for s in here:
                if s.is_super:
                    continue
                if s.target is not None:
                    instant = (s.pos, 0) + _closer_key(s.symbol, s.length) + (-1,)
                    s.index = self.fetch_index(instant, s.target)
                else:
                    push_at = (s.pos, 1) + _opener_key(s.symbol, s.length) + (-1,)
                    s.index = self.pass_count(push_at, s.pos, s.consumer)

    def labels(self) -> tuple[Label, ...]:
        out = []
        start = 0 if self.include_root else 1
        for here in self.slots[start:]:
            closers = sorted(
                (s for s in here if s.shape in (CLOSE_RIGHT, CLOSE_LEFT)),
                key=lambda s: _closer_key(s.symbol, s.length),
            )
            openers = sorted(
                (s for s in here if s.shape in (OPEN_RIGHT, OPEN_LEFT)),
                key=lambda s: _opener_key(s.symbol, s.length),
            )
            out.append(tuple(s.symbol for s in closers) + tuple(s.symbol for s in openers))
        return tuple(out)


def _encode(g: DepGraph, cover: RopeCover, include_root: bool, minimize: bool) -> LabelSequence:
    enc = _Encoding(g, cover, include_root)
    enc.place_structural()
    enc.compute_instants()
    enc.place_auxiliaries(minimize)
    enc.assign_indices()
    deprels = g.token_deprels() if g.deprels else None
    return LabelSequence(enc.labels(), deprels, include_root)


def encode_noncrossing(
    g: DepGraph, cover: RopeCover, *, include_root: bool = False
) -> LabelSequence:
    """Hierarchical bracketing of a graph without crossing arcs.

    Raises if the graph has crossing arcs (use ``encode_nonprojective``) or
    if ``cover`` is not a rope cover of the graph.
    """
    pair = find_crossing(g.arcs)
    if pair is not None:
        raise NonProjectiveInputError(
            "graph has crossing arcs, use encode_nonprojective", pair
        )
    cover.check(g)
    return _encode(g, cover, include_root, minimize=False)


def encode_nonprojective(
    t: DepGraph, cover: RopeCover, *, include_root: bool = False
) -> LabelSequence:
    """Indexed hierarchical bracketing; crossing arcs allowed.

    Verifies its own output by decoding it back before returning; a
    mismatch raises EncodingConsistencyError (it carries both graphs).
    """
    cover.check(t)
    ls = _encode(t, cover, include_root, minimize=True)
    decoded = decode_indexed(ls)
    if decoded.n != t.n or decoded.arcs != t.arcs:
        raise EncodingConsistencyError(t, decoded)
    return ls


def cover_for_scheme(t: DepGraph, scheme: str) -> RopeCover:
    scheme = normalize_scheme(scheme)
    if scheme == "naive":
        return naive_rope_cover(t)
    if scheme == "fourbit":
        return fourbit_rope_cover(t)
    return proper_rope_cover(t)


def encode(
    t: DepGraph,
    scheme: str,
    *,
    include_root: bool = False,
    max_index: int | None = None,
) -> LabelSequence:
    """Encode with one of the named schemes.

    ``fourbit`` and ``optimal`` demand projective input; ``naive`` routes
    crossing trees through the indexed encoder; ``optimal-np`` always uses
    it.  ``max_index`` rejects encodings that need a larger bracket index.
    """
    scheme = normalize_scheme(scheme)
    cover = cover_for_scheme(t, scheme)
    crossing = find_crossing(t.arcs)
    if scheme in ("fourbit", "optimal"):
        if crossing is not None:
            raise NonProjectiveInputError(
                f"scheme {scheme!r} needs a projective tree", crossing
            )
        ls = encode_noncrossing(t, cover, include_root=include_root)
    elif scheme == "naive" and crossing is None:
        ls = encode_noncrossing(t, cover, include_root=include_root)
    else:
        ls = encode_nonprojective(t, cover, include_root=include_root)
    if max_index is not None:
        needed = ls.max_index()
        if needed > max_index:
            raise MaxIndexExceededError(needed, max_index)
    return ls


def decode_for_scheme(ls: LabelSequence, scheme: str) -> DepGraph:
    """The decoder matching ``encode``'s output for the given scheme."""
    scheme = normalize_scheme(scheme)
    if scheme in ("fourbit", "optimal"):
        return decode_noncrossing(ls)
    return decode_indexed(ls)
