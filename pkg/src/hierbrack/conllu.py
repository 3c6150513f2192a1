"""CoNLL-U reading and writing.

Only the basic tree layer is interpreted: HEAD populates arcs and DEPREL
populates relation strings.  Multi-word token lines (id like ``1-2``) and
empty nodes (``1.1``) are skipped for the arc structure but preserved
verbatim so that read -> write round-trips byte-identically apart from
HEAD/DEPREL rewrites.
"""

from __future__ import annotations

import io
from typing import IO, Iterable, Iterator

from .deptree import Arc, DepGraph
from .errors import ConlluError, TreeStructureError

N_COLS = 10
ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL, DEPS, MISC = range(N_COLS)


def _open_maybe(source, mode: str):
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        return open(source, mode, encoding="utf-8"), True
    return source, False


def _sentence_name(comments: list[str], ordinal: int) -> str:
    for c in comments:
        body = c.lstrip("#").strip()
        if body.startswith("sent_id"):
            _, _, value = body.partition("=")
            if value.strip():
                return value.strip()
    return f"#{ordinal}"


def _build_graph(
    rows: list[tuple[str, ...]],
    layout: list[tuple[str, object]],
    name: str,
) -> DepGraph:
    n = len(rows)
    arcs = set()
    deprels: dict[Arc, str] = {}
    for i, cols in enumerate(rows, start=1):
        if int(cols[ID]) != i:
            raise TreeStructureError(
                f"token ids not consecutive at position {i}", sentence=name
            )
        try:
            head = int(cols[HEAD])
        except ValueError:
            raise TreeStructureError(
                f"HEAD {cols[HEAD]!r} of token {i} is not an integer", sentence=name
            ) from None
        if not 0 <= head <= n:
            raise TreeStructureError(
                f"HEAD {head} of token {i} out of range 0..{n}", sentence=name
            )
        if head == i:
            raise TreeStructureError(f"token {i} is its own head", sentence=name)
        arc = Arc(head, i)
        arcs.add(arc)
        if cols[DEPREL] != "_":
            deprels[arc] = cols[DEPREL]
    return DepGraph(
        n=n,
        arcs=frozenset(arcs),
        deprels=deprels or None,
        tokens=tuple(rows),
        layout=tuple(layout),
    )


def read_conllu(source) -> Iterator[DepGraph]:
    """Yield one DepGraph per sentence from a path or text stream."""
    stream, owned = _open_maybe(source, "r")
    try:
        rows: list[tuple[str, ...]] = []
        layout: list[tuple[str, object]] = []
        comments: list[str] = []
        ordinal = 0
        for line_no, raw in enumerate(stream, start=1):
            line = raw.rstrip("\r\n")
            if not line:
                if rows or layout:
                    ordinal += 1
                    yield _build_graph(rows, layout, _sentence_name(comments, ordinal))
                rows, layout, comments = [], [], []
                continue
            if line.startswith("#"):
                comments.append(line)
                layout.append(("comment", line))
                continue
            cols = line.split("\t")
            if len(cols) != N_COLS:
                raise ConlluError(
                    f"expected {N_COLS} tab-separated columns, got {len(cols)}",
                    line_no=line_no,
                )
            if "-" in cols[ID] or "." in cols[ID]:
                layout.append(("skip", line))  # MWT ranges and empty nodes
                continue
            if not cols[ID].isdigit():
                raise ConlluError(f"bad token id {cols[ID]!r}", line_no=line_no)
            layout.append(("token", len(rows)))
            rows.append(tuple(cols))
        if rows or layout:
            ordinal += 1
            yield _build_graph(rows, layout, _sentence_name(comments, ordinal))
    finally:
        if owned:
            stream.close()


def _default_row(i: int, g: DepGraph) -> tuple[str, ...]:
    cols = ["_"] * N_COLS
    cols[ID] = str(i)
    cols[FORM] = g.form(i)
    return tuple(cols)


def sentence_to_conllu(g: DepGraph) -> str:
    """Render one sentence, patching HEAD/DEPREL from the graph."""
    heads: dict[int, int] = {a.dep: a.head for a in g.arcs}
    rels: dict[int, str] = {a.dep: r for a, r in (g.deprels or {}).items()}
    layout = g.layout
    if layout is None:
        layout = tuple(("token", i - 1) for i in range(1, g.n + 1))
    out = []
    for kind, payload in layout:
        if kind in ("comment", "skip"):
            out.append(payload)
            continue
        idx = payload  # 0-based position into token rows
        i = idx + 1
        base = g.tokens[idx] if g.tokens is not None else _default_row(i, g)
        cols = list(base)
        cols[HEAD] = str(heads.get(i, 0))
        cols[DEPREL] = rels.get(i, "_")
        out.append("\t".join(cols))
    return "\n".join(out) + "\n"


def write_conllu(graphs: Iterable[DepGraph], sink) -> None:
    """Write sentences to a path or text stream, blank-line separated."""
    stream, owned = _open_maybe(sink, "w")
    try:
        for g in graphs:
            stream.write(sentence_to_conllu(g))
            stream.write("\n")
    finally:
        if owned:
            stream.close()


def conllu_to_string(graphs: Iterable[DepGraph]) -> str:
    buf = io.StringIO()
    write_conllu(graphs, buf)
    return buf.getvalue()
