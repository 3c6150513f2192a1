"""Batch command line for treebank-scale encoding, decoding, and reports.

Encoded sentences travel as TSV blocks (ID, FORM, LABEL, DEPREL; blank line
between sentences), directly consumable as tagger train files.  Empty
labels and missing relations are written as ``_``.  With
``--emit-root-label`` a leading row with ID 0 carries the root's label,
otherwise the root's brackets are folded into the token labels and
reconstructed at decode time.
"""

from __future__ import annotations

import argparse
import os
import sys
from multiprocessing import Pool

from . import __version__
from .brackets import LabelSequence, parse_label, render_label
from .conllu import read_conllu, sentence_to_conllu
from .decoder import decode_robust
from .deptree import DepGraph
from .encoder import SCHEMES, encode, normalize_scheme
from .errors import HierbrackError, LabelParseError
from .metrics import empirical_coverage, encoding_stats, score, theoretical_coverage
from .pseudoproj import deprojectivize, projectivize
from .testkit import random_heads

import random

ROOT_FORM = "<root>"
GEN_RELS = ("nsubj", "obj", "obl", "nmod", "det", "amod", "advmod", "case")


def _out_stream(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


# ---------------------------------------------------------------- encode --

def _encode_one(args) -> tuple[str | None, str | None]:
    """Worker: graph -> (tsv block, error line)."""
    g, scheme, pseudoproj, max_index, emit_root = args
    try:
        work = projectivize(g) if pseudoproj else g
        ls = encode(work, scheme, include_root=emit_root, max_index=max_index)
    except HierbrackError as exc:
        return None, str(exc)
    rows = []
    labels = ls.labels if not emit_root else ls.labels
    if emit_root:
        rows.append(f"0\t{ROOT_FORM}\t{render_label(ls.labels[0]) or '_'}\t_")
        labels = ls.labels[1:]
    rels = ls.deprels or (None,) * ls.n
    for i, (label, rel) in enumerate(zip(labels, rels), start=1):
        rows.append(
            f"{i}\t{work.form(i)}\t{render_label(label) or '_'}\t{rel or '_'}"
        )
    return "\n".join(rows) + "\n", None


def cmd_encode(ns) -> int:
    sentences = list(read_conllu(ns.input))
    jobs = [
        (g, ns.scheme, ns.pseudoproj, ns.max_index, ns.emit_root_label)
        for g in sentences
    ]
    out, close = _out_stream(ns.output)
    errors = []
    try:
        for k, (block, err) in enumerate(_parallel(_encode_one, jobs, ns.jobs), 1):
            if err is not None:
                errors.append(f"sentence {k}: {err}")
                continue
            out.write(block)
            out.write("\n")
    finally:
        if close:
            out.close()
    for line in errors:
        print(line, file=sys.stderr)
    return 1 if errors else 0


# ---------------------------------------------------------------- decode --

def _read_tsv_blocks(path: str):
    """Yield (first line number, rows) per blank-line-separated block."""
    stream = open(path, encoding="utf-8") if path != "-" else sys.stdin
    rows: list[tuple[int, list[str]]] = []
    try:
        for line_no, raw in enumerate(stream, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                if rows:
                    yield rows
                rows = []
                continue
            if line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise HierbrackError(
                    f"line {line_no}: expected 4 tab-separated columns, got {len(cols)}"
                )
            rows.append((line_no, cols))
        if rows:
            yield rows
    finally:
        if path != "-":
            stream.close()


def _decode_one(args):
    rows, deproj = args
    includes_root = rows[0][1][0] == "0"
    texts, rels = [], []
    for line_no, cols in rows:
        try:
            label = parse_label(cols[2] if cols[2] != "_" else "")
        except LabelParseError as exc:
            return None, f"line {line_no}: {exc}", None
        texts.append(label)
        rels.append(cols[3] if cols[3] != "_" else None)
    if includes_root:
        token_rels = tuple(rels[1:])
        labels = tuple(texts)
    else:
        token_rels = tuple(rels)
        labels = tuple(texts)
    ls = LabelSequence(labels, token_rels, includes_root=includes_root)
    graph, diags = decode_robust(ls, want_tree=True)
    if deproj:
        graph = deprojectivize(graph)
    forms = tuple(
        tuple([str(i + 1), cols[1]] + ["_"] * 8)
        for i, (_, cols) in enumerate(r for r in rows if r[1][0] != "0")
    )
    graph = DepGraph(graph.n, graph.arcs, graph.deprels, tokens=forms)
    return sentence_to_conllu(graph), None, [d.line() for d in diags]


def cmd_decode(ns) -> int:
    blocks = list(_read_tsv_blocks(ns.input))
    out, close = _out_stream(ns.output)
    diag_path = ns.diagnostics
    if diag_path is None and ns.output not in (None, "-"):
        diag_path = ns.output + ".diag"
    diag_lines: list[str] = []
    errors = []
    try:
        for k, (text, err, diags) in enumerate(
            _parallel(_decode_one, [(b, ns.deproj) for b in blocks], ns.jobs), 1
        ):
            if err is not None:
                errors.append(f"sentence {k}: {err}")
                continue
            out.write(text)
            out.write("\n")
            diag_lines.extend(f"{k}\t{line}" for line in diags)
    finally:
        if close:
            out.close()
    if diag_path:
        with open(diag_path, "w", encoding="utf-8") as f:
            f.write("\n".join(diag_lines) + ("\n" if diag_lines else ""))
    for line in errors:
        print(line, file=sys.stderr)
    return 1 if errors else 0


# ----------------------------------------------------------------- stats --

def cmd_stats(ns) -> int:
    trees = list(read_conllu(ns.input))
    stats = encoding_stats(trees, ns.scheme, pseudoproj=ns.pseudoproj)
    rels = set()
    for t in trees:
        work = projectivize(t) if ns.pseudoproj else t
        rels.update(r for r in work.token_deprels() if r is not None)
    hist = stats.index_histogram
    header = ["#trees", "#labels", "#rels", "0", "1", "2", ">=3", "thickness"]
    row = [
        str(stats.n_trees),
        str(stats.distinct_labels),
        str(len(rels)),
        f"{hist['0']:.2f}",
        f"{hist['1']:.2f}",
        f"{hist['2']:.2f}",
        f"{hist['>=3']:.2f}",
        str(stats.rope_thickness_max),
    ]
    widths = [max(len(h), len(v)) for h, v in zip(header, row)]
    print(f"scheme={normalize_scheme(ns.scheme)}  labels={stats.distinct_labels}"
          + (f"  skipped={stats.n_skipped}" if stats.n_skipped else ""))
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    print("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as f:
            f.write("\t".join(header) + "\n")
            f.write("\t".join(row) + "\n")
    if ns.figure:
        from .report import render_stats_figure

        render_stats_figure(stats, normalize_scheme(ns.scheme), ns.figure)
    return 0


# ------------------------------------------------------------ eval/cover --

def _print_score(name: str, sc) -> None:
    uas, las, um, lm = sc.as_percentages()
    print(f"{name}\tUAS={uas:.2f}\tLAS={las:.2f}\tUM={um:.2f}\tLM={lm:.2f}")


def cmd_eval(ns) -> int:
    gold = list(read_conllu(ns.gold))
    pred = list(read_conllu(ns.pred))
    sc = score(gold, pred)
    _print_score("eval", sc)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as f:
            f.write("uas\tlas\tum\tlm\n")
            f.write("\t".join(f"{v:.2f}" for v in sc.as_percentages()) + "\n")
    if ns.figure:
        from .report import render_score_figure

        render_score_figure({"eval": sc}, f"{ns.gold} vs {ns.pred}", ns.figure)
    return 0


def cmd_coverage(ns) -> int:
    train = list(read_conllu(ns.train))
    eval_set = list(read_conllu(ns.eval))
    if ns.empirical:
        sc = empirical_coverage(train, eval_set, ns.scheme, pseudoproj=ns.pseudoproj)
        name = "emp"
    else:
        sc = theoretical_coverage(eval_set, ns.scheme, pseudoproj=ns.pseudoproj)
        name = "th"
    _print_score(f"{name}:{normalize_scheme(ns.scheme)}", sc)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as f:
            f.write("kind\tscheme\tuas\tlas\tum\tlm\n")
            f.write(
                f"{name}\t{normalize_scheme(ns.scheme)}\t"
                + "\t".join(f"{v:.2f}" for v in sc.as_percentages())
                + "\n"
            )
    if ns.figure:
        from .report import render_score_figure

        render_score_figure(
            {name: sc}, f"{normalize_scheme(ns.scheme)} coverage", ns.figure
        )
    return 0


# ------------------------------------------------------------------- gen --

def cmd_gen(ns) -> int:
    seed = ns.seed
    if seed is None:
        seed = int(os.environ.get("HIERBRACK_SEED", "0"))
    rng = random.Random(seed)
    out, close = _out_stream(ns.output)
    try:
        for k in range(ns.sentences):
            n = rng.randint(ns.min_tokens, ns.max_tokens)
            heads = random_heads(n, rng, allow_nonprojective=not ns.projective)
            rels = [GEN_RELS[rng.randrange(len(GEN_RELS))] for _ in range(n)]
            g = DepGraph.from_heads(heads, deprels=rels)
            out.write(f"# sent_id = gen{k + 1}\n")
            out.write(sentence_to_conllu(g))
            out.write("\n")
    finally:
        if close:
            out.close()
    return 0


# ------------------------------------------------------------------ main --

def _parallel(fn, jobs, n_jobs):
    if n_jobs and n_jobs > 1:
        with Pool(n_jobs) as pool:
            yield from pool.imap(fn, jobs, chunksize=64)
    else:
        for job in jobs:
            yield fn(job)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hierbrack", description=__doc__)
    p.add_argument("--version", action="version", version=f"hierbrack {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="CoNLL-U -> label TSV")
    enc.add_argument("input")
    enc.add_argument("-o", "--output", default=None)
    enc.add_argument("--scheme", default="optimal-np",
                     choices=sorted(set(SCHEMES) | {"optimal-projective", "optimal-nonprojective"}))
    enc.add_argument("--pseudoproj", action="store_true",
                     help="projectivize before encoding")
    enc.add_argument("--max-index", type=int, default=None,
                     help="reject sentences needing a larger bracket index")
    enc.add_argument("--jobs", type=int, default=1)
    enc.add_argument("--emit-root-label", action="store_true",
                     help="write the root's label as an ID-0 row")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="label TSV -> CoNLL-U")
    dec.add_argument("input")
    dec.add_argument("-o", "--output", default=None)
    dec.add_argument("--deproj", action="store_true",
                     help="deprojectivize after decoding")
    dec.add_argument("--diagnostics", default=None,
                     help="sidecar file for decode diagnostics")
    dec.add_argument("--jobs", type=int, default=1)
    dec.set_defaults(func=cmd_decode)

    st = sub.add_parser("stats", help="treebank encoding statistics")
    st.add_argument("input")
    st.add_argument("--scheme", default="optimal-np",
                    choices=sorted(set(SCHEMES) | {"optimal-projective", "optimal-nonprojective"}))
    st.add_argument("--pseudoproj", action="store_true")
    st.add_argument("-o", "--output", default=None, help="TSV output path")
    st.add_argument("--figure", default=None, help="render a PNG summary")
    st.set_defaults(func=cmd_stats)

    ev = sub.add_parser("eval", help="UAS/LAS/UM/LM of predicted vs gold")
    ev.add_argument("gold")
    ev.add_argument("pred")
    ev.add_argument("-o", "--output", default=None)
    ev.add_argument("--figure", default=None)
    ev.set_defaults(func=cmd_eval)

    cov = sub.add_parser("coverage", help="theoretical/empirical coverage")
    cov.add_argument("train")
    cov.add_argument("eval")
    cov.add_argument("--scheme", default="optimal-np",
                     choices=sorted(set(SCHEMES) | {"optimal-projective", "optimal-nonprojective"}))
    cov.add_argument("--empirical", action="store_true")
    cov.add_argument("--pseudoproj", action="store_true")
    cov.add_argument("-o", "--output", default=None)
    cov.add_argument("--figure", default=None)
    cov.set_defaults(func=cmd_coverage)

    gen = sub.add_parser("gen", help="generate random trees as CoNLL-U")
    gen.add_argument("-o", "--output", default=None)
    gen.add_argument("--sentences", type=int, default=100)
    gen.add_argument("--min-tokens", type=int, default=1)
    gen.add_argument("--max-tokens", type=int, default=12)
    gen.add_argument("--projective", action="store_true")
    gen.add_argument("--seed", type=int, default=None,
                     help="default: HIERBRACK_SEED env var, else 0")
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except HierbrackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
