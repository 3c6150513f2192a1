"""Evaluation scores, coverage metrics, and treebank encoding statistics.

Scores are plain token/sentence accuracies; punctuation is not excluded.
Theoretical coverage pushes gold trees through encode -> robust decode and
scores the result against gold; empirical coverage first replaces labels
and relations unseen in a training section by the training section's most
frequent ones.  For the projective schemes on crossing trees, the "real
labels" are the indexed encoding with its indices dropped, which is exactly
what a projective tagger could produce.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .brackets import LabelSequence, parse_label, render_label
from .decoder import decode_robust, run_decoder
from .deptree import DepGraph
from .encoder import cover_for_scheme, encode, encode_nonprojective, normalize_scheme
from .pseudoproj import deprojectivize, projectivize
from .ropecover import proper_rope_cover

INDEX_BUCKETS = ("0", "1", "2", ">=3")


@dataclass(frozen=True)
class Score:
    uas: float
    las: float
    um: float
    lm: float

    def as_percentages(self) -> tuple[float, float, float, float]:
        return tuple(round(100.0 * v, 2) for v in (self.uas, self.las, self.um, self.lm))

    def __str__(self) -> str:
        return "uas={:.4f} las={:.4f} um={:.4f} lm={:.4f}".format(
            self.uas, self.las, self.um, self.lm
        )


@dataclass(frozen=True)
class EncodingStats:
    distinct_labels: int
    labels: frozenset[str]
    index_histogram: dict[str, float]  # bucket -> % of trees
    rope_thickness_max: int
    n_trees: int
    n_skipped: int = 0


def score(gold: Sequence[DepGraph], pred: Sequence[DepGraph]) -> Score:
    """UAS/LAS per token and UM/LM per sentence."""
    if len(gold) != len(pred):
        raise ValueError(f"{len(gold)} gold vs {len(pred)} predicted sentences")
    tokens = correct_u = correct_l = 0
    sents = match_u = match_l = 0
    for k, (g, p) in enumerate(zip(gold, pred)):
        if g.n != p.n:
            raise ValueError(f"sentence {k + 1}: {g.n} gold tokens vs {p.n} predicted")
        gh = {a.dep: a.head for a in g.arcs}
        ph = {a.dep: a.head for a in p.arcs}
        gr = {a.dep: r for a, r in (g.deprels or {}).items()}
        pr = {a.dep: r for a, r in (p.deprels or {}).items()}
        su = sl = 0
        for i in range(1, g.n + 1):
            if gh.get(i) == ph.get(i):
                su += 1
                if gr.get(i) == pr.get(i):
                    sl += 1
        tokens += g.n
        correct_u += su
        correct_l += sl
        sents += 1
        if su == g.n:
            match_u += 1
        if sl == g.n:
            match_l += 1
    if tokens == 0:
        return Score(1.0, 1.0, 1.0, 1.0)
    return Score(
        correct_u / tokens,
        correct_l / tokens,
        match_u / sents if sents else 1.0,
        match_l / sents if sents else 1.0,
    )


def _coverage_labels(t: DepGraph, scheme: str) -> LabelSequence:
    """The labels a tagger for ``scheme`` would be trained on for tree t."""
    scheme = normalize_scheme(scheme)
    ls = encode_nonprojective(t, cover_for_scheme(t, scheme))
    if scheme in ("fourbit", "optimal"):
        return ls.without_indices()  # projective label space carries no indices
    return ls


def _decode_pipeline(ls: LabelSequence, pseudoproj: bool) -> DepGraph:
    decoded, _ = decode_robust(ls, want_tree=True)
    if pseudoproj:
        decoded = deprojectivize(decoded)
    return decoded


def theoretical_coverage(
    treebank: Sequence[DepGraph], scheme: str, pseudoproj: bool = False
) -> Score:
    """Score of encode -> robust decode against gold, per Appendix A.3."""
    preds = []
    for t in treebank:
        work = projectivize(t) if pseudoproj else t
        ls = _coverage_labels(work, scheme)
        preds.append(_decode_pipeline(ls, pseudoproj))
    return score(list(treebank), preds)


def empirical_coverage(
    train: Sequence[DepGraph],
    eval_set: Sequence[DepGraph],
    scheme: str,
    pseudoproj: bool = False,
) -> Score:
    """Like theoretical coverage, but labels and relations unseen in the
    training section fall back to the training section's most frequent."""
    label_counts: Counter[str] = Counter()
    rel_counts: Counter[str] = Counter()
    for t in train:
        work = projectivize(t) if pseudoproj else t
        ls = _coverage_labels(work, scheme)
        label_counts.update(ls.token_texts())
        rel_counts.update(r for r in (ls.deprels or ()) if r is not None)
    if not label_counts:
        raise ValueError("empty training section")
    fallback_label = min(label_counts, key=lambda l: (-label_counts[l], l))
    fallback_rel = (
        min(rel_counts, key=lambda r: (-rel_counts[r], r)) if rel_counts else None
    )

    preds = []
    for t in eval_set:
        work = projectivize(t) if pseudoproj else t
        ls = _coverage_labels(work, scheme)
        texts = [
            txt if txt in label_counts else fallback_label
            for txt in ls.token_texts()
        ]
        rels = None
        if ls.deprels is not None:
            rels = [
                r if r is None or r in rel_counts else fallback_rel
                for r in ls.deprels
            ]
        patched = LabelSequence(
            tuple(parse_label(txt) for txt in texts),
            tuple(rels) if rels is not None else None,
            includes_root=False,
        )
        preds.append(_decode_pipeline(patched, pseudoproj))
    return score(list(eval_set), preds)


def rope_thickness(t: DepGraph) -> int:
    """Maximum number of proper-cover structural arcs covering a fencepost.

    Equals the decoder's maximum simultaneous open-superbracket stack depth
    for the root-emitted optimal encoding.
    """
    structural = proper_rope_cover(t).structural
    best = 0
    for k in range(t.n):  # fencepost between positions k and k+1
        here = sum(1 for a in structural if a.left <= k < a.right)
        if here > best:
            best = here
    return best


def encoding_stats(
    treebank: Iterable[DepGraph], scheme: str, pseudoproj: bool = False
) -> EncodingStats:
    """Distinct bracket labels, per-tree max-index histogram, rope thickness.

    Projective schemes skip crossing trees (counted in ``n_skipped``) unless
    ``pseudoproj`` transforms them first.
    """
    scheme = normalize_scheme(scheme)
    labels: set[str] = set()
    buckets = Counter()
    thick_max = 0
    n_trees = 0
    n_skipped = 0
    for t in treebank:
        work = projectivize(t) if pseudoproj else t
        try:
            ls = encode(work, scheme)
        except Exception:
            n_skipped += 1
            continue
        n_trees += 1
        labels.update(render_label(l) for l in ls.token_labels)
        mi = ls.max_index()
        buckets[INDEX_BUCKETS[min(mi, 3)]] += 1
        thick = rope_thickness(work)
        if thick > thick_max:
            thick_max = thick
    histogram = {
        b: (100.0 * buckets[b] / n_trees if n_trees else 0.0) for b in INDEX_BUCKETS
    }
    return EncodingStats(
        distinct_labels=len(labels),
        labels=frozenset(labels),
        index_histogram=histogram,
        rope_thickness_max=thick_max,
        n_trees=n_trees,
        n_skipped=n_skipped,
    )


def max_superbracket_depth(ls: LabelSequence) -> int:
    """Instrumented maximum open-superbracket stack depth while decoding."""
    return run_decoder(ls, indexed=True).counters.max_super_depth
