import random

from hierbrack.brackets import BracketSymbol, LabelSequence
from hierbrack.decoder import (
    decode_indexed,
    decode_noncrossing,
    decode_robust,
    run_decoder,
)
from hierbrack.deptree import Arc, DepGraph, validate_tree
from hierbrack.encoder import encode
from hierbrack.pseudoproj import projectivize
from hierbrack.testkit import random_heads

from conftest import COMPLEX_HEADS, COMPLEX_LABELS, STEPWISE_HEADS, STEPWISE_LABELS


def seq(texts, includes_root=True):
    return LabelSequence.from_texts(texts, includes_root=includes_root)


def test_decode_example_optimal(example_tree):
    ls = seq(["/*", ">", "<", "<", ">*/*", "<*", "\\*<", ">*"])
    assert decode_noncrossing(ls) == example_tree


def test_decode_example_fourbit(example_tree):
    ls = seq(["/*", ">", "<*", "<", "\\*>*/*", "<*", "\\*<*", "\\*>*"])
    assert decode_noncrossing(ls) == example_tree


def test_decode_crossing_auxiliary_case():
    # auxiliary arcs may cross each other with no indices needed; the
    # fetch-first-superbracket amendment makes the plain routine handle it
    ls = seq(["/*", ">", "<", ">", "<", ">*"])
    expected = DepGraph.from_heads((0, 5, 0, 5, 0))
    assert decode_noncrossing(ls) == expected
    assert decode_indexed(ls) == expected


def test_decode_stepwise_and_complex():
    assert decode_indexed(seq(STEPWISE_LABELS)) == DepGraph.from_heads(STEPWISE_HEADS)
    complex_graph = DepGraph.from_heads(COMPLEX_HEADS)
    assert decode_indexed(seq(COMPLEX_LABELS)) == complex_graph
    assert Arc(10, 13) in complex_graph.arcs  # the `/1` ... `\*` pair


def test_index_zero_decoders_agree_differential():
    # decode_indexed == decode_noncrossing on index-0 encodings
    rng = random.Random(99)
    for _ in range(3000):
        g = projectivize(DepGraph.from_heads(random_heads(rng.randint(1, 9), rng)))
        for scheme in ("naive", "fourbit", "optimal"):
            for include_root in (False, True):
                ls = encode(g, scheme, include_root=include_root)
                assert decode_noncrossing(ls) == decode_indexed(ls) == g


def test_robust_on_well_formed_is_clean(example_tree):
    ls = encode(example_tree, "optimal")
    g, diags = decode_robust(ls, want_tree=True)
    assert g == example_tree
    assert diags == []


def test_robust_all_closers_flat_tree():
    # n bare `>` semibrackets: with the root label suppressed each one
    # resolves against the virtual root, yielding the flat tree
    n = 6
    ls = seq([">"] * n, includes_root=False)
    g, diags = decode_robust(ls, want_tree=True)
    assert g.arcs == frozenset(Arc(0, i) for i in range(1, n + 1))
    assert validate_tree(g)
    assert diags == []
    # with an explicit root row there is no virtual root: every closer is
    # unmatched and every token is attached in post-processing
    ls2 = seq([">"] * n, includes_root=True)
    g2, diags2 = decode_robust(ls2, want_tree=True)
    assert validate_tree(g2)
    assert g2.arcs == frozenset(Arc(0, i) for i in range(1, n))  # n-1 tokens
    # n discarded closers (positions 0..n-1) plus n-1 forced attachments
    assert len(diags2) == 2 * n - 1
    assert sum("discarded" in d.action for d in diags2) == n


def test_robust_handles_garbage_symbols():
    ls = seq(["\\\\*", ">9<*", "", "/</>"], includes_root=False)
    g, diags = decode_robust(ls, want_tree=True)
    assert validate_tree(g)
    assert diags


def test_robust_want_tree_skips_cycles_and_second_heads():
    # two `>` at the same token try to give it two heads
    ls = seq(["/*", "/", ">>"], includes_root=True)
    g, diags = decode_robust(ls, want_tree=True)
    assert validate_tree(g)
    assert any("already has a head" in d.action for d in diags)


def test_robust_fuzz_small():
    rng = random.Random(4242)
    shapes = "/><\\"
    for _ in range(3000):
        n = rng.randint(0, 8)
        labels = []
        for _ in range(n):
            labels.append(
                tuple(
                    BracketSymbol(
                        shapes[rng.randrange(4)],
                        rng.random() < 0.5,
                        rng.randrange(4) if rng.random() < 0.3 else 0,
                    )
                    for _ in range(rng.randrange(4))
                )
            )
        ls = LabelSequence(tuple(labels), None, includes_root=False)
        g, _ = decode_robust(ls, want_tree=True)
        assert validate_tree(g)


def test_linear_stack_counts_on_index_zero_input(example_tree):
    for scheme in ("naive", "fourbit", "optimal"):
        for include_root in (False, True):
            ls = encode(example_tree, scheme, include_root=include_root)
            run = run_decoder(ls, indexed=False)
            opens = sum(1 for l in ls.labels for s in l if s.is_opening)
            closes = sum(1 for l in ls.labels for s in l if s.is_closing)
            assert run.counters.pushes == opens
            assert run.counters.pops + run.counters.peeks == closes
            assert run.counters.puts == 0


def test_indexed_decoder_counts_repositions(stepwise_tree):
    ls = encode(stepwise_tree, "optimal-np", include_root=True)
    run = run_decoder(ls, indexed=True)
    assert run.graph == stepwise_tree
    assert run.counters.puts > 0  # skips happened
    assert run.counters.max_super_depth == 3


def test_diagnostic_lines_format():
    ls = seq(["\\"], includes_root=False)
    _, diags = decode_robust(ls, want_tree=False)
    assert diags
    line = diags[0].line()
    assert line.split("\t")[0] == "1"
