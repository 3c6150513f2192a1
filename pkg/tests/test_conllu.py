import io

import pytest

from hierbrack.conllu import conllu_to_string, read_conllu, write_conllu
from hierbrack.deptree import Arc, DepGraph
from hierbrack.errors import ConlluError, TreeStructureError

TWO_TOKENS = """1\tHi\thi\tINTJ\t_\t_\t0\troot\t_\t_
2\tthere\tthere\tADV\t_\t_\t1\tadvmod\t_\t_

"""

# ten sentences, with comments, a multi-word token line, and an empty node
FIXTURE = (
    "# sent_id = s1\n# text = Hi there\n" + TWO_TOKENS
    + "# sent_id = s2\n"
    + "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
    + "1\tdo\tdo\tAUX\t_\t_\t0\troot\t_\t_\n"
    + "2\tn't\tnot\tPART\t_\t_\t1\tadvmod\t_\t_\n"
    + "3\tstop\tstop\tVERB\t_\t_\t1\txcomp\t_\t_\n\n"
    + "# sent_id = s3\n"
    + "1\tok\tok\tINTJ\t_\t_\t0\troot\t_\t_\n"
    + "1.1\telided\t_\t_\t_\t_\t_\t_\t_\t_\n\n"
    + "".join(
        f"# sent_id = s{k}\n"
        + "".join(
            f"{i}\tw{i}\t_\t_\t_\t_\t{h}\tdep\t_\t_\n"
            for i, h in enumerate(heads, start=1)
        )
        + "\n"
        for k, heads in enumerate(
            [(0, 1), (2, 0), (0, 1, 2), (2, 0, 2), (0, 3, 1), (0, 1, 1, 1), (4, 4, 4, 0)],
            start=4,
        )
    )
)


def test_read_two_token_sentence():
    graphs = list(read_conllu(io.StringIO(TWO_TOKENS)))
    assert len(graphs) == 1
    g = graphs[0]
    assert g.n == 2
    assert g.arcs == frozenset({Arc(0, 1), Arc(1, 2)})
    assert g.deprels == {Arc(0, 1): "root", Arc(1, 2): "advmod"}
    assert g.form(1) == "Hi"


def test_read_empty_file():
    assert list(read_conllu(io.StringIO(""))) == []


def test_roundtrip_oracle():
    # read . write . read == read on the fixture
    first = list(read_conllu(io.StringIO(FIXTURE)))
    assert len(first) == 10
    text = conllu_to_string(first)
    second = list(read_conllu(io.StringIO(text)))
    assert second == first
    # and writing again is byte-identical
    assert conllu_to_string(second) == text


def test_skipped_lines_preserved_verbatim():
    graphs = list(read_conllu(io.StringIO(FIXTURE)))
    text = conllu_to_string(graphs)
    assert "1-2\tdon't" in text
    assert "1.1\telided" in text
    assert "# text = Hi there" in text


def test_malformed_line_reports_line_number():
    with pytest.raises(ConlluError) as exc:
        list(read_conllu(io.StringIO("1\tonly\tthree\n")))
    assert "line 1" in str(exc.value)


def test_head_out_of_range_names_sentence():
    bad = "# sent_id = oops\n1\tw\t_\t_\t_\t_\t9\tdep\t_\t_\n\n"
    with pytest.raises(TreeStructureError) as exc:
        list(read_conllu(io.StringIO(bad)))
    assert "oops" in str(exc.value)


def test_write_without_layout():
    g = DepGraph.from_heads((0, 1), deprels=["root", "obj"])
    out = io.StringIO()
    write_conllu([g], out)
    lines = out.getvalue().strip().split("\n")
    assert lines[0].split("\t")[6] == "0"
    assert lines[1].split("\t")[7] == "obj"
