import pytest
from hypothesis import given, settings

from minsep.errors import GraphFormatError
from minsep.generators import build
from minsep.graph import path_graph
from minsep.graphio import format_graph, parse_graph, read_graph, write_graph
from test_graph import graphs


def test_format_is_sorted_and_one_indexed():
    text = format_graph(path_graph(3), ["P3"])
    assert text == "c P3\np 3 2\ne 1 2\ne 2 3\n"


def test_parse_with_comments_and_blank_lines():
    g = parse_graph("c hello\n\np 4 3\ne 2 1\nc mid\ne 3 2\ne 3 4\n")
    assert g == path_graph(4)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 1 2\n",
        "p 3 1\ne 1 4\n",
        "p 3 1\ne 2 2\n",
        "p 3 2\ne 1 2\n",
        "p 3\n",
        "p x 1\n",
        "p 0 0\n",
        "p 3 0\np 3 0\n",
        "p 3 1\nq 1 2\n",
        "p 3 1\ne 1\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_round_trip(g):
    assert parse_graph(format_graph(g)) == g
    assert format_graph(parse_graph(format_graph(g))) == format_graph(g)


@pytest.mark.parametrize(
    "family,params",
    [("theta", [3, 3]), ("line-theta", [3, 2]), ("wall", [3]), ("line-wall", [2]), ("grid", [3, 4]),
     ("c5blowup", [1, 2, 1, 2, 1, 1]), ("named", ["claw"])],
)  # fmt: skip
def test_generated_graphs_round_trip(tmp_path, family, params):
    g = build(family, params)
    path = tmp_path / "g.txt"
    write_graph(g, path, [family])
    assert read_graph(path) == g
