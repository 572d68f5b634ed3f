"""Text formats: round trips and line-numbered rejection of malformed input."""

import random

import pytest

import hornkeys as hk
from hornkeys.errors import InputError
from hornkeys.formats import (
    parse_general_cnf,
    parse_graph,
    parse_horn,
    parse_hypergraph,
    parse_roles,
    parse_tss,
    serialize_general_cnf,
    serialize_graph,
    serialize_horn,
    serialize_hypergraph,
    serialize_roles,
    serialize_tss,
)
from hornkeys.oracles import random_horn_cnf, random_sperner, random_threshold_graph


def test_horn_round_trip(intro_cnf):
    text = serialize_horn(intro_cnf)
    lines = text.splitlines()
    assert lines[0] == "horn 5 4"
    assert lines[1] == "names a b c d e"
    assert lines[2] == "1 -> 2"
    assert parse_horn(text) == intro_cnf
    # serialization is a fixed point
    assert serialize_horn(parse_horn(text)) == text


def test_horn_without_names():
    cnf = hk.horn_cnf(3, [({0, 1}, 2), (set(), 0)])
    text = serialize_horn(cnf)
    assert "names" not in text
    assert "-> 1" in text.splitlines()[-1] or "-> 1" in text  # empty body line
    assert parse_horn(text) == cnf


def test_horn_comments_and_blanks():
    text = """
    # a comment
    horn 3 2   # trailing comment

    1 2 -> 3
    -> 1
    """
    cnf = parse_horn(text)
    assert len(cnf.clauses) == 2
    assert cnf.clauses[1].body == frozenset()


@pytest.mark.parametrize(
    "bad",
    [
        "",  # no header
        "horn 3",  # short header
        "hg 3 1\n1 2",  # wrong magic
        "horn 3 1\n1 -> 2 -> 3",  # two arrows
        "horn 3 1\n1 -> 2 3",  # two heads
        "horn 3 1\n1 ->",  # no head
        "horn 3 1\n1 2 -> 2",  # head in body
        "horn 3 1\n1 -> 4",  # head out of range
        "horn 3 1\n0 -> 1",  # ids are 1-based
        "horn 3 2\n1 -> 2",  # count mismatch
        "horn 3 1\nnames a b\n1 -> 2",  # wrong name count
        "horn 3 1\nx -> 2",  # not an integer
    ],
)
def test_horn_rejects_malformed(bad):
    with pytest.raises(InputError):
        parse_horn(bad)


def test_horn_errors_carry_line_numbers():
    with pytest.raises(InputError, match="line 3"):
        parse_horn("horn 3 2\n1 -> 2\n1 -> 9")


def test_hypergraph_round_trip(chain_family, star_family):
    text = serialize_hypergraph(chain_family)
    assert text.splitlines()[0] == "hg 4 3"
    assert parse_hypergraph(text) == chain_family
    assert parse_hypergraph(serialize_hypergraph(star_family)) == star_family


def test_hypergraph_rejects_bad_input():
    with pytest.raises(InputError, match="line 3"):
        parse_hypergraph("hg 3 2\n1 2\n1 2 3")  # not an antichain
    with pytest.raises(InputError):
        parse_hypergraph("hg 3 2\n1 2\n1 2")  # duplicate edge
    with pytest.raises(InputError):
        parse_hypergraph("hg 3 1\n1 1")  # repeated vertex
    with pytest.raises(InputError):
        serialize_hypergraph(hk.sperner(3, [set()]))  # ∅ has no text form


def test_graph_round_trip():
    g = hk.graph(4, [(0, 1), (2, 3)], labels=("p", "q", "r", "s"))
    text = serialize_graph(g)
    assert text.splitlines()[0] == "hg 4 2"
    assert text.splitlines()[1] == "names p q r s"
    assert parse_graph(text) == g
    with pytest.raises(InputError):
        parse_graph("hg 3 1\n1 2 3")  # arity 3 is not a graph edge


def test_tss_round_trip(wheel_tss):
    text = serialize_tss(wheel_tss)
    lines = text.splitlines()
    assert lines[0] == "tss 5 7"
    assert lines[1] == "names a b c d e"
    assert lines[2].startswith("e ") and lines[-1] == "t 5 2"
    assert parse_tss(text) == wheel_tss


def test_tss_accepts_interleaved_lines():
    text = "tss 2 1\nt 1 1\ne 1 2\nt 2 1"
    tg = parse_tss(text)
    assert tg.thresholds == (1, 1)
    assert tg.graph.edges == ((0, 1),)


@pytest.mark.parametrize(
    "bad",
    [
        "tss 2 1\ne 1 1\nt 1 1\nt 2 1",  # self loop
        "tss 2 2\ne 1 2\ne 2 1\nt 1 1\nt 2 1",  # parallel edge
        "tss 2 1\ne 1 2\nt 1 1",  # missing threshold
        "tss 2 1\ne 1 2\nt 1 1\nt 1 1\nt 2 1",  # doubled threshold
        "tss 2 1\ne 1 2\nt 1 0\nt 2 1",  # threshold 0
        "tss 2 0\nq 1 2",  # unknown line kind
        "tss 2 2\ne 1 2\nt 1 1\nt 2 1",  # edge count mismatch
    ],
)
def test_tss_rejects_malformed(bad):
    with pytest.raises(InputError):
        parse_tss(bad)


def test_general_cnf_round_trip(sat_cnf):
    text = serialize_general_cnf(sat_cnf)
    assert text.splitlines()[0] == "cnf 4 3"
    assert text.splitlines()[1] == "1 2 -3"
    assert parse_general_cnf(text) == sat_cnf
    with pytest.raises(InputError):
        parse_general_cnf("cnf 2 1\n1 3")
    with pytest.raises(InputError):
        parse_general_cnf("cnf 2 1\n1 0")
    with pytest.raises(InputError):
        serialize_general_cnf(hk.GeneralCNF(2, ((),)))


def test_roles_round_trip(intro_cnf):
    tg, roles = hk.horn_to_tss(intro_cnf)
    text = serialize_roles(roles)
    assert text.splitlines()[0] == f"roles {roles.n_original} {roles.n_total}"
    back = parse_roles(text)
    assert back == roles
    # lifting through the parsed copy behaves identically
    full = frozenset(range(tg.n))
    assert hk.lift_target_set_to_key(intro_cnf, back, full, tg=tg) == hk.lift_target_set_to_key(
        intro_cnf, roles, full, tg=tg
    )


def test_roles_rejects_malformed():
    with pytest.raises(InputError):
        parse_roles("roles 2 4\n3 1 q 1\n4 1 p 1")  # unknown role
    with pytest.raises(InputError):
        parse_roles("roles 2 4\n3 1 p 1")  # missing vertex 4
    with pytest.raises(InputError):
        parse_roles("roles 2 4\n3 1 p 1\n3 1 p 1\n4 1 p 1")  # duplicate


def test_random_round_trips():
    rng = random.Random(61)
    for _ in range(60):
        seed = rng.randrange(2**32)
        cnf = random_horn_cnf(seed, rng.randint(1, 9), rng.randint(0, 10))
        assert parse_horn(serialize_horn(cnf)) == cnf
        h = random_sperner(seed, rng.randint(1, 9), rng.randint(1, 5))
        if all(h.edges):
            assert parse_hypergraph(serialize_hypergraph(h)) == h
        tg = random_threshold_graph(seed, rng.randint(1, 8), rng.random(), tmax=3)
        assert parse_tss(serialize_tss(tg)) == tg


def test_labels_must_be_writable():
    cnf = hk.horn_cnf(2, [({0}, 1)], labels=("a b", "c"))  # space inside a label
    with pytest.raises(InputError):
        serialize_horn(cnf)
