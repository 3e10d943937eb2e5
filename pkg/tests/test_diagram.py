import itertools

import pytest

from stringcones.diagram import (
    build_diagram,
    build_symp_diagram,
    chamber_structure,
    diagram_json,
    orient,
)
from stringcones.weyl import LieType, ReducedWord, enumerate_reduced_words, lift


def w(text, family="A", rank=None):
    letters = tuple(int(x) for x in text.split(","))
    return ReducedWord(LieType(family, rank or max(letters)), letters)


def test_worked_diagram():
    d = build_diagram(w("1,2,1,3,2,1"))
    assert tuple(nd.column for nd in d.nodes) == (1, 2, 1, 3, 2, 1)
    assert d.node(1).wires == (1, 2)
    assert d.arrangements[0] == (1, 2, 3, 4)
    assert d.arrangements[-1] == (4, 3, 2, 1)


def test_second_worked_diagram():
    d = build_diagram(w("1,3,2,1,3,2"))
    assert d.node(2).wires == (3, 4)
    assert d.node(2).column == 3


def test_every_pair_crosses_once():
    for rank in (2, 3):
        for word in enumerate_reduced_words(LieType("A", rank)):
            d = build_diagram(word)
            pairs = [nd.wires for nd in d.nodes]
            assert sorted(pairs) == sorted(
                itertools.combinations(range(1, d.m + 1), 2)
            )
    for word in enumerate_reduced_words(LieType("C", 3)):
        d = build_symp_diagram(word).base
        assert len({nd.wires for nd in d.nodes}) == d.length


@pytest.mark.slow
def test_rank4_crossing_sample():
    from stringcones.weyl import gt_adapted_word

    d = build_symp_diagram(gt_adapted_word(4)).base
    assert sorted(nd.wires for nd in d.nodes) == sorted(
        itertools.combinations(range(1, 9), 2)
    )


def test_chamber_structure_worked_example():
    d = build_diagram(w("1,3,2,1,3,2"))
    ch = chamber_structure(d)
    assert ch.u_form(3) == (0, 0, 1, -1, -1, 1)
    assert ch.u_form(4) == (0, 0, 0, 1, 0, -1)
    assert ch.det in (1, -1)


def test_chamber_matrix_unimodular_everywhere():
    for word in enumerate_reduced_words(LieType("A", 3)):
        ch = chamber_structure(build_diagram(word))
        assert ch.det in (1, -1)
        for j in range(1, 7):
            assert ch.u_form(j)[j - 1] == 1


def test_symp_diagram_matches_lift():
    for text in ("2,1,2,1", "1,2,1,2"):
        word = w(text, "C", 2)
        sd = build_symp_diagram(word)
        d = build_diagram(lift(word))
        assert [nd.column for nd in sd.base.nodes] == [nd.column for nd in d.nodes]
        assert [nd.wires for nd in sd.base.nodes] == [nd.wires for nd in d.nodes]


def test_symp_labels_and_wall():
    sd = build_symp_diagram(w("1,2,3,1,2,3,1,2,3", "C", 3))
    assert sorted(sd.label_str(a) for a in sd.wall_nodes) == ["t3", "t6", "t9"]
    sd2 = build_symp_diagram(w("2,1,2,1", "C", 2))
    assert [sd2.label_str(a) for a in range(1, 7)] == [
        "t1",
        "tbar2",
        "t2",
        "t3",
        "tbar4",
        "t4",
    ]
    assert sorted(sd2.wall_nodes) == [1, 4]


def test_mirror_node_is_an_involution_fixing_the_wall():
    sd = build_symp_diagram(w("1,3,2,1,3,2,1,3,2", "C", 3))
    for a in range(1, sd.base.length + 1):
        assert sd.mirror_node(sd.mirror_node(a)) == a
        if sd.on_wall(a):
            assert sd.mirror_node(a) == a
        else:
            kind, j = sd.label(a)
            assert sd.label(sd.mirror_node(a)) == ("t" if kind == "tbar" else "tbar", j)


def test_wire_names():
    sd = build_symp_diagram(w("2,1,2,1", "C", 2))
    assert [sd.wire_name(i) for i in (1, 2, 3, 4)] == ["1", "2", "2b", "1b"]
    assert sd.wire_from_name("1b") == 4
    with pytest.raises(ValueError):
        sd.wire_from_name("3")


def test_orientations():
    d = build_diagram(w("1,2,1,3,2,1"))
    od = orient(d, 1)
    assert od.is_up(1) and not od.is_up(2)
    assert all(orient(d, 3).is_up(x) for x in (1, 2, 3)) and not orient(d, 3).is_up(4)
    with pytest.raises(ValueError):
        orient(d, 4)
    sd = build_symp_diagram(w("2,1,2,1", "C", 2))
    od2 = orient(sd, 2)
    assert [od2.is_up(x) for x in (1, 2, 3, 4)] == [True, True, False, False]
    odb = orient(sd, 2, barred=True)
    assert odb.up_count == 3 and odb.k_display == "2b"
    with pytest.raises(ValueError):
        orient(sd, 3)


def test_diagram_json():
    sd = build_symp_diagram(w("2,1,2,1", "C", 2))
    data = diagram_json(sd)
    assert data["wire_count"] == 4
    assert data["wall_nodes"] == [1, 4]
    assert data["nodes"][0]["label"] == "t1"
    assert len(data["chambers"]) == 6
    d = build_diagram(w("1,3,2,1,3,2"))
    data2 = diagram_json(d)
    assert data2["chambers"][2]["plus"] == [3, 6]
    assert data2["chambers"][2]["minus"] == [4, 5]
