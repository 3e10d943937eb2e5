import pytest

from stringcones.diagram import (
    OrientedDiagram,
    build_diagram,
    build_symp_diagram,
    chamber_structure,
    orient,
)
from stringcones.paths import (
    all_symp_paths,
    canonical_paths,
    enclosed_region,
    enumerate_paths,
    enumerate_paths_naive,
    extension,
    extension_by_search,
    is_new,
    is_symmetric,
    mirror,
    satisfies_maximality,
    symp_paths,
)
from stringcones.weyl import LieType, ReducedWord, contract, enumerate_reduced_words

W = ReducedWord.parse


def test_path_counts_worked_examples():
    d = build_diagram(W("A3", "1,2,1,3,2,1"))
    assert [len(enumerate_paths(orient(d, k))) for k in (1, 2, 3)] == [3, 2, 1]
    d2 = build_diagram(W("A3", "1,3,2,1,3,2"))
    assert [len(enumerate_paths(orient(d2, k))) for k in (1, 2, 3)] == [3, 1, 3]


def test_five_symplectic_paths():
    sd = build_symp_diagram(W("C2", "2,1,2,1"))
    got = sorted(p.wires_by_name() for p in symp_paths(sd, 2))
    assert got == sorted(
        [
            ("2", "2b"),
            ("2", "1b", "1", "2b"),
            ("2", "1b", "2b"),
            ("2", "1", "2b"),
            ("2", "1", "1b", "2b"),
        ]
    )
    assert [p.wires_by_name() for p in symp_paths(sd, 1)] == [("1", "2")]


def test_enumeration_is_deterministic():
    d = build_diagram(W("A3", "1,3,2,1,3,2"))
    assert enumerate_paths(orient(d, 3)) == enumerate_paths(orient(d, 3))
    assert [p.node_expression for p in enumerate_paths(orient(d, 3))] == sorted(
        p.node_expression for p in enumerate_paths(orient(d, 3))
    )


def test_naive_oracle_agreement_small():
    for text in ("1,2,1,3,2,1", "1,3,2,1,3,2", "2,1,3,2,1,3"):
        d = build_diagram(W("A3", text))
        for k in (1, 2, 3):
            od = orient(d, k)
            assert enumerate_paths(od) == enumerate_paths_naive(od)
    sd = build_symp_diagram(W("C2", "1,2,1,2"))
    for u in (1, 2, 3):
        od = OrientedDiagram(sd, u)
        assert enumerate_paths(od) == enumerate_paths_naive(od)


def test_peaks_and_expressions():
    sd = build_symp_diagram(W("C2", "2,1,2,1"))
    paths = {q.wires_by_name(): q for q in symp_paths(sd, 2)}
    assert len(paths[("2", "2b")].peaks) == 1
    assert len(paths[("2", "1b", "1", "2b")].peaks) == 2  # descends to the wall and back
    for p in paths.values():
        assert p.node_expression == tuple(j for j, s in p.events if s)


def test_mirror_examples_and_properties():
    sd = build_symp_diagram(W("C2", "2,1,2,1"))
    p4 = next(p for p in symp_paths(sd, 2) if p.wires_by_name() == ("2", "1", "2b"))
    assert mirror(p4).wires_by_name() == ("2", "1b", "2b")
    assert mirror(mirror(p4)) == p4
    sd3 = build_symp_diagram(W("C3", "1,3,2,1,3,2,1,3,2"))
    P = next(p for p in symp_paths(sd3, 3) if p.wires_by_name() == ("3", "1b", "2", "3b"))
    assert mirror(P).wires_by_name() == ("3", "2b", "1", "3b")


def test_mirror_is_a_bijection_between_orientations():
    sd = build_symp_diagram(W("C3", "1,2,3,1,2,3,1,2,3"))
    for k in (1, 2, 3):
        paths = symp_paths(sd, k)
        target = set(enumerate_paths(OrientedDiagram(sd, 2 * 3 - k)))
        images = {mirror(p) for p in paths}
        assert images <= target and len(images) == len(paths)
        if 2 * 3 - k == k:
            assert images == set(paths)


def test_symmetry_detection():
    sd = build_symp_diagram(W("C2", "2,1,2,1"))
    flags = {p.wires_by_name(): is_symmetric(p) for p in symp_paths(sd, 2)}
    assert flags[("2", "2b")] and flags[("2", "1b", "1", "2b")] and flags[("2", "1", "1b", "2b")]
    assert not flags[("2", "1", "2b")] and not flags[("2", "1b", "2b")]
    with pytest.raises(ValueError):
        is_symmetric(symp_paths(sd, 1)[0])


def test_enclosed_region_examples():
    d2 = build_diagram(W("A3", "1,3,2,1,3,2"))
    p = next(q for q in enumerate_paths(orient(d2, 3)) if q.wire_seq == (3, 1, 4))
    assert sorted(enclosed_region(p)) == [3, 4]
    d = build_diagram(W("A3", "1,2,1,3,2,1"))
    low = enumerate_paths(orient(d, 3))[0]
    assert sorted(enclosed_region(low)) == [6]


def test_functional_is_chamber_sum():
    from stringcones.cones import functional_A

    for text in ("1,2,1,3,2,1", "1,3,2,1,3,2", "2,1,3,2,1,3"):
        d = build_diagram(W("A3", text))
        ch = chamber_structure(d)
        for k in (1, 2, 3):
            for p in enumerate_paths(orient(d, k)):
                total = [0] * d.length
                for j in enclosed_region(p):
                    total = [a + b for a, b in zip(total, ch.u_form(j))]
                assert tuple(total) == functional_A(p).coeffs


def test_extension_worked_examples():
    sd4 = build_symp_diagram(W("C3", "2,1,3,2,1,3,2,1,3"))
    P2 = next(p for p in symp_paths(sd4, 2) if p.wires_by_name() == ("2", "1b", "3"))
    assert extension(P2).wires_by_name() == ("2", "1b", "1", "2b", "3")
    sd3 = build_symp_diagram(W("C3", "1,3,2,1,3,2,1,3,2"))
    P = next(p for p in symp_paths(sd3, 3) if p.wires_by_name() == ("3", "1b", "2", "3b"))
    pex = extension(P)
    assert is_symmetric(pex)
    assert enclosed_region(pex) == enclosed_region(P) | enclosed_region(mirror(P))


def test_extension_invariants_all_rank3_words():
    for w in enumerate_reduced_words(LieType("C", 3)):
        sd = build_symp_diagram(w)
        for p in all_symp_paths(sd):
            e = extension(p)
            assert extension(e) == e
            r, re_ = enclosed_region(p), enclosed_region(e)
            union = r | enclosed_region(mirror(p))
            assert r <= re_ <= union
            if p.k == 3:
                assert is_symmetric(e)
            assert satisfies_maximality(e)


def test_extension_search_oracle():
    for text in ("2,1,2,1", "1,2,1,2"):
        sd = build_symp_diagram(W("C2", text))
        for p in all_symp_paths(sd):
            assert extension_by_search(p) == extension(p)
    for text in ("3,2,3,2,1,2,3,2,1", "1,3,2,1,3,2,1,3,2", "2,1,3,2,1,3,2,1,3"):
        sd = build_symp_diagram(W("C3", text))
        for p in all_symp_paths(sd):
            assert extension_by_search(p) == extension(p)


def test_canonical_paths_table():
    sd = build_symp_diagram(W("C3", "3,2,1,3,2,3,2,1,2"))
    names = [p.wires_by_name() for p in canonical_paths(sd)]
    assert ("3", "2", "1b", "1", "2b", "3b") in names
    assert ("1", "3", "2") in names
    assert len(names) == 5


def test_canonical_paths_all_words():
    for w in enumerate_reduced_words(LieType("C", 3)):
        sd = build_symp_diagram(w)
        cps = canonical_paths(sd)
        assert len(cps) == 5
        assert len(set(cps)) == 5
        assert all(is_new(p, w) for p in cps)


def test_is_new():
    w = W("C3", "3,2,1,3,2,3,2,1,2")
    sd = build_symp_diagram(w)
    inner = next(
        p
        for p in all_symp_paths(sd)
        if "1" not in p.wires_by_name() and "1b" not in p.wires_by_name()
    )
    assert not is_new(inner, w)
    with pytest.raises(ValueError):
        is_new(all_symp_paths(build_symp_diagram(W("C2", "2,1,2,1")))[0], W("C2", "2,1,2,1"))


def test_path_count_monotone_under_contraction():
    for w in enumerate_reduced_words(LieType("C", 3)):
        big = len(all_symp_paths(build_symp_diagram(w)))
        small = len(all_symp_paths(build_symp_diagram(contract(w))))
        assert big >= small + 5
