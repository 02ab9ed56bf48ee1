import json

import pytest

import smallcover as sc


def test_gf2():
    assert sc.rank([1, 2, 3], 2) == 2
    assert sc.circuits([1, 2, 3], 2) == [[0, 1, 2]]


def test_generators_and_faces():
    p = sc.dual_cyclic(4, 15)
    assert p.dim == 4
    assert p.facet_count == 15
    assert len(p.vertices) == 90
    assert sc.f_vector(p) == [90, 180, 105, 15]
    assert sc.validate(p) == []
    assert sc.is_face(p, [0, 1])
    adjacency = sc.facet_adjacency(p)
    assert all(adjacency[i][j] for i in range(15) for j in range(15) if i != j)

    square = sc.product(sc.segment(), sc.segment())
    assert square.labels == ["F0", "F1", "F0'", "F1'"]
    assert sc.f_vector(square) == [4, 4]


def test_truncation():
    p = sc.dual_cyclic(3, 6)
    q, new_facet = sc.truncate_face(p, list(p.vertices[0]))
    assert new_facet == 6
    assert q.facet_count == 7
    assert len(q.vertices) == len(p.vertices) + 2
    with pytest.raises(sc.InvariantError):
        sc.truncate_face(p, [0, 99])


def test_bad_faces_of_fixed_decoration():
    p = sc.dual_cyclic(4, 15)
    m = sc.preset("paper-example", p)
    assert m.vectors[:4] == [1, 3, 4, 8]
    bad = sc.bad_faces(p, m)
    sizes = [b.circuit_size for b in bad]
    assert sizes == sorted(sizes)
    assert sizes.count(4) == 17
    assert all(b.face == sorted(b.face) for b in bad)
    assert not sc.is_nonsingular_at(p, m, bad[-1].witness_vertex)


def test_resolve_and_chromatic():
    p = sc.dual_cyclic(4, 8)
    m = sc.preset("odd-bijection", p)
    assert sc.oriented_valid(m)
    report = sc.resolve(p, m)
    assert report.terminated == "success"
    assert len(report.steps) == report.initial_bad_count == 8
    final = report.final_polytope
    assert sc.bad_faces(final, report.final_map) == []
    colors, proper, used = sc.induced_coloring(final, report.final_map)
    assert proper and used == 8 and len(colors) == final.facet_count
    cert = sc.chromatic_number(final, report.final_map)
    assert (cert.chi, cert.status) == (8, "exact")
    assert all(d % 2 != 0 for d in sc.lift_determinants(final, report.final_map))


def test_json_round_trip():
    p = sc.dual_cyclic(2, 5)
    text = p.to_json()
    assert text.endswith("\n")
    assert sc.Polytope.from_json(text) == p
    m = sc.CharMap(2, [1, 2, 1, 2, 3], "general")
    assert sc.CharMap.from_json(m.to_json()) == m
    assert json.loads(m.to_json()) == {"n": 2, "mode": "general", "vectors": [1, 2, 1, 2, 3]}


def test_errors():
    with pytest.raises(sc.InvariantError):
        sc.CharMap(2, [1, 0, 3], "general")
    with pytest.raises(sc.ParseError):
        sc.Polytope.from_json("{")
    with pytest.raises(sc.SchemaError):
        sc.Polytope.from_json('{"dim": 2}')
    assert issubclass(sc.SchemaError, sc.Error)


def test_reproduce_summary():
    summary = json.loads(sc.reproduce("main2"))
    assert summary["passed"] is True
    assert summary["chromatic"]["chi"] == 8
    with pytest.raises(ValueError):
        sc.reproduce("nope")
