import pytest

import domlab


def test_graph6_round_trip():
    g = domlab.parse_graph6("A_")
    assert g.order == 2
    assert g.edges() == [(0, 1)]
    assert domlab.emit_graph6(domlab.cycle_graph(5)) == "Dhc"
    assert domlab.parse_graph6("Dhc") == domlab.cycle_graph(5)


def test_parse_error_carries_type():
    with pytest.raises(domlab.ParseError):
        domlab.parse_graph6("B")
    assert issubclass(domlab.ParseError, domlab.DomlabError)


def test_point_values():
    c5 = domlab.cycle_graph(5)
    assert domlab.domination_number(c5)[0] == 2
    value, witness = domlab.rainbow_number(c5)
    assert value == 3
    assert domlab.validate_rainbow(c5, witness)["valid"]
    value, witness = domlab.weak_roman_number(c5)
    assert value == 3
    assert sum(witness) == 3
    assert domlab.validate_weak_roman(c5, witness)["valid"]
    assert domlab.rainbow_number(domlab.empty_graph(3))[0] == 3


def test_validators_report_witnesses():
    c5 = domlab.cycle_graph(5)
    bad = domlab.validate_weak_roman(c5, [1, 0, 1, 0, 0])
    assert bad == {"valid": False, "witness": 1}
    assert domlab.validate_rainbow(c5, [[1], [1], [], [2], []])["valid"]
    assert domlab.apply_move([2, 0], 0, 1) == [1, 1]
    with pytest.raises(domlab.PreconditionError):
        domlab.apply_move([1, 1], 0, 1)


def test_solver_cap():
    with pytest.raises(domlab.CapExceeded):
        domlab.rainbow_number(domlab.Graph(25))


def test_extremal_catalog():
    two = domlab.generate_two_triangles_matching(2)
    report = domlab.is_extremal(two)
    assert report["extremal"] and report["gamma_r"] == 2 and report["gamma_r2"] == 4
    assert domlab.recognize_c2(two)["tag"] == "TwoTrianglesPlusTwoMatching"
    system = domlab.generate_triangle_system(3, [(0, 1), (1, 2)])
    c = domlab.recognize_c2(system)
    assert c["tag"] == "TriangleSystem" and c["k"] == 3 and c["added_edges"] == [(0, 1), (1, 2)]
    d = domlab.extract_decomposition(two, [1, 0, 0, 1, 0, 0])
    assert d["v_list"] == [0, 3]
    assert d["p_sets"] == [[1, 2], [4, 5]]
    assert d["valid"]
    assert domlab.recognize_c1(domlab.complete_graph(2))


def test_reduction():
    n, clauses = domlab.parse_dimacs("p cnf 2 2\n1 2 2 0\n-1 2 2 0\n")
    assert n == 2 and clauses == [[1, 2, 2], [-1, 2, 2]]
    graph, labels = domlab.build_reduction(n, clauses)
    assert graph.order == 12
    assert labels[:2] == ["x1", "~x1"] and labels[-2:] == ["a", "b"]
    report = domlab.verify_reduction(n, clauses)
    assert report["gamma_r2"] == 6 and report["gamma_r"] == 3 and report["pass"]


def test_hereditary():
    c5 = domlab.cycle_graph(5)
    verdict = domlab.in_gk(c5, 3)
    assert not verdict["member"] and verdict["witness"] == [0, 1, 2, 3, 4]
    assert domlab.in_gk(domlab.complete_graph(4), 2)["member"]
    assert domlab.in_gk(domlab.path_graph(3), 3)["member"]
    assert domlab.is_co_k3_c5_free(domlab.path_graph(3))
