from fractions import Fraction

import pytest

import illusion


def test_fig1_full_illusion():
    net, labels = illusion.fig1()
    assert net.node_count == 9
    report = illusion.illusion_report(net, labels)
    assert report["global_winner"] == "b"
    assert report["illuded_count"] == 9
    assert illusion.is_q_illusion(net, labels, 1)
    assert illusion.is_q_illusion(net, labels, Fraction(2, 3))


def test_search_methods_find_witnesses():
    net, _ = illusion.fig1()
    for lab in (illusion.solve_one_illusion(net), illusion.solve_q_illusion(net, "1", "cnf")):
        assert lab is not None
        assert illusion.is_q_illusion(net, lab, 1)


def test_fig10_has_plurality_but_no_majority_illusion():
    net, colours = illusion.fig10()
    assert illusion.solve_one_illusion(net) is None
    assert illusion.plurality_report(net, colours, 3)["illuded_count"] == 13


def test_five_node_elimination_needs_two_edits():
    net = illusion.Network(5, [(0, 1), (0, 2), (3, 4)])
    labels = ["b", "r", "r", "b", "b"]
    q = Fraction(1, 5)
    assert illusion.is_q_illusion(net, labels, q)
    assert illusion.eliminate(net, labels, q, 1, "add") is None
    added, removed = illusion.eliminate(net, labels, q, 2, "add")
    assert len(added) == 2 and removed == []
    assert illusion.eliminate(net, labels, q, 2, "remove") == ([], [(0, 1), (0, 2)])


def test_thresholds_and_sat():
    assert illusion.threshold_h_sharp(1, 2, Fraction(2, 3)) == 8
    assert illusion.sat(2, [[1, 2], [-1, -2], [1, -2], [-1, 2]]) is None
    model = illusion.sat(3, [[1, 2, 3], [-1, -2, -3]])
    assert model is not None and len(model) == 3


def test_reductions():
    rec = illusion.verify_reduction(2, [[1, 2, -1]], 1)
    assert rec["verdict"] == "pass"
    rec = illusion.verify_reduction(2, [[1, 2], [-1, -2], [1, -2], [-1, 2]], 2, Fraction(1, 3))
    assert rec["verdict"] == "not-refuted"
    enc = illusion.encode_elimination(1, [[1], [1], [-1, -1]], "addition", Fraction(1, 3))
    assert enc["variant"] == "addition" and enc["pumps"]


def test_errors_raise_illusion_error():
    with pytest.raises(illusion.IllusionError, match="domain"):
        illusion.illusion_report(illusion.Network(2, [(0, 1)]), ["b", "x"])
    with pytest.raises(ValueError):
        illusion.Network(2, [(0, 0)])
