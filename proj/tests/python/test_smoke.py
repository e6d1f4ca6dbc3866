import itertools

import pytest

import dmwc


def two_cycle(budget=2):
    # 0 -> 2 -> 1 -> 3 -> 0 with terminals 0 and 1
    g = dmwc.Digraph(4, [(0, 2), (2, 1), (1, 3), (3, 0)], [0, 1])
    return dmwc.Instance(g, [0, 1], budget)


def test_two_cycle_solution():
    sol = dmwc.solve(two_cycle())
    assert sol is not None
    assert sol.vertices == [2, 3]
    assert all(c.separated for c in sol.certificate)
    assert dmwc.verify_solution(two_cycle(), sol.vertices)
    assert dmwc.solve(two_cycle(1)) is None


def test_modes_agree_on_feasibility():
    for seed in range(15):
        inst = dmwc.generate(seed=seed, n=8, density=0.3, terminals=2, budget=2)
        det = dmwc.solve(inst)
        rnd = dmwc.solve(inst, mode="randomized", seed=seed, threads=2)
        oracle = dmwc.brute_force_mwc(inst)
        assert (det is None) == (oracle is None)
        if rnd is not None:
            assert det is not None
            assert dmwc.verify_solution(inst, rnd.vertices)


def test_solve_with_stats_and_minimum_budget():
    sol, stats = dmwc.solve_with_stats(two_cycle())
    assert sol.vertices == [2, 3]
    assert stats.outer_candidates >= 1
    k, best = dmwc.minimum_budget(two_cycle(3))
    assert k == 2 and best.vertices == [2, 3]


def test_bad_arguments():
    with pytest.raises(ValueError):
        dmwc.solve(two_cycle(), mode="fast")
    with pytest.raises(ValueError):
        dmwc.solve(two_cycle(), threads=0)
    with pytest.raises(ValueError):
        dmwc.Instance(dmwc.Digraph(2, [(0, 5)]), [0, 1], 1)


def test_important_separators_and_collection():
    inst = dmwc.fixture("remark2:r=3,k=2", 2)
    coll = dmwc.important_collection(inst)
    assert len(coll) == 6
    for sep, witnesses in coll:
        assert witnesses
        for w in witnesses:
            assert dmwc.is_important(inst.graph, [w], inst.terminals, sep)
    g = inst.graph
    seps = dmwc.important_separators(g, [8], [0, 1], 2)
    assert [2, 3] in seps


def test_shadow_and_sampling():
    inst = dmwc.fixture("remark2:r=3,k=2", 2)
    rep = dmwc.shadow(inst.graph, inst.terminals, [2])
    assert rep["reverse"] == [5]
    assert dmwc.is_thin(inst.graph, inst.terminals, [2])
    z = dmwc.random_set(inst, 7)
    assert z == dmwc.random_set(inst, 7)
    assert not set(z) & set(inst.terminals)
    cands = dmwc.deterministic_sets(inst)
    assert len(cands) == len({tuple(c) for c in cands})


def test_torso_of_chain():
    g = dmwc.Digraph(4, [(0, 1), (1, 2), (2, 3)])
    t, to_original = dmwc.torso(g, [0, 3])
    assert to_original == [0, 3]
    assert t.edges == [(0, 1)]


def test_edge_and_multicut():
    inst = two_cycle()
    sol = dmwc.solve_edge(inst)
    assert sol is not None and len(sol.edges) <= 2
    assert dmwc.verify_edge_solution(inst, sol.edges)
    g = dmwc.Digraph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    cut = dmwc.solve_multicut_k2(g, [(0, 1), (1, 0)], 1)
    assert cut is not None
    assert dmwc.verify_multicut(g, [(0, 1), (1, 0)], 1, cut.vertices)


def test_text_round_trip():
    inst = dmwc.generate(seed=3, n=7, density=0.4, inf_fraction=0.2)
    text = dmwc.serialize(inst)
    parsed = dmwc.parse_instance(text)
    assert parsed["kind"] == "vertex"
    assert dmwc.serialize(parsed["instance"]) == text
    g = dmwc.Digraph(3, [(0, 1), (1, 2)])
    mc = dmwc.serialize_multicut(g, [(0, 2), (2, 0)], 1)
    assert dmwc.parse_instance(mc)["pairs"] == [(0, 2), (2, 0)]


def test_parse_error_position():
    with pytest.raises(dmwc.ParseError, match=r"^3:5:"):
        dmwc.parse_instance("dmwc vertex\nn 3\ne 0 5\n")


def test_sets_accept_any_iterable():
    g = dmwc.Digraph(3, [(0, 1), (1, 2)], {2, 0})
    assert g.infinite == [0, 2]
    for perm in itertools.permutations([0, 2]):
        assert dmwc.Instance(g, list(perm), 1).terminals == [0, 2]
