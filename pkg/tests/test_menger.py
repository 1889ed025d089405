"""SMEC verification: predicate, campaigns, tightness, partitions."""

import pytest
from hypothesis import given, settings, strategies as st

from hlmenger import (
    BudgetExceeded,
    FaultCampaign,
    FaultSet,
    adversarial_fault_sets,
    build_graph,
    check_component_lemma,
    check_tightness,
    is_smec,
    largest_component_size,
    max_edge_disjoint_paths,
    partition_faults,
    remove_edges,
    run_campaign,
    tightness_conditional,
    tightness_unconditional,
)
from hlmenger.menger import adversarial_fault_indices
from hlmenger.linegraph import line_graph_of_hl

from util import cut_disconnects, lgraph, naive_is_smec, network, random_graph


class TestIsSmec:
    def test_line_graph_q3_holds(self):
        assert is_smec(lgraph("hypercube", 3).graph).holds

    def test_k4_holds(self):
        k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert is_smec(k4).holds

    def test_figure3_fault_set_fails(self):
        L = lgraph("hypercube", 3)
        tw = tightness_unconditional(L)
        faulty = remove_edges(L.graph, tw.fault_set)
        verdict = is_smec(faulty)
        assert not verdict.holds
        w = verdict.witness
        assert w.path_count < w.required == 4
        assert len(w.cut) == w.path_count
        assert cut_disconnects(faulty, w.u, w.v, w.cut)

    def test_disconnected_with_two_live_sides_fails(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        verdict = is_smec(g)
        assert not verdict.holds
        assert verdict.witness.path_count == 0

    def test_isolated_vertices_are_vacuous(self):
        g = build_graph(3, [(1, 2)])
        assert is_smec(g).holds

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=2**63))
    def test_matches_naive_pairwise_check(self, seed):
        g = random_graph(seed)
        expected_holds, first_pair = naive_is_smec(g)
        verdict = is_smec(g)
        assert verdict.holds == expected_holds
        if not verdict.holds:
            assert (verdict.witness.u, verdict.witness.v) == first_pair
            assert cut_disconnects(g, verdict.witness.u, verdict.witness.v,
                                   verdict.witness.cut)


class TestRunCampaign:
    def test_exhaustive_m2_on_line_q3(self):
        report = run_campaign(lgraph("hypercube", 3),
                              FaultCampaign(mode="exhaustive", m=2))
        assert report.counts == {
            "visited": 301, "skipped_conditional": 0, "failures": 0}
        assert report.witness is None

    def test_m0_equals_is_smec(self):
        report = run_campaign(lgraph("crossed", 3),
                              FaultCampaign(mode="exhaustive", m=0))
        assert report.counts["visited"] == 1
        assert report.passed == is_smec(lgraph("crossed", 3).graph).holds

    def test_adversarial_m3_finds_the_sharp_counterexample(self):
        # one past the 2n-4 bound: the near-isolating splits must fail
        L = lgraph("hypercube", 3)
        report = run_campaign(
            L, FaultCampaign(mode="sampled", m=3, samples=0, seed=0,
                             adversarial=True))
        assert report.counts["failures"] > 0
        w = report.witness
        faulty = remove_edges(L.graph, [tuple(e) for e in w["fault_edges"]])
        assert w["path_count"] < w["required"]
        assert cut_disconnects(faulty, *w["pair"], w["cut"])

    def test_conditional_skips_inadmissible_sets(self):
        # L(Q_2) = C_4 is 2-regular: every non-empty fault set drops some
        # endpoint below degree 2
        L = lgraph("hypercube", 2)
        report = run_campaign(
            L, FaultCampaign(mode="exhaustive", m=2, conditional=True))
        assert report.counts["visited"] == 1
        assert report.counts["skipped_conditional"] == 4 + 6
        for k in range(1, 3):
            from itertools import combinations
            for combo in combinations(L.graph.edges, k):
                assert remove_edges(L.graph, combo).min_degree() <= 1

    def test_conditional_visited_sets_are_admissible(self):
        L = lgraph("crossed", 3)
        report = run_campaign(
            L, FaultCampaign(mode="exhaustive", m=2, conditional=True))
        total = sum(
            1 for k in range(3)
            for _ in __import__("itertools").combinations(range(24), k))
        assert report.counts["visited"] + report.counts["skipped_conditional"] == total
        assert report.counts["failures"] == 0

    def test_conditional_bound_needs_dimension_4(self):
        # three conditional faults can break SMEC at n=3; the conditional
        # fault-tolerance bound only kicks in from dimension 4
        L = lgraph("crossed", 3)
        report = run_campaign(
            L, FaultCampaign(mode="exhaustive", m=3, conditional=True))
        assert report.counts["failures"] > 0
        w = report.witness
        faulty = remove_edges(L.graph, [tuple(e) for e in w["fault_edges"]])
        assert faulty.min_degree() >= 2
        assert not is_smec(faulty).holds
        assert cut_disconnects(faulty, *w["pair"], w["cut"])

    def test_sampled_reports_are_seed_deterministic(self):
        L = lgraph("crossed", 4)
        c = FaultCampaign(mode="sampled", m=6, conditional=True,
                          samples=150, seed=99)
        a = run_campaign(L, c)
        b = run_campaign(L, c)
        assert a.canonical_json() == b.canonical_json()
        different = run_campaign(
            L, FaultCampaign(mode="sampled", m=6, conditional=True,
                             samples=150, seed=100))
        assert different.parameters["seed"] != a.parameters["seed"]

    def test_jobs_do_not_change_the_report(self):
        L = lgraph("ltq", 3)
        c = FaultCampaign(mode="exhaustive", m=2)
        solo = run_campaign(L, c, jobs=1)
        parallel = run_campaign(L, c, jobs=2)
        assert solo.canonical_json() == parallel.canonical_json()

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            run_campaign(lgraph("hypercube", 3),
                         FaultCampaign(mode="exhaustive", m=6, budget=1000))

    def test_m_larger_than_edge_count_rejected(self):
        with pytest.raises(ValueError, match="exceeds"):
            run_campaign(lgraph("hypercube", 2),
                         FaultCampaign(mode="exhaustive", m=10))

    def test_conditional_impossible_rejected(self):
        path = build_graph(3, [(0, 1), (1, 2)])
        L = line_graph_of_hl(network("hypercube", 2))
        L = type(L)(graph=path, base=path, vertex_of_edge={}, edge_of_vertex=(),
                    f_vertices=None, base_dimension=None)
        with pytest.raises(ValueError, match="min-degree-2"):
            run_campaign(L, FaultCampaign(mode="sampled", m=1, samples=5,
                                          conditional=True, seed=0))


class TestSmecUnderFaultsDifferential:
    def _naive_first_violation(self, faulty):
        for u in range(faulty.n_vertices):
            du = faulty.degree(u)
            if du == 0:
                continue
            for v in range(u + 1, faulty.n_vertices):
                req = min(du, faulty.degree(v))
                if req and max_edge_disjoint_paths(faulty, u, v).value < req:
                    return u, v
        return None

    @pytest.mark.parametrize("kind,n,m,trials", [
        ("hypercube", 3, 5, 120),
        ("crossed", 4, 8, 50),
    ])
    def test_tree_scan_matches_naive_on_faulted_line_graphs(self, kind, n, m,
                                                            trials):
        from hlmenger.flow import UnitFlowEngine
        from hlmenger._campaign_exec import smec_violation
        from hlmenger.rng import SplitMix64

        L = lgraph(kind, n)
        g = L.graph
        engine = UnitFlowEngine(g.n_vertices, g.edges)
        rng = SplitMix64(1000 + n)
        for _ in range(trials):
            idx = tuple(rng.sample_indices(len(g.edges), rng.randbelow(m + 1)))
            engine.set_fault_indices(idx)
            fast = smec_violation(engine)
            faulty = remove_edges(g, [g.edges[i] for i in idx])
            naive = self._naive_first_violation(faulty)
            if naive is None:
                assert fast is None, idx
            else:
                assert fast is not None and fast[:2] == naive, idx

    def test_conditional_classification_matches_recomputation(self):
        from itertools import combinations
        L = lgraph("crossed", 3)
        g = L.graph
        report = run_campaign(
            L, FaultCampaign(mode="exhaustive", m=3, conditional=True))
        admissible = sum(
            1 for k in range(4)
            for combo in combinations(g.edges, k)
            if remove_edges(g, combo).min_degree() >= 2)
        assert report.counts["visited"] == admissible
        total = sum(1 for k in range(4) for _ in combinations(range(24), k))
        assert report.counts["skipped_conditional"] == total - admissible


class TestDegenerateSizes:
    def test_campaign_on_single_vertex_line_graph(self):
        # L(K_2) has one vertex and no edges: nothing to check, holds
        from hlmenger import line_graph
        L = line_graph(build_graph(2, [(0, 1)]))
        report = run_campaign(L, FaultCampaign(mode="exhaustive", m=0))
        assert report.passed and report.counts["visited"] == 1
        assert is_smec(L.graph).holds

    def test_is_smec_on_edgeless_graph(self):
        assert is_smec(build_graph(3, [])).holds


class TestComponentLemma:
    def test_no_faults_single_check(self):
        report = check_component_lemma(
            lgraph("hypercube", 3), 0, 12, FaultCampaign(mode="exhaustive", m=0))
        assert report.counts["visited"] == 1
        assert report.passed

    def test_floor_violation_reported(self):
        # floor 12 forces a failure whenever four faults isolate a vertex
        L = lgraph("hypercube", 3)
        report = check_component_lemma(
            L, 4, 12, FaultCampaign(mode="exhaustive", m=4))
        assert report.counts["failures"] > 0
        w = report.witness
        faulty = remove_edges(L.graph, [tuple(e) for e in w["fault_edges"]])
        assert largest_component_size(faulty) == w["largest_component"] < 12

    def test_lemma32_bound_sampled_at_n4(self):
        # fault budget 4n-7 = 9, floor n*2^(n-1) - 1 = 31
        report = check_component_lemma(
            lgraph("crossed", 4), 9, 31,
            FaultCampaign(mode="sampled", m=9, samples=1500, seed=5,
                          adversarial=True))
        assert report.passed

    def test_lemma41_bound_sampled_at_n5(self):
        # fault budget 6n-13 = 17, floor n*2^(n-1) - 2 = 78
        report = check_component_lemma(
            lgraph("crossed", 5), 17, 78,
            FaultCampaign(mode="sampled", m=17, samples=400, seed=5,
                          adversarial=True))
        assert report.passed

    def test_floor_above_vertex_count_rejected(self):
        with pytest.raises(ValueError):
            check_component_lemma(lgraph("hypercube", 3), 1, 13,
                                  FaultCampaign(mode="exhaustive", m=1))


class TestAdversarialFaultSets:
    def test_budget_zero_is_empty_set_only(self):
        sets = adversarial_fault_sets(lgraph("hypercube", 3), 0)
        assert len(sets) == 1
        assert len(sets[0]) == 0

    def test_contains_near_isolating_splits(self):
        L = lgraph("hypercube", 3)
        found = {frozenset(s.edges) for s in adversarial_fault_sets(L, 3)}
        g = L.graph
        for u0 in range(g.n_vertices):
            for u in g.neighbors(u0):
                split = frozenset(
                    (min(u0, w), max(u0, w))
                    for w in g.neighbors(u0) if w != u)
                assert split in found

    def test_contains_conditional_tightness_set_at_budget_7(self):
        L = lgraph("crossed", 4)
        tw = tightness_conditional(L)
        found = {frozenset(s.edges) for s in adversarial_fault_sets(L, 7)}
        assert frozenset(tw.fault_set) in found

    def test_sets_respect_budget_and_host(self):
        L = lgraph("ltq", 3)
        for s in adversarial_fault_sets(L, 4):
            assert len(s) <= 4
            assert s.host is L.graph

    def test_budget_above_edges_rejected(self):
        with pytest.raises(ValueError):
            adversarial_fault_indices(lgraph("hypercube", 2), 5)


class TestTightnessUnconditional:
    @pytest.mark.parametrize("kind", ["hypercube", "crossed", "ltq"])
    @pytest.mark.parametrize("n", [3, 4])
    def test_construction_certifies_violation(self, kind, n):
        L = lgraph(kind, n)
        tw = tightness_unconditional(L)
        assert len(tw.fault_set) == 2 * n - 3
        report = check_tightness(L, conditional=False)
        assert report.counts["failures"] == 1
        w = report.witness
        assert w["path_count"] <= 2 * n - 3 < 2 * n - 2 == w["required"]
        faulty = remove_edges(L.graph, tw.fault_set)
        assert cut_disconnects(faulty, *w["pair"], w["cut"])

    def test_requires_dimension_3(self):
        with pytest.raises(ValueError, match=">= 3"):
            tightness_unconditional(lgraph("hypercube", 2))

    def test_all_witnesses_flag(self):
        L = lgraph("crossed", 3)
        report = check_tightness(L, conditional=False, all_witnesses=True)
        # every vertex outside u0's closed neighborhood certifies the failure
        assert report.counts["visited"] == 12 - 1 - 4
        assert report.counts["failures"] == report.counts["visited"]
        assert len(report.details) == report.counts["failures"]


class TestTightnessConditional:
    @pytest.mark.parametrize("kind", ["hypercube", "crossed", "mobius1"])
    def test_construction_at_n4(self, kind):
        L = lgraph(kind, 4)
        tw = tightness_conditional(L)
        assert len(tw.fault_set) == 4 * 4 - 9
        faulty = remove_edges(L.graph, tw.fault_set)
        assert faulty.min_degree() >= 2
        report = check_tightness(L, conditional=True)
        w = report.witness
        assert w["deg_u1_after"] == 2
        assert w["deg_u2_after"] == 3
        assert w["min_degree_after"] >= 2
        assert w["path_count"] <= 2 * 4 - 3 < 2 * 4 - 2 == w["required"]
        assert cut_disconnects(faulty, *w["pair"], w["cut"])

    def test_requires_dimension_4(self):
        with pytest.raises(ValueError, match=">= 4"):
            tightness_conditional(lgraph("crossed", 3))

    def test_all_witnesses_flag(self):
        report = check_tightness(lgraph("crossed", 4), conditional=True,
                                 all_witnesses=True)
        assert report.counts["visited"] >= 1
        assert report.counts["failures"] == report.counts["visited"]


class TestPartitionFaults:
    def test_all_edges_at_one_f_vertex_land_in_sf(self):
        L = lgraph("crossed", 4)
        fv = min(L.f_vertices)
        incident = [(min(fv, w), max(fv, w)) for w in L.graph.neighbors(fv)]
        p = partition_faults(L, incident)
        assert not p.s1 and not p.s2
        assert len(p.sf) == 2 * 4 - 2

    def test_half_internal_edge(self):
        L = lgraph("crossed", 4)
        from hlmenger.linegraph import vertex_side
        edge = next(
            e for e in L.graph.edges
            if vertex_side(L, e[0]) == 0 and vertex_side(L, e[1]) == 0)
        p = partition_faults(L, [edge])
        assert len(p.s1) == 1 and not p.s2 and not p.sf

    def test_partition_sums(self):
        L = lgraph("crossed", 4)
        fs = FaultSet.of(L.graph, L.graph.edges[7:18])
        p = partition_faults(L, fs)
        assert len(p.s1) + len(p.s2) + len(p.sf) == 11
        assert p.s1 | p.s2 | p.sf == fs.edges

    def test_requires_f_structure(self):
        from hlmenger import line_graph
        lg = line_graph(build_graph(3, [(0, 1), (1, 2)]))
        with pytest.raises(ValueError, match="f-vertices"):
            partition_faults(lg, [(0, 1)])

    def test_foreign_edges_rejected(self):
        L = lgraph("crossed", 4)
        with pytest.raises(ValueError, match="not in the line graph"):
            partition_faults(L, [(0, 31)] if not L.graph.has_edge(0, 31)
                             else [(0, 30)])
