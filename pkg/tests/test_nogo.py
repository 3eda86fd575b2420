"""Constraint systems, the ring distance certifier, and site invariance."""

import itertools
import random

import pytest

from graphlhv.graphs import (
    UnsupportedSizeError,
    ball,
    chain,
    complete_bipartite,
    grid,
    ring,
    star,
)
from graphlhv.lhv import all_assignments, product_verdict, run
from graphlhv.nogo import (
    CertainSubmeasurement,
    ContextVariable,
    Equation,
    ParityConstraintSystem,
    build_ring_instance,
    certify_distance,
    distance_bound,
    distance_constraint_system,
    embedded_grid_counterexample,
    find_certain_submeasurements,
    gf2_nullspace,
    gf2_solve,
    measurement_view,
    parity_equation,
    site_invariance_system,
    verify_all_submeasurements,
    y_stabilizer_supports,
)
from graphlhv.oracle import Verdict, classify
from graphlhv.pauli import Measurement, generator_product, is_submeasurement


# ---------------------------------------------------------------------------
# GF(2) machinery
# ---------------------------------------------------------------------------

def _check_witness(system, witness):
    for eq in system.equations:
        assert sum(witness[v] for v in eq.variables) % 2 == eq.rhs


def _check_certificate(system, certificate):
    counts = {}
    rhs = 0
    for i in certificate:
        eq = system.equations[i]
        rhs ^= eq.rhs
        for v in eq.variables:
            counts[v] = counts.get(v, 0) + 1
    assert all(c % 2 == 0 for c in counts.values())
    assert rhs == 1


def test_gf2_empty_system():
    sol = gf2_solve(ParityConstraintSystem((), ()))
    assert sol.consistent and sol.witness == {}


def test_gf2_simple_systems():
    eqs = (
        parity_equation(["a", "b"], 1),
        parity_equation(["b", "c"], 0),
        parity_equation(["a", "c"], 1),
    )
    system = ParityConstraintSystem(("a", "b", "c"), eqs)
    sol = gf2_solve(system)
    assert sol.consistent
    _check_witness(system, sol.witness)

    eqs_bad = eqs + (parity_equation(["a", "b"], 0),)
    system_bad = ParityConstraintSystem(("a", "b", "c"), eqs_bad)
    sol_bad = gf2_solve(system_bad)
    assert not sol_bad.consistent
    _check_certificate(system_bad, sol_bad.certificate)


def test_gf2_multiset_reduction():
    eq = parity_equation(["a", "a", "b"], 1)
    assert eq.variables == frozenset({"b"})
    empty_odd = parity_equation(["a", "a"], 1)
    assert empty_odd.variables == frozenset()
    system = ParityConstraintSystem(("a",), (empty_odd,))
    assert not gf2_solve(system).consistent


def test_gf2_random_systems_round_trip():
    rng = random.Random(99)
    for _ in range(50):
        nvars = rng.randrange(1, 8)
        variables = tuple(f"v{i}" for i in range(nvars))
        planted = {v: rng.randrange(2) for v in variables}
        eqs = []
        for k in range(rng.randrange(1, 10)):
            chosen = [v for v in variables if rng.randrange(2)]
            rhs = sum(planted[v] for v in chosen) % 2
            eqs.append(parity_equation(chosen, rhs, f"e{k}"))
        system = ParityConstraintSystem(variables, tuple(eqs))
        sol = gf2_solve(system)
        assert sol.consistent  # planted solution exists
        _check_witness(system, sol.witness)


def test_gf2_nullspace():
    # kernel of [[1,1,0],[0,1,1]] is spanned by (1,1,1)
    basis = gf2_nullspace([0b011, 0b110], 3)
    assert basis == [0b111]
    assert gf2_nullspace([0b01, 0b10], 2) == []


def test_undeclared_variable_rejected():
    with pytest.raises(ValueError):
        ParityConstraintSystem((), (Equation(frozenset({"ghost"}), 0),))


# ---------------------------------------------------------------------------
# Ring instances
# ---------------------------------------------------------------------------

def test_build_ring_instance_rejects_bad_f():
    for f in (0, 2, -1):
        with pytest.raises(ValueError):
            build_ring_instance(f)


def test_ring_instance_f1_matches_hand_construction():
    inst = build_ring_instance(1)
    assert inst.n == 12
    assert inst.vertices == frozenset({4, 8, 12})
    assert inst.midpoints == frozenset({2, 6, 10})
    assert inst.left_sites == frozenset() and inst.right_sites == frozenset()
    subs = {c.name: str(c.sub) for c in inst.cases}
    assert subs == {
        "xxx": "IXIXIXIXIXIX",
        "yyy": "YXYIYXYIYXYI",
        "yxy": "YIYYIXIXIXIY",
        "yyx": "IXIYYIYYIXIX",
        "xyy": "IXIXIXIYYIYY",
    }
    signs = {c.name: c.expected_sign for c in inst.cases}
    assert signs == {"xxx": 1, "yyy": -1, "yxy": 1, "yyx": 1, "xyy": 1}
    for c in inst.cases:
        assert is_submeasurement(c.sub, c.global_measurement)
        assert classify(inst.graph, c.sub) == Verdict.deterministic(c.expected_sign)


def test_ring_instance_f3_oracle_confirms_signs():
    inst = build_ring_instance(3)
    assert inst.n == 36
    for c in inst.cases:
        assert classify(inst.graph, c.sub) == Verdict.deterministic(c.expected_sign)


@pytest.mark.parametrize("f", [1, 3])
def test_ring_subs_equal_explicit_generator_products(f):
    inst = build_ring_instance(f)
    g = inst.graph
    n = inst.n
    by_name = {c.name: c for c in inst.cases}

    # product of every second generator
    a = [1 if j % 2 == 0 else 0 for j in range(1, n + 1)]
    p = generator_product(g, a)
    assert p.letters == by_name["xxx"].sub.letters and p.sign == 1

    # product of minus-signed triples at 4j-3, 4j-2, 4j-1
    a = [1 if j % 4 != 0 else 0 for j in range(1, n + 1)]
    p = generator_product(g, a)
    assert p.letters == by_name["yyy"].sub.letters
    assert p.sign * (-1) ** (3 * f) == 1

    # the displayed factorization of the third case
    sites = {1, 4 * f - 1} | {2 * k for k in range(2 * f, 6 * f + 1)}
    for j in range(1, f):
        sites |= {4 * j - 1, 4 * j, 4 * j + 1}
    a = [1 if j in sites else 0 for j in range(1, n + 1)]
    p = generator_product(g, a)
    assert p.letters == by_name["yxy"].sub.letters
    assert p.sign * (-1) ** (f - 1) == 1


def test_ring_cases_are_cyclic_shifts():
    inst = build_ring_instance(1)
    by_name = {c.name: c for c in inst.cases}

    def shift(m, k, n):
        return Measurement("".join(m.letters[(j - 1 - k) % n] for j in range(1, n + 1)))

    assert shift(by_name["yxy"].sub, 4, 12).letters == by_name["yyx"].sub.letters
    assert shift(by_name["yyx"].sub, 4, 12).letters == by_name["xyy"].sub.letters


# ---------------------------------------------------------------------------
# Distance certifier
# ---------------------------------------------------------------------------

def test_distance_bound_values():
    assert distance_bound(12) == 1
    assert distance_bound(14) == 1
    assert distance_bound(36) == 5
    assert distance_bound(24) == 1
    assert distance_bound(48) == 5
    assert distance_bound(60) == 9
    with pytest.raises(ValueError):
        distance_bound(11)


def test_triangle_ring_constraint_structure():
    inst = build_ring_instance(1)
    system = distance_constraint_system(inst.graph, inst.cases, 1)
    assert len(system.equations) == 5

    expected = [
        ({("x", 2), ("x", 4), ("x", 6), ("x", 8), ("x", 10), ("x", 12)}, 0),
        ({("y", 1), ("x", 2), ("y", 3), ("y", 5), ("x", 6), ("y", 7), ("y", 9), ("x", 10), ("y", 11)}, 1),
        ({("y", 1), ("y", 3), ("y", 4), ("x", 6), ("x", 8), ("x", 10), ("y", 12)}, 0),
        ({("x", 2), ("y", 4), ("y", 5), ("y", 7), ("y", 8), ("x", 10), ("x", 12)}, 0),
        ({("x", 2), ("x", 4), ("x", 6), ("y", 8), ("y", 9), ("y", 11), ("y", 12)}, 0),
    ]
    for eq, (names, rhs) in zip(system.equations, expected):
        assert {(v.observable, v.site) for v in eq.variables} == names
        assert eq.rhs == rhs

    # at f=1, d=1 every (observable, site) pair names a single shared variable
    by_name = {}
    for eq in system.equations:
        for v in eq.variables:
            by_name.setdefault((v.observable, v.site), set()).add(v)
    assert all(len(keys) == 1 for keys in by_name.values())
    # the midpoint variable x2 is shared across four equations
    x2 = next(iter(by_name[("x", 2)]))
    assert sum(1 for eq in system.equations if x2 in eq.variables) == 4

    sol = gf2_solve(system)
    assert not sol.consistent
    assert sol.certificate == (0, 1, 2, 3, 4)
    _check_certificate(system, sol.certificate)


def test_single_instance_always_consistent():
    inst = build_ring_instance(1)
    system = distance_constraint_system(inst.graph, inst.cases[:1], 1)
    sol = gf2_solve(system)
    assert sol.consistent
    _check_witness(system, sol.witness)


def test_full_view_system_is_consistent():
    # with d at the diameter every view is the whole measurement, the five
    # instances stop sharing variables, and a model exists
    inst = build_ring_instance(1)
    system = distance_constraint_system(inst.graph, inst.cases, 6)
    sol = gf2_solve(system)
    assert sol.consistent
    _check_witness(system, sol.witness)


def test_distance_two_already_admits_a_model_at_f1():
    inst = build_ring_instance(1)
    system = distance_constraint_system(inst.graph, inst.cases, 2)
    assert gf2_solve(system).consistent


def test_view_canonicalization_round_trip():
    # a view reads back exactly the measurement letters on the ball, in
    # sorted node order, so byte-equal views mean equal restrictions
    g = ring(12)
    inst = build_ring_instance(1)
    for case in inst.cases:
        m = case.global_measurement
        for j in range(1, 13):
            for d in (0, 1, 2):
                view = measurement_view(g, m, j, d)
                nodes = tuple(k for k, _ in view)
                assert nodes == tuple(sorted(set(nodes)))
                assert set(nodes) == set(ball(g, j, d))
                for k, letter in view:
                    assert m.letter(k) == letter


def test_certify_distance_sweep():
    for n, expected_bound in ((12, 1), (14, 1), (36, 5)):
        cert = certify_distance(n)
        assert cert.bound == expected_bound
        assert cert.d == expected_bound
        assert not cert.solution.consistent
        assert cert.ok
        assert cert.max_other_changeable_in_view <= 1
        _check_certificate(cert.system, cert.solution.certificate)


def test_certify_distance_padding_is_idle():
    cert = certify_distance(14)
    assert cert.padding == 2 and cert.ring_size == 12 and cert.f == 1
    for case in cert.cases:
        assert case.sub.letters[12:] == "II"
        assert case.global_measurement.letters[12:] == "II"


# ---------------------------------------------------------------------------
# Submeasurement verification
# ---------------------------------------------------------------------------

def test_grid_2x3_mismatch_family_matches_brute_force():
    g = grid(2, 3)
    m = Measurement("YYYYYY")
    report = verify_all_submeasurements(g, m)
    assert not report.clean
    got = {c.sites: (c.oracle, c.lhv) for c in report.mismatches}

    # independent oracle: enumerate hidden assignments by brute force
    expected = {}
    for k in range(7):
        for subset in itertools.combinations(m.support(), k):
            oracle_v = classify(g, m.restricted_to(subset))
            products = {run(g, m, z).product_over(subset) for z in all_assignments(6)}
            lhv_v = (
                Verdict.deterministic(products.pop())
                if len(products) == 1
                else Verdict.uniform()
            )
            if oracle_v != lhv_v:
                expected[subset] = (oracle_v, lhv_v)
    assert got == expected
    assert got[(1, 2, 3, 5)] == (Verdict.deterministic(-1), Verdict.deterministic(1))


def test_verify_report_counts_and_entries():
    g = grid(2, 3)
    m = Measurement("YYYYYY")
    report = verify_all_submeasurements(g, m, include_matches=True)
    assert report.subsets_checked == 64
    assert len(report.entries) == 64
    assert report.deterministic_subsets == 4
    assert report.entries[0].sites == ()


def test_verify_matches_product_verdict_pointwise():
    g = star(4)
    m = Measurement("XYXZ")
    report = verify_all_submeasurements(g, m, include_matches=True)
    for entry in report.entries:
        assert entry.lhv == product_verdict(g, m, entry.sites)
        assert entry.oracle == classify(g, m.restricted_to(entry.sites))


def test_verify_star_graphs_clean():
    for n in (3, 4):
        g = star(n)
        for letters in itertools.product("IXYZ", repeat=n):
            report = verify_all_submeasurements(g, Measurement("".join(letters)))
            assert report.clean


def test_verify_uniform_everywhere_trivially_clean():
    g = chain(4)
    m = Measurement("ZIIZ")
    report = verify_all_submeasurements(g, m, include_matches=True)
    assert report.clean
    assert all(not e.oracle.is_deterministic or e.sites == () for e in report.entries)


def test_verify_workers_agree():
    # large enough to exercise the parallel path (> 1024 subsets)
    g = ring(12)
    m = Measurement("X" * 12)
    seq = verify_all_submeasurements(g, m)
    par = verify_all_submeasurements(g, m, workers=2)
    assert seq == par
    assert seq.subsets_checked == 4096


def test_verify_guard():
    g = ring(21)
    with pytest.raises(UnsupportedSizeError):
        verify_all_submeasurements(g, Measurement("X" * 21))


# ---------------------------------------------------------------------------
# Site invariance
# ---------------------------------------------------------------------------

def test_grid_2x3_site_invariance_single_sub():
    g = grid(2, 3)
    system = site_invariance_system(g, Measurement("YYYYYY"), [({1, 2, 3, 5}, -1)])
    assert sorted(v.sites for v in system.variables) == [(1, 3, 4, 6), (2, 5)]
    assert len(system.equations) == 1
    assert system.equations[0].variables == frozenset()  # orbits cancel pairwise
    assert system.equations[0].rhs == 1
    sol = gf2_solve(system)
    assert not sol.consistent
    assert sol.certificate == (0,)


def test_grid_2x3_site_invariance_all_found_subs():
    g = grid(2, 3)
    m = Measurement("YYYYYY")
    subs = find_certain_submeasurements(g, m)
    assert (frozenset({1, 2, 3, 5}), -1) in subs
    assert (frozenset(), 1) in subs
    system = site_invariance_system(g, m, subs)
    assert not gf2_solve(system).consistent


def test_all_plus_subs_consistent_with_zero_flips():
    g = star(4)
    m = Measurement("XXXX")
    subs = [(s.support(), 1) for s in [m.restricted_to(()), m.restricted_to((2, 3))]]
    assert classify(g, m.restricted_to((2, 3))) == Verdict.deterministic(1)
    system = site_invariance_system(g, m, subs)
    sol = gf2_solve(system)
    assert sol.consistent
    assert all(v == 0 for v in sol.witness.values())


def test_y_supports_match_subset_search():
    g = grid(2, 3)
    from_kernel = set(y_stabilizer_supports(g))
    from_search = {
        (s, sign)
        for s, sign in find_certain_submeasurements(g, Measurement("YYYYYY"))
    }
    assert from_kernel == from_search


def test_embedded_grid_counterexamples():
    for p, q in ((0, 0), (0, 1), (1, 0), (1, 1)):
        g, glob, sub = embedded_grid_counterexample(p, q)
        assert is_submeasurement(sub, glob)
        assert classify(g, sub) == Verdict.deterministic(-1)
        system = site_invariance_system(
            g, glob, [(sub.support(), -1)], max_nodes=max(12, g.n)
        )
        sol = gf2_solve(system)
        assert not sol.consistent
        _check_certificate(system, sol.certificate)


def test_embedded_counterexample_0_0_is_the_2x3_grid():
    g, glob, sub = embedded_grid_counterexample(0, 0)
    assert str(glob) == "YYYYYY"
    assert str(sub) == "YYYIYI"


def test_site_invariance_rejects_unmeasured_support():
    g = grid(2, 3)
    with pytest.raises(ValueError):
        site_invariance_system(g, Measurement("YYYIYI"), [({4,}, 1)])


def test_complete_bipartite_subs_clean():
    g = complete_bipartite(2, 2)
    for letters in itertools.product("IXYZ", repeat=4):
        report = verify_all_submeasurements(g, Measurement("".join(letters)))
        assert report.clean
