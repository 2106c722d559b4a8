"""Smoke tests for the python bindings."""

import ketool


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def test_set_system_oracles():
    triple = ketool.SetSystem([["1", "5", "6", "7"], ["2", "4", "6", "7"], ["3", "4", "5", "7"]])
    check(triple.member_count == 3, "triple has three members")
    for verdict in (
        ketool.hke_bruteforce(triple),
        ketool.hke_pairs(triple),
        ketool.hke_partition(triple),
    ):
        check(verdict.holds, f"{verdict.method} should hold on the triple")
        check(verdict.alpha == 4, "forced alpha is 4")

    triangle = ketool.SetSystem([["1", "2"], ["2", "3"], ["3", "1"]])
    audit = ketool.equivalence_audit(triangle)
    check(not audit.holds, "the triangle family fails")
    check(audit.brute_force.witness.kind == "subset-violation", "brute force names a subfamily")
    check(audit.brute_force.witness.lhs == 3 and audit.brute_force.witness.rhs == 4,
          "whole-family sum is 3, target is 4")

    pair = ketool.SetSystem([["1", "2"], ["2", "3"]])
    check(ketool.ke_check(pair), "two uniform members always satisfy the KE equality")
    check(ketool.uniform_alpha(pair) == 2, "alpha is 2")


def test_atoms_and_duality():
    family = ketool.SetSystem([["1", "2"], ["2", "3"]])
    cells = dict((tuple(sig), tuple(elems)) for sig, elems in ketool.atom_profile(family))
    check(cells[(0,)] == ("1",), "only-first cell")
    check(cells[(0, 1)] == ("2",), "shared cell")
    check(cells[(1,)] == ("3",), "only-second cell")

    lhs, rhs, holds = ketool.duality_equality(family, [0], [1])
    check(holds and lhs == rhs == 1, "singleton sides balance")


def test_generator_and_exercise():
    one = ketool.generate_hke(1, 3, 9)
    check(one.member_count == 1 and len(one.members[0]) >= 1, "single non-empty member")

    a = ketool.generate_hke(5, 2, 123)
    b = ketool.generate_hke(5, 2, 123)
    check(a.render() == b.render(), "generation is deterministic for a fixed seed")
    check(ketool.equivalence_audit(a).holds, "generated family passes all oracles")

    seed = 0
    while True:
        seed += 1
        four = ketool.generate_hke(4, 2, seed)
        if four.member_count == 4:
            break
    first, second = ketool.exercise_identities(four)
    check(first[2] and second[2], "both four-member identities hold")


def test_graph_layer():
    p4 = ketool.Graph(["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "4")])
    omega = ketool.independence(p4)
    check(omega.alpha == 2, "alpha(P4) = 2")
    check(omega.sets.members == [["1", "3"], ["1", "4"], ["2", "4"]], "three maximum sets")
    mu, matching = ketool.matching_number(p4)
    check(mu == 2 and len(matching) == 2, "mu(P4) = 2")
    check(ketool.is_ke_graph(p4), "P4 is KE")
    check(ketool.omega_is_hke(p4).holds, "omega(P4) passes")

    report = ketool.verify_characterization(p4)
    check(report["ke"] and report["certificate"] is not None, "P4 gets a certificate")
    check(report["certificate"]["sets"] == [["1", "3"]], "smallest certificate first")

    k3 = ketool.Graph(["1", "2", "3"], [("1", "2"), ("2", "3"), ("1", "3")])
    check(not ketool.is_ke_graph(k3), "K3 is not KE")
    report = ketool.verify_characterization(k3)
    check(report["certificate"] is None and report["converse_exhausted"],
          "no subfamily certifies K3")

    cover = ketool.saturating_matching(p4, ["2", "4"], ["1", "3"])
    check(cover == [("1", "2"), ("3", "4")], "cross matching covers both outside vertices")


def test_parse_render_round_trip():
    text = "ground: 1 2 3\nset: 1 2\nset: 2 3\n"
    family, warnings = ketool.parse_setsystem(text)
    check(not warnings, "no warnings")
    check(family.render() == text, "canonical text round-trips")

    duplicated, warnings = ketool.parse_setsystem("set: 1 2\nset: 1 2\n")
    check(duplicated.member_count == 1 and len(warnings) == 1, "duplicate collapses with warning")

    graph, _ = ketool.parse_graph("vertices: 1 2 3\nedge: 1 2\n")
    round_tripped, _ = ketool.parse_graph(graph.render())
    check(round_tripped == graph, "graph round-trips")

    try:
        ketool.parse_graph("edge: 1 1\n")
    except ketool.ParseError:
        pass
    else:
        raise AssertionError("loop edge must be rejected")


def main():
    tests = [value for name, value in globals().items() if name.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
