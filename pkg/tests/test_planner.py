import random
from itertools import product

import pytest

from modmckay.graph import all_pairs_distances, build_certified_graph
from modmckay.moves import (
    Move,
    first_nonzero_position,
    move_add_first,
    move_clear_forward,
    validate_move,
)
from modmckay.planner import (
    InvariantViolationError,
    PathPlan,
    canonical_set,
    capital_M_of,
    ell,
    lambda_zero,
    length_bound,
    path_from_M,
    plan_path,
    s_mu,
)
from modmckay.weights import steinberg_weight


def all_restricted(n, p):
    return [w for w in product(range(p), repeat=n - 1)]


class TestEll:
    def test_steinberg(self):
        assert ell((2, 2, 2), 3) == 0

    def test_zero(self):
        assert ell((0, 0, 0), 3) == 4

    def test_last_small_entry(self):
        assert ell((1, 2, 0, 2), 3) == 3

    def test_rejects_unrestricted(self):
        with pytest.raises(ValueError):
            ell((3, 0), 3)


class TestCanonicalSet:
    def test_golden_path_vertex_count(self):
        assert len(canonical_set(5, 2)) == 11

    def test_n2_p3(self):
        assert canonical_set(2, 3) == {(0,), (1,), (2,)}

    def test_endpoints_always_present(self):
        for n, p in [(2, 2), (3, 3), (4, 2), (5, 3)]:
            M = canonical_set(n, p)
            assert (0,) * (n - 1) in M
            assert steinberg_weight(n, p) in M


class TestSMu:
    def test_zero_on_canonical_tail_weights(self):
        for n, p in [(3, 3), (5, 2), (4, 3)]:
            for mu in canonical_set(n, p):
                l = ell(mu, p)
                if all(mu[x - 1] == 0 for x in range(1, min(l, n))):
                    assert s_mu(mu, p) == 0

    def test_travelling_one(self):
        assert s_mu((1, 0, 1, 1), 2) == 1

    def test_below_gap(self):
        assert s_mu((2, 0, 1), 3) == 1


class TestCapitalM:
    def test_members_fixed(self):
        for mu in canonical_set(4, 3):
            assert capital_M_of(mu, 3) == mu

    def test_constructed_waypoint(self):
        assert capital_M_of((2, 0, 1), 3) == (1, 0, 1)

    def test_stage_end_member(self):
        assert capital_M_of((0, 2, 2), 3) == (0, 2, 2)

    def test_always_lands_in_canonical_set(self):
        for n, p in [(3, 3), (4, 2), (4, 3), (5, 2)]:
            for mu in all_restricted(n, p):
                assert capital_M_of(mu, p) in canonical_set(n, p)


class TestLambdaZero:
    def test_p2_always_zero(self):
        assert lambda_zero((1, 0, 1), 3, 0, 2) == 0
        assert lambda_zero((1, 1, 1), 2, 1, 2) == 0

    def test_example(self):
        assert lambda_zero((2, 0, 1), 3, 0, 3) == 1

    def test_matching_residue_gives_zero(self):
        assert lambda_zero((2, 0, 1), 3, 3, 5) == 0

    def test_range(self):
        rng = random.Random(401)
        for _ in range(200):
            p = rng.choice([2, 3, 5, 7])
            lam = tuple(rng.randrange(p) for _ in range(4))
            upto = rng.randrange(5)
            r = rng.randrange(-3, 7)
            l0 = lambda_zero(lam, upto, r, p)
            assert 0 <= l0 <= p - 2
            assert (l0 + sum(lam[:upto])) % (p - 1) == r % (p - 1)


class TestPathFromM:
    def test_trivial_for_members(self):
        for mu in canonical_set(3, 3):
            assert path_from_M(mu, 3) == []

    def test_single_add(self):
        assert path_from_M((2, 0, 1), 3) == [Move("add_first")]

    def test_travelling_target(self):
        assert path_from_M((1, 1, 0, 1), 2) == [Move("add_first")]

    def test_length_formula(self):
        for n, p in [(3, 3), (4, 2), (4, 3), (5, 2), (3, 5)]:
            for mu in all_restricted(n, p):
                if mu in canonical_set(n, p):
                    continue
                s = s_mu(mu, p)
                expected = (mu[s - 1] - 1) * s + sum(
                    i * mu[i - 1] for i in range(1, s)
                )
                assert len(path_from_M(mu, p)) == expected


class TestPlanPath:
    def test_canonical_plan_matches_golden_path(self):
        plan = plan_path((0, 0, 0, 0), (1, 1, 1, 1), 2)
        assert plan.length == 10
        assert plan.waypoints == (
            (0, 0, 0, 0),
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
            (1, 0, 0, 1),
            (0, 1, 0, 1),
            (0, 0, 1, 1),
            (1, 0, 1, 1),
            (0, 1, 1, 1),
            (1, 1, 1, 1),
        )

    def test_equal_weights_give_empty_plan(self):
        plan = plan_path((1, 2), (1, 2), 3)
        assert plan.length == 0
        assert plan.waypoints == ((1, 2),)

    def test_single_add(self):
        plan = plan_path((2,), (1,), 3)
        assert plan.moves == (Move("add_first"),)

    def test_validated_and_bounded_on_two_instances(self):
        for n, p in [(3, 2), (2, 5)]:
            g = build_certified_graph(n, p)
            rows = all_pairs_distances(g)
            bound = length_bound(n, p)
            for a in g.vertices:
                for b in g.vertices:
                    plan = plan_path(a, b, p)
                    assert plan.source == a and plan.target == b
                    assert plan.waypoints[0] == a and plan.waypoints[-1] == b
                    assert plan.length <= bound
                    assert plan.length >= rows[g.index_of(a)][g.index_of(b)]
                    # waypoints really are the move applications
                    for w, move, nxt in zip(
                        plan.waypoints, plan.moves, plan.waypoints[1:]
                    ):
                        assert validate_move(w, nxt, p) == move

    def test_equality_at_extremal_pair(self):
        for n, p in [(2, 3), (3, 2), (3, 3), (4, 2)]:
            zero = (0,) * (n - 1)
            st = steinberg_weight(n, p)
            assert plan_path(zero, st, p).length == length_bound(n, p)

    def test_case_i_normalization_cost(self):
        # the add-then-sweep prefix of the ell(lam) > ell(mu) case costs
        # lam_0 + sum S_i <= (n-1)(p-1), re-derived here by simulation
        for n, p in [(3, 3), (4, 3), (3, 5), (5, 2)]:
            for lam in all_restricted(n, p):
                if not any(lam):
                    continue
                l_lam = ell(lam, p)
                if l_lam == 0:
                    continue  # Steinberg never lands in this case
                steps = lambda_zero(lam, l_lam, 0, p)
                w = lam
                for _ in range(steps):
                    w = move_add_first(w, p)
                while True:
                    s = first_nonzero_position(w)
                    if s is None or s >= l_lam:
                        break
                    w = move_clear_forward(w, p)
                    steps += 1
                assert steps <= (n - 1) * (p - 1)
                assert w[l_lam - 1] in (0, p - 1)
                assert all(x == 0 for x in w[: l_lam - 1])

    def test_input_validation(self):
        with pytest.raises(ValueError):
            plan_path((3, 0), (0, 0), 3)
        with pytest.raises(ValueError):
            plan_path((0, 0), (1, 1, 1), 2)


class TestPathPlanSerialization:
    def test_json_roundtrip(self):
        plan = plan_path((0, 0), (2, 2), 3)
        again = PathPlan.from_json_dict(plan.to_json_dict())
        assert again == plan

    def test_json_shape(self):
        payload = plan_path((0,), (1,), 2).to_json_dict()
        assert payload["length"] == 1
        assert payload["moves"] == [{"kind": "add_first"}]
        assert payload["waypoints"] == [[0], [1]]


class TestInvariantGuards:
    def test_invariant_error_is_distinguishable(self):
        assert issubclass(InvariantViolationError, AssertionError)
