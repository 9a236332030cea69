"""Signature reduction, normal/conormal nodes, and the e/f operators.

The confluence oracle reduces the addable/removable word by cancelling one
random matched pair at a time until none is left; the survivors must match
the stack-based reduction regardless of cancellation order, for both scan
orientations.
"""

import random

import pytest

from modpart import (
    EMPTY,
    Orientation,
    Partition,
    addable_nodes,
    classify_nodes,
    double_restriction_lower_bound,
    enumerate_partitions,
    induction_end_dim,
    is_js,
    parse_partition,
    removable_nodes,
    residue,
    restriction_end_dim,
    scan_orientation,
    tilde_e,
    tilde_e_pow,
    tilde_f,
    tilde_f_pow,
)
from modpart.errors import EmptyPartition, NotPRegular


def _random_cancellation(lam, p, i, orientation, rng):
    """Survivors of the i-word under randomly ordered pair cancellation.

    A matched pair is a removable node followed (in scan order) by an addable
    node with only already-cancelled entries in between.
    """
    word = [(node, "R") for node in removable_nodes(lam) if residue(node, p) == i]
    word += [(node, "A") for node in addable_nodes(lam) if residue(node, p) == i]
    word.sort(key=lambda t: t[0][0], reverse=(orientation is Orientation.BOTTOM_UP))
    alive: list[tuple | None] = list(word)
    while True:
        pairs = [
            (a, b)
            for a in range(len(alive))
            if alive[a] is not None and alive[a][1] == "R"
            for b in range(a + 1, len(alive))
            if alive[b] is not None
            and alive[b][1] == "A"
            and all(x is None for x in alive[a + 1 : b])
        ]
        if not pairs:
            break
        a, b = rng.choice(pairs)
        alive[a] = alive[b] = None
    normals = sorted(entry[0] for entry in alive if entry is not None and entry[1] == "R")
    conormals = sorted(entry[0] for entry in alive if entry is not None and entry[1] == "A")
    return tuple(normals), tuple(conormals)


class TestNodeLists:
    def test_addable_removable_82(self):
        lam = Partition((8, 2))
        assert addable_nodes(lam) == ((1, 9), (2, 3), (3, 1))
        assert removable_nodes(lam) == ((1, 8), (2, 2))

    def test_empty(self):
        assert addable_nodes(EMPTY) == ((1, 1),)
        assert removable_nodes(EMPTY) == ()


class TestClassification:
    def test_8_2_at_5(self):
        nc = classify_nodes(parse_partition("8,2"), 5)
        assert nc.epsilon == (1, 0, 1, 0, 0)
        assert nc.phi == (0, 1, 0, 2, 0)
        assert nc.normal[0] == ((2, 2),)
        assert nc.normal[2] == ((1, 8),)
        assert nc.conormal[3] == ((1, 9), (3, 1))

    def test_8_1_at_5(self):
        nc = classify_nodes(parse_partition("8,1"), 5)
        assert nc.epsilon == (0, 0, 1, 0, 1)
        assert nc.phi == (1, 0, 0, 2, 0)

    def test_6_at_5(self):
        nc = classify_nodes(parse_partition("6"), 5)
        assert nc.epsilon == (1, 0, 0, 0, 0)
        assert nc.phi == (0, 1, 0, 0, 1)

    def test_5_2_at_5_has_cancellation(self):
        # the removable (2,2) cancels against the addable (1,6), both residue 0
        nc = classify_nodes(parse_partition("5,2"), 5)
        assert nc.epsilon == (0, 0, 0, 0, 1)
        assert nc.phi == (0, 1, 0, 1, 0)
        assert nc.normal[0] == ()
        assert nc.conormal[0] == ()

    def test_2_1_at_3_sign_restriction(self):
        # the two-row hook at p=3 must restrict to the column, not the row
        nc = classify_nodes(parse_partition("2,1"), 3)
        assert nc.epsilon == (0, 1, 0)
        assert nc.normal[1] == ((1, 2),)
        assert tilde_e(parse_partition("2,1"), 1, 3) == Partition((1, 1))

    def test_singular_partition_allowed(self):
        nc = classify_nodes(Partition((1, 1, 1, 1, 1)), 3)
        assert sum(nc.phi) == sum(nc.epsilon) + 1

    def test_empty_partition(self):
        nc = classify_nodes(EMPTY, 5)
        assert nc.epsilon == (0, 0, 0, 0, 0)
        assert nc.phi == (1, 0, 0, 0, 0)

    def test_json_dict_shape(self):
        d = classify_nodes(parse_partition("8,2"), 5).to_json_dict()
        assert d["partition"] == "8,2"
        assert d["epsilon"] == [1, 0, 1, 0, 0]
        assert d["orientation"] == "bottom-up"
        assert d["normal"][0] == [[2, 2]]

    @pytest.mark.parametrize("orientation", list(Orientation))
    @pytest.mark.parametrize("n", range(0, 9))
    def test_matches_random_cancellation_oracle(self, n, orientation):
        rng = random.Random(20260819 + n)
        for lam in enumerate_partitions(n, 5):
            nc = classify_nodes(lam, 5, orientation)
            for i in range(5):
                normals, conormals = _random_cancellation(lam, 5, i, orientation, rng)
                assert normals == nc.normal[i]
                assert conormals == nc.conormal[i]

    def test_totals_balance_small_sweep(self):
        for n in range(0, 10):
            for lam in enumerate_partitions(n, 3):
                nc = classify_nodes(lam, 3)
                assert sum(nc.phi) == sum(nc.epsilon) + 1


class TestOperators:
    def test_tilde_e_examples(self):
        assert tilde_e(parse_partition("6"), 0, 5) == Partition((5,))
        assert tilde_e(parse_partition("6"), 1, 5) is None

    def test_tilde_f_examples(self):
        assert tilde_f(parse_partition("8,1"), 3, 5) == Partition((9, 1))
        assert tilde_f(EMPTY, 0, 5) == Partition((1,))
        assert tilde_f(EMPTY, 1, 5) is None

    def test_pow_semantics(self):
        lam = parse_partition("8,2")
        assert tilde_e_pow(lam, 0, 0, 5) == lam
        assert tilde_e_pow(lam, 0, 1, 5) == Partition((8, 1))
        assert tilde_e_pow(lam, 0, 2, 5) is None  # eps_0 = 1 < 2
        assert tilde_f_pow(EMPTY, 0, 1, 5) == Partition((1,))
        assert tilde_f_pow(lam, 3, 2, 5) == Partition((9, 2, 1))
        with pytest.raises(ValueError):
            tilde_e_pow(lam, 0, -1, 5)

    def test_residue_range_checked(self):
        with pytest.raises(ValueError):
            tilde_e(parse_partition("3,1"), 5, 5)

    def test_singular_rejected(self):
        with pytest.raises(NotPRegular):
            tilde_e(Partition((1, 1, 1)), 0, 3)

    def test_e_then_f_roundtrip_sweep(self):
        for n in range(1, 10):
            for lam in enumerate_partitions(n, 5, regular_only=True):
                nc = classify_nodes(lam, 5)
                for i in range(5):
                    if nc.epsilon[i]:
                        assert tilde_f(tilde_e(lam, i, 5), i, 5) == lam
                    if nc.phi[i]:
                        assert tilde_e(tilde_f(lam, i, 5), i, 5) == lam

    def test_pow_agrees_with_iteration(self):
        lam = parse_partition("9,1")
        nc = classify_nodes(lam, 5)
        for i in range(5):
            r = nc.epsilon[i]
            cur = lam
            for _ in range(r):
                cur = tilde_e(cur, i, 5)
            assert tilde_e_pow(lam, i, r, 5) == cur


class TestEndomorphismCounts:
    def test_restriction_fixtures(self):
        assert restriction_end_dim(parse_partition("8,2"), 5) == 2
        assert restriction_end_dim(parse_partition("6"), 5) == 1
        assert restriction_end_dim(Partition((1,)), 5) == 1

    def test_induction_fixtures(self):
        assert induction_end_dim(parse_partition("8,2"), 5) == 3
        assert induction_end_dim(EMPTY, 5) == 1

    def test_double_restriction_bound_fixtures(self):
        assert double_restriction_lower_bound(parse_partition("8,2"), 5) == 4
        assert double_restriction_lower_bound(parse_partition("6"), 5) == 1
        assert double_restriction_lower_bound(Partition((1,)), 5) == 0


class TestJsSignature:
    def test_fixtures(self):
        assert is_js(parse_partition("9,1"), 5)
        assert is_js(parse_partition("4,1,1"), 3)
        assert not is_js(parse_partition("8,2"), 5)
        assert is_js(Partition((1,)), 5)

    def test_empty_rejected(self):
        with pytest.raises(EmptyPartition):
            is_js(EMPTY, 5)

    def test_singular_rejected(self):
        with pytest.raises(NotPRegular):
            is_js(Partition((2, 2, 2)), 3)


class TestOrientationContext:
    def test_override_and_restore(self):
        lam = parse_partition("2,1")
        assert classify_nodes(lam, 3).epsilon == (0, 1, 0)
        with scan_orientation(Orientation.TOP_DOWN):
            flipped = classify_nodes(lam, 3)
            assert flipped.orientation is Orientation.TOP_DOWN
            assert flipped.epsilon != (0, 1, 0)
        assert classify_nodes(lam, 3).epsilon == (0, 1, 0)

    def test_orientations_mirror_counts(self):
        # totals agree between scans even where the node sets differ
        for lam in enumerate_partitions(7, 3):
            up = classify_nodes(lam, 3, Orientation.BOTTOM_UP)
            down = classify_nodes(lam, 3, Orientation.TOP_DOWN)
            assert sum(up.epsilon) + 1 == sum(up.phi)
            assert sum(down.epsilon) + 1 == sum(down.phi)
