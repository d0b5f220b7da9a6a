"""Vacillating tableaux: shapes, validation, and the diagram bijection."""

import pytest

from conftest import braids_over, partitions_of
from noncrossing.diagrams import (
    BraidDiagram,
    PartitionDiagram,
    braid_crossing_number,
    is_k_noncrossing,
    partition_crossing_number,
)
from noncrossing.enumeration import bell_number
from noncrossing.tableaux import (
    BRAID_STEPS,
    PARTITION_STEPS,
    MalformedTableauError,
    VacillatingTableau,
    add_square,
    diagram_to_tableau,
    format_tableau,
    half_step,
    parse_tableau,
    remove_square,
    step_pairs,
    tableau_from_step_pairs,
    tableau_to_diagram,
    tableau_violations,
    validate_tableau,
)

P, B = PARTITION_STEPS, BRAID_STEPS


def _addable_rows(shape):
    return [h for h in range(1, len(shape) + 2) if h == 1 or shape[h - 2] > _row(shape, h)]


def _removable_rows(shape):
    return [
        h for h in range(1, len(shape) + 1)
        if _row(shape, h) > _row(shape, h + 1)
    ]


def _row(shape, h):
    return shape[h - 1] if h <= len(shape) else 0


def enumerate_tableaux(n, step_set):
    """Independent depth-first enumeration of all valid pair sequences
    of length n, used as a counting oracle.  Prunes branches whose shape
    cannot drain in the remaining vertices (each vertex removes at most
    one net square)."""

    def pairs_from(shape):
        if step_set == P:
            for odd in [None] + [("-", h) for h in _removable_rows(shape)]:
                mid = remove_square(shape, odd[1]) if odd else shape
                for even in [None] + [("+", h) for h in _addable_rows(mid)]:
                    yield odd, even
        else:
            yield None, None
            for h in _addable_rows(shape):
                yield None, ("+", h)
            for h in _removable_rows(shape):
                yield ("-", h), None
            for h in _addable_rows(shape):
                grown = add_square(shape, h)
                for j in _removable_rows(grown):
                    yield ("+", h), ("-", j)

    def apply(shape, half):
        if half is None:
            return shape
        if half[0] == "+":
            return add_square(shape, half[1])
        return remove_square(shape, half[1])

    def walk(shape, left, prefix):
        if sum(shape) > left:
            return
        if left == 0:
            yield tuple(prefix)
            return
        for pair in pairs_from(shape):
            end = apply(apply(shape, pair[0]), pair[1])
            yield from walk(end, left - 1, prefix + [pair])

    yield from walk((), n, [])


class TestShapes:
    def test_add_and_remove(self):
        assert add_square((), 1) == (1,)
        assert add_square((2, 1), 2) == (2, 2)
        assert remove_square((2, 2), 2) == (2, 1)
        assert remove_square((1,), 1) == ()

    @pytest.mark.parametrize(
        "op,shape,row",
        [
            (add_square, (), 2),
            (add_square, (2, 2), 2),  # (2,3) is not weakly decreasing
            (remove_square, (), 1),
            (remove_square, (2, 2), 1),  # (1,2) is not weakly decreasing
        ],
    )
    def test_illegal_moves(self, op, shape, row):
        with pytest.raises(MalformedTableauError):
            op(shape, row)

    def test_half_step(self):
        assert half_step((1,), (1,)) is None
        assert half_step((1,), (2,)) == ("+", 1)
        assert half_step((2, 1), (1, 1)) == ("-", 1)
        with pytest.raises(MalformedTableauError):
            half_step((), (2,))


class TestValidation:
    def test_spec_examples(self):
        assert validate_tableau(VacillatingTableau(((), (), ()), P))
        assert validate_tableau(VacillatingTableau(((), (1,), ()), B))
        assert not validate_tableau(VacillatingTableau(((), (1,), ()), P))

    def test_violation_report_is_machine_readable(self):
        bad = VacillatingTableau(((), (1,), ()), P)
        report = tableau_violations(bad)
        assert report and all(isinstance(line, str) for line in report)

    def test_endpoint_conditions(self):
        assert not validate_tableau(VacillatingTableau(((1,), (), ()), P))
        assert not validate_tableau(VacillatingTableau(((), (), (1,)), P))

    def test_k_bound(self):
        t = diagram_to_tableau(PartitionDiagram(4, ((1, 3), (2, 4))), k_bound=3)
        assert validate_tableau(t)
        assert not validate_tableau(
            VacillatingTableau(t.shapes, t.step_set, k_bound=2)
        )

    def test_bad_shape_entry(self):
        assert not validate_tableau(VacillatingTableau(((), (0,), ()), B))


class TestStepPairs:
    def test_examples(self):
        assert step_pairs(VacillatingTableau(((), (), ()), P)) == ((None, None),)
        assert step_pairs(VacillatingTableau(((), (1,), ()), B)) == (
            (("+", 1), ("-", 1)),
        )

    def test_round_trip(self):
        pairs = ((None, ("+", 1)), (("-", 1), None))
        t = tableau_from_step_pairs(pairs, P)
        assert t.shapes == ((), (), (1,), (), ())
        assert step_pairs(t) == pairs

    def test_errors(self):
        with pytest.raises(MalformedTableauError):
            tableau_from_step_pairs([(("-", 1), None)], P)
        with pytest.raises(MalformedTableauError):
            tableau_from_step_pairs([(("+", 1), None)], B)
        with pytest.raises(MalformedTableauError):
            tableau_from_step_pairs([(None, ("+", 1))], P)  # does not drain


class TestConversion:
    def test_spec_examples(self):
        assert tableau_to_diagram(VacillatingTableau(((), (), ()), P)) == PartitionDiagram(1)
        assert tableau_to_diagram(VacillatingTableau(((), (1,), ()), B)) == BraidDiagram(
            1, ((1, 1),)
        )
        t = tableau_from_step_pairs(((None, ("+", 1)), (("-", 1), None)), P)
        assert tableau_to_diagram(t) == PartitionDiagram(2, ((1, 2),))

        assert diagram_to_tableau(PartitionDiagram(1)).shapes == ((), (), ())
        assert diagram_to_tableau(BraidDiagram(1, ((1, 1),))).shapes == ((), (1,), ())
        assert diagram_to_tableau(PartitionDiagram(4, ((1, 3), (2, 4)))).max_rows() == 2

    def test_malformed_tableau_raises(self):
        with pytest.raises(MalformedTableauError):
            tableau_to_diagram(VacillatingTableau(((), (1,), ()), P))

    def test_round_trips(self):
        for n in range(0, 8):
            for p in partitions_of(n):
                assert tableau_to_diagram(diagram_to_tableau(p)) == p
        for n in range(0, 7):
            for b in braids_over(n):
                assert tableau_to_diagram(diagram_to_tableau(b)) == b

    def test_tableau_round_trips_back(self):
        # the other direction of the bijection, via the oracle enumerator
        for n in range(0, 5):
            for pairs in enumerate_tableaux(n, P):
                t = tableau_from_step_pairs(pairs, P)
                assert diagram_to_tableau(tableau_to_diagram(t)) == t
            for pairs in enumerate_tableaux(n, B):
                t = tableau_from_step_pairs(pairs, B)
                assert diagram_to_tableau(tableau_to_diagram(t)) == t

    def test_row_bound_equals_crossing_number(self):
        for n in range(0, 7):
            for p in partitions_of(n):
                t = diagram_to_tableau(p)
                assert t.max_rows() == partition_crossing_number(p)
                for k in (3, 4):
                    assert (t.max_rows() < k) == is_k_noncrossing(p, k)
            for b in braids_over(n):
                t = diagram_to_tableau(b)
                assert t.max_rows() == braid_crossing_number(b)
                for k in (3, 4):
                    assert (t.max_rows() < k) == is_k_noncrossing(b, k)

    def test_local_correspondence(self):
        # the i-th pair encodes the degree structure of vertex i
        for n in range(0, 7):
            for b in braids_over(n):
                pairs = step_pairs(diagram_to_tableau(b))
                for i in range(1, n + 1):
                    odd, even = pairs[i - 1]
                    origin = i in b.origins()
                    endpoint = i in b.endpoints()
                    if origin and endpoint:
                        assert odd[0] == "+" and even[0] == "-"
                    elif origin:
                        assert odd is None and even[0] == "+"
                    elif endpoint:
                        assert odd[0] == "-" and even is None
                    else:
                        assert odd is None and even is None

    def test_partition_local_correspondence(self):
        for p in partitions_of(6):
            pairs = step_pairs(diagram_to_tableau(p))
            for i in range(1, 7):
                odd, even = pairs[i - 1]
                assert (odd is not None) == (i in p.endpoints())
                assert (even is not None) == (i in p.origins())


class TestCounting:
    def test_partition_tableaux_count_is_bell(self):
        for n in range(0, 9):
            count = sum(1 for _ in enumerate_tableaux(n, P))
            assert count == bell_number(n), n

    def test_braid_tableaux_count_matches_braids(self):
        for n in range(0, 6):
            count = sum(1 for _ in enumerate_tableaux(n, B))
            assert count == len(braids_over(n)), n


class TestTextFormat:
    def test_example(self):
        assert format_tableau(VacillatingTableau(((), (1,), ()), B)) == "|1|"
        assert parse_tableau("|1|", B).shapes == ((), (1,), ())

    def test_round_trip(self):
        for p in partitions_of(5):
            t = diagram_to_tableau(p)
            assert parse_tableau(format_tableau(t), P).shapes == t.shapes
