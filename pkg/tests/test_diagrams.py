"""Diagram model: invariants, block view, crossing statistics, formats."""

from itertools import combinations

import pytest

from conftest import braids_over, partitions_of
from noncrossing.diagrams import (
    ArcDiagram,
    BraidDiagram,
    InvalidDiagramError,
    PartitionDiagram,
    braid_crossing_number,
    diagram_svg,
    format_diagram,
    has_isolated_points,
    is_k_noncrossing,
    is_two_regular,
    loop_isolated_vertices,
    parse_diagram,
    partition_blocks,
    partition_crossing_number,
    partition_from_blocks,
    strip_loops,
)
from noncrossing.enumeration import gen_braids_no_isolated


# -- oracles -----------------------------------------------------------------


def chain_exists(arcs, size, shared):
    """Exhaustive subset oracle for the crossing statistic."""
    for sub in combinations(sorted(arcs), size):
        lefts = [i for i, _ in sub]
        rights = [j for _, j in sub]
        if any(a >= b for a, b in zip(lefts, lefts[1:])):
            continue
        if any(a >= b for a, b in zip(rights, rights[1:])):
            continue
        if lefts[-1] < rights[0] or (shared and lefts[-1] == rights[0]):
            return True
    return False


def oracle_crossing(arcs, shared):
    best = 0
    for size in range(1, len(arcs) + 1):
        if chain_exists(arcs, size, shared):
            best = size
    return best


class TestConstruction:
    def test_arcs_are_canonicalised(self):
        d = ArcDiagram(4, ((3, 4), (1, 2)))
        assert d.arcs == ((1, 2), (3, 4))

    def test_empty_diagram_allowed(self):
        assert ArcDiagram(0).arcs == ()

    @pytest.mark.parametrize(
        "cls,n,arcs",
        [
            (ArcDiagram, 2, ((2, 1),)),
            (ArcDiagram, 2, ((1, 3),)),
            (ArcDiagram, 2, ((1, 2), (1, 2))),
            (ArcDiagram, 4, ((1, 2), (1, 3), (1, 4))),
            (PartitionDiagram, 2, ((1, 1),)),
            (PartitionDiagram, 3, ((1, 2), (1, 3))),
            (PartitionDiagram, 3, ((1, 3), (2, 3))),
            (BraidDiagram, 3, ((1, 2), (1, 3))),
            (BraidDiagram, 3, ((1, 3), (2, 3))),
            (ArcDiagram, -1, ()),
        ],
    )
    def test_invalid_inputs_rejected(self, cls, n, arcs):
        with pytest.raises(InvalidDiagramError):
            cls(n, arcs)

    def test_classes_compare_distinct(self):
        arcs = ((1, 2), (2, 3))
        assert PartitionDiagram(3, arcs) != BraidDiagram(3, arcs)

    def test_degree_and_vertex_sets(self):
        b = BraidDiagram(4, ((1, 2), (2, 3)))
        assert [b.degree(v) for v in range(1, 5)] == [1, 2, 1, 0]
        assert b.origins() == {1, 2}
        assert b.endpoints() == {2, 3}
        assert b.isolated_vertices() == (4,)
        assert BraidDiagram(1, ((1, 1),)).loops() == (1,)


class TestBlocks:
    @pytest.mark.parametrize(
        "blocks,arcs",
        [
            ([{1}, {2}, {3}], ()),
            ([{1, 3}, {2}], ((1, 3),)),
            ([{1, 3, 5}, {2, 4}], ((1, 3), (2, 4), (3, 5))),
        ],
    )
    def test_from_blocks(self, blocks, arcs):
        assert partition_from_blocks(blocks).arcs == arcs

    @pytest.mark.parametrize(
        "n,arcs,blocks",
        [
            (3, ((1, 3),), ((1, 3), (2,))),
            (1, (), ((1,),)),
            (4, ((1, 2), (2, 4)), ((1, 2, 4), (3,))),
        ],
    )
    def test_to_blocks(self, n, arcs, blocks):
        assert partition_blocks(PartitionDiagram(n, arcs)) == blocks

    @pytest.mark.parametrize(
        "blocks", [[{1}, {1, 2}], [{1}, {3}], [set()], [{0, 1}]]
    )
    def test_bad_blocks_rejected(self, blocks):
        with pytest.raises(InvalidDiagramError):
            partition_from_blocks(blocks)

    def test_round_trip_exhaustive(self):
        for n in range(0, 11):
            for p in partitions_of(n):
                assert partition_from_blocks(partition_blocks(p)) == p


class TestCrossingStatistics:
    @pytest.mark.parametrize(
        "arcs,n,expect",
        [
            (((1, 4), (2, 5), (3, 6)), 6, 3),
            ((), 5, 0),
            (((1, 3), (3, 5), (2, 4)), 5, 2),
        ],
    )
    def test_partition_examples(self, arcs, n, expect):
        assert partition_crossing_number(PartitionDiagram(n, arcs)) == expect

    @pytest.mark.parametrize(
        "arcs,n,expect",
        [
            (((1, 2), (2, 3)), 3, 2),
            (((1, 1),), 1, 1),
            (((1, 3), (2, 4), (3, 5)), 5, 3),
            (((1, 4), (2, 3)), 4, 1),  # nesting does not cross
        ],
    )
    def test_braid_examples(self, arcs, n, expect):
        assert braid_crossing_number(BraidDiagram(n, arcs)) == expect

    def test_partition_statistic_against_subset_oracle(self):
        for n in range(0, 9):
            for p in partitions_of(n):
                assert partition_crossing_number(p) == oracle_crossing(p.arcs, False)

    def test_braid_statistic_against_subset_oracle(self):
        for n in range(0, 8):
            for b in braids_over(n):
                assert braid_crossing_number(b) == oracle_crossing(b.arcs, True)

    def test_braid_statistic_splits_into_flat_conditions(self):
        # k-noncrossing braid == the loop-stripped arcs lack both a
        # strict k-chain and a shared-endpoint k-chain
        for n in range(0, 9):
            for b in braids_over(n):
                flat = strip_loops(b)
                for k in (3, 4):
                    strict = chain_exists(flat.arcs, k, False)
                    shared = chain_exists(flat.arcs, k, True)
                    assert is_k_noncrossing(b, k) == (not strict and not shared), (b, k)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            is_k_noncrossing(PartitionDiagram(1), 1)
        with pytest.raises(TypeError):
            is_k_noncrossing(ArcDiagram(1), 3)


class TestPredicates:
    def test_is_k_noncrossing_examples(self):
        assert not is_k_noncrossing(PartitionDiagram(6, ((1, 4), (2, 5), (3, 6))), 3)
        assert is_k_noncrossing(PartitionDiagram(3), 3)
        assert is_k_noncrossing(PartitionDiagram(4, ((1, 3), (2, 4))), 3)

    def test_two_regular(self):
        assert is_two_regular(PartitionDiagram(3, ((1, 3),)))
        assert not is_two_regular(PartitionDiagram(3, ((2, 3),)))
        assert not is_two_regular(PartitionDiagram(4, ((1, 3), (3, 4))))

    def test_isolated_points(self):
        assert not has_isolated_points(BraidDiagram(1, ((1, 1),)))
        assert has_isolated_points(BraidDiagram(2, ((1, 1),)))
        assert not has_isolated_points(BraidDiagram(3, ((1, 2), (2, 3))))


class TestLoopIdentification:
    def test_strip_examples(self):
        assert strip_loops(BraidDiagram(1, ((1, 1),))) == PartitionDiagram(1)
        assert strip_loops(BraidDiagram(3, ((1, 2), (2, 3)))) == PartitionDiagram(
            3, ((1, 2), (2, 3))
        )
        assert strip_loops(BraidDiagram(2)) == PartitionDiagram(2)

    def test_loop_examples(self):
        assert loop_isolated_vertices(PartitionDiagram(1)) == BraidDiagram(1, ((1, 1),))
        assert loop_isolated_vertices(PartitionDiagram(2, ((1, 2),))) == BraidDiagram(
            2, ((1, 2),)
        )
        assert loop_isolated_vertices(PartitionDiagram(3, ((1, 3),))) == BraidDiagram(
            3, ((1, 3), (2, 2))
        )

    def test_round_trip_on_braids_without_isolated_points(self):
        for n in range(0, 9):
            for b in gen_braids_no_isolated(n, n + 2):
                assert loop_isolated_vertices(strip_loops(b)) == b


class TestTextFormat:
    @pytest.mark.parametrize(
        "d,text",
        [
            (PartitionDiagram(3), "n=3; arcs="),
            (BraidDiagram(1, ((1, 1),)), "n=1; arcs=(1,1)"),
            (PartitionDiagram(5, ((3, 5), (1, 3), (2, 4))), "n=5; arcs=(1,3)(2,4)(3,5)"),
        ],
    )
    def test_format(self, d, text):
        assert format_diagram(d) == text
        assert parse_diagram(text) == (d.n, d.arcs)

    def test_round_trip_exhaustive(self):
        for n in range(0, 7):
            for b in braids_over(n):
                n2, arcs = parse_diagram(format_diagram(b))
                assert BraidDiagram(n2, arcs) == b

    @pytest.mark.parametrize("text", ["", "n=x; arcs=", "n=2 arcs=", "n=2; arcs=(1,2"])
    def test_parse_errors(self, text):
        with pytest.raises(ValueError):
            parse_diagram(text)


class TestSvg:
    def test_empty_diagram(self):
        svg = diagram_svg(PartitionDiagram(3))
        assert svg.startswith("<svg") and svg.endswith("</svg>")
        assert svg.count("<text") == 3 and "<path" not in svg

    def test_crossing_arcs_and_loop(self):
        svg = diagram_svg(BraidDiagram(4, ((1, 3), (2, 4))))
        assert svg.count("<path") == 2
        loop_svg = diagram_svg(BraidDiagram(1, ((1, 1),)))
        assert loop_svg.count('r="8"') == 1

    def test_deterministic(self):
        d = BraidDiagram(5, ((1, 3), (2, 4), (5, 5)))
        assert diagram_svg(d) == diagram_svg(d)
