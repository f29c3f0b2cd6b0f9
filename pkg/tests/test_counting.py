import math

import pytest

from partlat import counting
from partlat.oracle import ConstraintRecord, classify, count

# Row m=6 of the two classic tables, frozen from the printed versions.
EXACT_ROW_6 = (0, 1, 3, 3, 2, 1, 1)
ATMOST_ROW_6 = (0, 1, 4, 7, 9, 10, 11)
P_FIRST = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176)


class TestP:
    def test_first_values(self):
        assert tuple(counting.p(m) for m in range(16)) == P_FIRST

    def test_zero_and_negative(self):
        assert counting.p(0) == 1
        assert counting.p(-3) == 0

    @pytest.mark.parametrize("m", range(61))
    def test_pentagonal_agrees_with_row_sums(self, m):
        assert counting.p(m) == counting.p_row_sum(m)

    @pytest.mark.parametrize("m", range(15))
    def test_agrees_with_oracle(self, m):
        assert counting.p(m) == count(ConstraintRecord(total=m))


class TestPExact:
    def test_row_six(self):
        assert tuple(counting.p_exact(6, n) for n in range(7)) == EXACT_ROW_6

    def test_single_part(self):
        for m in range(1, 20):
            assert counting.p_exact(m, 1) == 1

    def test_base_case(self):
        assert counting.p_exact(0, 0) == 1
        assert counting.p_exact(3, 0) == 0
        assert counting.p_exact(-1, 2) == 0

    def test_thirteen_into_five(self):
        # Derived by brute force; also the printed column sum of the
        # size-13 scheme at n=5.
        assert counting.p_exact(13, 5) == 18
        assert counting.p_exact(13, 5) == count(ConstraintRecord(total=13, exact_parts=5))


class TestPAtmost:
    def test_row_six(self):
        assert tuple(counting.p_atmost(6, n) for n in range(7)) == ATMOST_ROW_6

    def test_worked_cells(self):
        assert counting.p_atmost(6, 4) == 9
        assert counting.p_atmost(5, 5) == 7

    def test_zero_parts(self):
        assert counting.p_atmost(0, 0) == 1
        assert counting.p_atmost(4, 0) == 0

    @pytest.mark.parametrize("m", range(21))
    def test_stabilizes_at_p(self, m):
        for n in range(m, m + 6):
            assert counting.p_atmost(m, n) == counting.p(m)


class TestPBox:
    def test_cube_column(self):
        assert [counting.p_box(3, 3, m) for m in range(10)] == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]

    def test_empty_total(self):
        assert counting.p_box(4, 2, 0) == 1
        assert counting.p_box(0, 0, 0) == 1

    def test_printed_recurrence_counterexample(self):
        # The naive two-term sum double counts at (3,3,4).
        assert counting.p_box(3, 3, 4) == 3
        assert counting.p_box(2, 3, 4) + counting.p_box(3, 2, 4) == 4

    def test_symmetry_and_complement(self):
        for a in range(6):
            for b in range(6):
                for m in range(a * b + 1):
                    assert counting.p_box(a, b, m) == counting.p_box(b, a, m)
                    assert counting.p_box(a, b, m) == counting.p_box(b, a, a * b - m)

    def test_unimodality(self):
        for a in range(6):
            for b in range(6):
                vals = [counting.p_box(a, b, m) for m in range(a * b + 1)]
                mid = a * b / 2
                for m in range(1, len(vals)):
                    if m <= mid:
                        assert vals[m] >= vals[m - 1]
                    else:
                        assert vals[m] <= vals[m - 1]

    @pytest.mark.parametrize("m", range(15))
    def test_agrees_with_oracle(self, m):
        for a in range(6):
            for b in range(6):
                assert counting.p_box(a, b, m) == count(
                    ConstraintRecord(total=m, max_part=a, max_parts=b))


class TestExactFrame:
    def test_worked_example(self):
        assert counting.exact_frame(4, 3, 8) == 2
        assert counting.p_box(3, 2, 2) == 2

    def test_hook_only(self):
        for m in range(1, 10):
            assert counting.exact_frame(m, 1, m) == 1

    def test_scheme_cell(self):
        assert counting.exact_frame(3, 3, 7) == 2

    @pytest.mark.parametrize("m", range(1, 13))
    def test_conjugation_symmetry(self, m):
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                assert counting.exact_frame(a, b, m) == counting.exact_frame(b, a, m)


class TestPartiallyRestrictedSums:
    def test_scheme_row_and_column_sums_for_seven(self):
        assert counting.p_with_parts(2, 7) == 3
        assert counting.p_with_largest(7, 7) == 1

    def test_scheme_thirteen_column(self):
        assert counting.p_with_parts(3, 13) == 14

    def test_column_sums_match_exact_counts(self):
        for m in range(1, 13):
            for n in range(1, m + 1):
                assert counting.p_with_parts(n, m) == counting.p_exact(m, n)


class TestPMinPart:
    def test_minimum_two(self):
        assert counting.p_min_part(6, 3, 2) == 1
        assert counting.p_min_part(6, 3, 2) == count(
            ConstraintRecord(total=6, exact_parts=3, min_part=2))

    def test_minimum_one_is_plain_exact(self):
        for m in range(13):
            for n in range(m + 1):
                assert counting.p_min_part(m, n, 1) == counting.p_exact(m, n)

    def test_negative_base(self):
        # Shift base -2 -> 1 adds 3 units to each of 5 parts.
        assert counting.p_min_part(-5, 5, -2) == counting.p_exact(10, 5) == 7


class TestOddEvenMixed:
    @pytest.mark.parametrize(
        "m,expected",
        [(9, (8, 0, 22, 30)), (1, (1, 0, 0, 1)), (6, (4, 3, 4, 11))],
    )
    def test_printed_rows(self, m, expected):
        assert counting.odd_even_mixed(m) == expected

    @pytest.mark.parametrize("m", range(1, 21))
    def test_partition_of_p(self, m):
        odd, even, mixed, total = counting.odd_even_mixed(m)
        assert odd + even + mixed == total == counting.p(m)

    @pytest.mark.parametrize("m", range(1, 15))
    def test_against_oracle(self, m):
        odd, even, mixed, _ = counting.odd_even_mixed(m)
        assert odd == count(ConstraintRecord(total=m, parity="all-odd"))
        assert even == count(ConstraintRecord(total=m, parity="all-even"))
        assert mixed == count(ConstraintRecord(total=m, parity="mixed"))

    def test_table_row_nine(self):
        t = counting.odd_even_mixed_table(9)
        assert t.row(9) == (1, 0, 3, 0, 2, 0, 1, 0, 1, 8, 0, 22, 30)


class TestDistinct:
    @pytest.mark.parametrize(
        "m,counts,diff",
        [(10, (1, 4, 4, 1), 0), (12, (1, 5, 7, 2), 1), (5, (1, 2), -1)],
    )
    def test_printed_rows(self, m, counts, diff):
        got_counts, got_diff = counting.distinct_row(m)
        assert got_counts == counts and got_diff == diff
        assert sum(got_counts) == {10: 10, 12: 15, 5: 3}[m]

    @pytest.mark.parametrize("m", range(1, 15))
    def test_against_oracle(self, m):
        counts, _ = counting.distinct_row(m)
        buckets = classify(ConstraintRecord(total=m, parity="distinct"), "exact_parts")
        for k, c in enumerate(counts, start=1):
            assert buckets.get(k, 0) == c

    def test_table_shape(self):
        t = counting.distinct_table(12)
        assert t.cols[-2:] == ("total", "difference")
        assert t.cell(12, "difference") == 1


class TestUnitDiff:
    def test_row_six(self):
        assert tuple(counting.unit_diff_cell(6, j) for j in range(7)) == (4, 2, 2, 1, 1, 0, 1)

    def test_diagonal_is_one(self):
        for i in range(12):
            assert counting.unit_diff_cell(i, i) == 1

    def test_no_units_column(self):
        assert counting.unit_diff_cell(4, 0) == 2

    @pytest.mark.parametrize("m", range(15))
    def test_against_oracle(self, m):
        for j in range(m + 1):
            assert counting.unit_diff_cell(m, j) == count(
                ConstraintRecord(total=m, unit_count=j))


class TestFranklin:
    @pytest.mark.parametrize("k,sums", [(1, (1, 2)), (2, (5, 7)), (3, (12, 15))])
    def test_pentagonal_sums(self, k, sums):
        a, b = counting.franklin_trapezoids(k)
        assert (a.total, b.total) == sums

    def test_shape_is_trapezoid(self):
        a, b = counting.franklin_trapezoids(4)
        for q in (a, b):
            assert q.nonzero_count == 4
            steps = {x - y for x, y in zip(q.nonzero_parts, q.nonzero_parts[1:])}
            assert steps == {1}

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            counting.franklin_trapezoids(0)


class TestNeighborTable:
    def test_printed_rows(self):
        t = counting.right_hand_neighbor_table(7)
        assert t.row(7) == (1, 5, 6, 4, 2, 1)
        assert t.row(2) == (1, 0, 0, 0, 0, 0)
        assert t.row(5) == (1, 3, 2, 1, 0, 0)

    def test_row_sums_are_partition_prefix_sums(self):
        t = counting.right_hand_neighbor_table(12)
        for m, s in zip(t.rows, t.row_sums):
            assert s == counting.neighbor_total(m)
            assert s == sum(counting.p(k) for k in range(m - 1))

    def test_difference_row(self):
        assert counting.neighbor_difference_row(7) == (0, 1, 2, 2, 1, 1)


class TestLayers:
    def test_printed_row_fifteen(self):
        t = counting.layer_table(15)
        assert t.row(15) == (15, 12, 20, 24, 31, 30, 29, 12, 3)
        assert t.row_sums[-1] == 176

    def test_row_sums_are_p(self):
        t = counting.layer_table(15)
        for n, s in zip(t.rows, t.row_sums):
            assert s == counting.p(n)

    @pytest.mark.parametrize("m", range(1, 15))
    def test_against_oracle(self, m):
        buckets = classify(ConstraintRecord(total=m), "layer")
        for k in range(1, m + 1):
            assert counting.layer_count(m, k) == buckets.get(k, 0)

    def test_diagonal_sums(self):
        assert counting.diagonal_sum(5) == 16
        assert [counting.diagonal_sum(d) for d in range(1, 15)] == [2 ** (d - 1) for d in range(1, 15)]

    def test_seventh_diagonal_completion(self):
        # The table ends at total 15; the in-table antidiagonal misses the
        # partition (4,4,4,4) of 16, which has hook frame 7.
        t = counting.layer_table(15)
        in_table = sum(t.cell(7 + k - 1, k) for k in range(1, 10))
        assert in_table == 63
        assert counting.diagonal_sum(7) == 64
        assert counting.hook_layer_count(7, 9) == 1  # that last partition

    def test_power_law_checker(self):
        assert all(counting.diagonal_power_law(d) for d in range(1, 15))


class TestBinomialRows:
    def test_row_five(self):
        assert counting.binomial_row(5) == (1, 4, 6, 4, 1)

    @pytest.mark.parametrize("r", range(1, 15))
    def test_matches_binomials(self, r):
        row = counting.binomial_row(r)
        assert row == tuple(math.comb(r - 1, k - 1) for k in range(1, r + 1))
        assert sum(row) == 2 ** (r - 1)

    def test_table_row_sums(self):
        t = counting.binomial_table(5)
        assert t.row_sums == (1, 2, 4, 8, 16)
