import pytest

from fixedhooks.partitions import Family, Partition, enumerate_partitions
from fixedhooks.oracles import (
    colored_t11_witnesses,
    count_colored_thm11,
    count_colored_thm13,
    count_fixed_by_hook,
    count_fixed_by_part,
    count_hooks_of_size,
    count_restricted_thm12,
    fixed_hook_witnesses,
    hook_tally,
    t11_qualifying_sizes,
)


def test_fixed_by_part_examples():
    assert count_fixed_by_part(5, 1, 0, 2) == 1  # only (3, 2)
    assert count_fixed_by_part(0, 2, 0, 3) == 0
    assert count_fixed_by_part(12, 2, 2, 4) == 7


def test_fixed_by_part_requires_cell_in_column():
    with pytest.raises(ValueError):
        count_fixed_by_part(5, 3, 0, 2)


def test_fixed_by_part_figure_witness():
    lam = Partition((4, 4, 3, 1))
    assert lam.hook_length(2, 2) == 4 == 2 + 2
    assert lam in fixed_hook_witnesses(12, 2, 2, 4, by="part")


def test_fixed_by_hook_examples():
    assert count_fixed_by_hook(12, 2, 2, 4) == 18
    # row forced to k - h <= 0 means no hook can be h-fixed
    assert count_fixed_by_hook(9, 1, 5, 3) == 0
    # h = k-1 forces row 1: hooks of size k in the top cell of column 1
    for n in range(1, 9):
        for k in range(1, n + 1):
            direct = sum(
                1
                for lam in enumerate_partitions(n)
                if lam.parts and lam.hook_length(1, 1) == k
            )
            assert count_fixed_by_hook(n, 1, k - 1, k) == direct


def test_worked_example_m3_n10():
    assert sum(count_fixed_by_hook(10, 3, 0, k) for k in range(1, 11)) == 10
    assert count_colored_thm11(10, 3) == 10


def test_hooks_of_size_examples():
    assert count_hooks_of_size(3, 1, 1) == 2
    assert count_hooks_of_size(3, 1, None) == 4
    assert count_hooks_of_size(1, 1, 1) == 1


def test_hooks_of_size_column_sum_is_total():
    for n in range(12):
        for k in range(1, n + 1):
            per_column = sum(count_hooks_of_size(n, k, m) for m in range(1, n + 1))
            assert per_column == count_hooks_of_size(n, k, None)


def test_hooks_of_size_column_sum_full_range():
    # same invariant up to n = 20 for every family, one diagram pass per n
    from collections import Counter

    for family in Family:
        for n in range(21):
            by_col: Counter = Counter()
            total: Counter = Counter()
            for lam in enumerate_partitions(n, family):
                conj = lam.conj_parts()
                for i, part in enumerate(lam.parts, start=1):
                    for m in range(1, part + 1):
                        hook = part + conj[m - 1] - i - m + 1
                        by_col[(m, hook)] += 1
                        total[hook] += 1
            for k in set(total):
                assert total[k] == sum(
                    by_col.get((m, k), 0) for m in range(1, n + 1)
                )


def test_at_most_one_fixed_hook_per_column():
    # column hooks strictly decrease while i + h strictly increases
    for n in range(19):
        for lam in enumerate_partitions(n):
            for m in range(1, 7):
                hooks = lam.column_hooks(m)
                for h in range(-4, n + 1):
                    hits = sum(1 for i, hk in enumerate(hooks, 1) if hk == i + h)
                    assert hits <= 1


def test_pair_count_equals_partition_count_for_theorem_11():
    # because of the one-per-column bound, summing over hook sizes counts
    # exactly the partitions owning a 0-fixed hook in the column
    for n in range(15):
        for m in range(1, 4):
            pair_count = sum(count_fixed_by_hook(n, m, 0, k) for k in range(1, n + 1))
            partitions = len(fixed_hook_witnesses(n, m, 0))
            assert pair_count == partitions


def test_t11_qualifying_sizes():
    assert t11_qualifying_sizes((2, 2, 1), 1) == [1, 2]
    assert t11_qualifying_sizes((7, 1, 1, 1), 3) == [1]
    assert t11_qualifying_sizes((2, 2, 2, 2), 3) == [2]
    assert t11_qualifying_sizes((3, 2, 2, 1), 2) == []


def test_colored_t11_m1_multiplicity_reading():
    # an object may qualify for two sizes and is counted once per size
    assert count_colored_thm11(5, 1) == 3
    assert count_colored_thm11(0, 3) == 0
    assert count_colored_thm11(10, 1) == 15
    assert count_colored_thm11(10, 1) == sum(
        count_fixed_by_hook(10, 1, 0, k) for k in range(1, 11)
    )


def test_colored_t11_witnesses_match_count():
    for n in range(11):
        for m in (1, 2, 3):
            assert len(colored_t11_witnesses(n, m)) == count_colored_thm11(n, m)


def test_restricted_t12_examples():
    assert count_restricted_thm12(3, 2, 2) == 0  # negative target weight
    assert count_restricted_thm12(6, 2, 0) == 2  # (4,2) and (2,1,1,1,1)
    assert count_restricted_thm12(3, 1, 0) == 1  # (2,1)


def test_restricted_t12_against_direct_enumeration():
    for n in range(14):
        for m in (1, 2, 3):
            for h in range(-2, 3):
                t = n - m * h
                direct = 0
                if t >= 0:
                    for lam in enumerate_partitions(t):
                        parts = lam.parts
                        if parts.count(m) != 1:
                            continue
                        if any(m < p < 2 * m for p in parts):
                            continue
                        if sum(1 for p in parts if p >= 2 * m) >= max(0, -h):
                            direct += 1
                assert count_restricted_thm12(n, m, h) == direct


def test_colored_t13_examples():
    assert count_colored_thm13(-3, 2, 3, 0) == 0
    # m=1, k=1 degenerates to "no parts of size 1"
    for nprime in range(12):
        no_ones = sum(
            1 for lam in enumerate_partitions(nprime) if 1 not in lam.parts
        )
        assert count_colored_thm13(nprime, 1, 1, 0) == no_ones
    assert count_fixed_by_part(8, 2, 0, 3) == count_colored_thm13(3, 2, 3, 0) == 3


def test_colored_t13_variants_agree_at_h_zero():
    for m in (1, 2, 3):
        for k in range(m, m + 3):
            for nprime in range(14):
                stated = count_colored_thm13(nprime, m, k, 0, variant="stated")
                derived = count_colored_thm13(nprime, m, k, 0, variant="derived")
                assert stated == derived


def test_tally_matches_single_call_oracles():
    for family in Family:
        tally = hook_tally(12, family, 4)
        for n in range(13):
            for m in (1, 2, 3):
                for k in range(m, 7):
                    for h in range(-2, k):
                        assert tally.by_part.get((n, m, k, h), 0) == count_fixed_by_part(
                            n, m, h, k, family
                        )
                        assert tally.by_hook.get((n, m, k, h), 0) == count_fixed_by_hook(
                            n, m, h, k, family
                        )
                for k in range(1, 7):
                    assert tally.hooks_col.get((n, m, k), 0) == count_hooks_of_size(
                        n, k, m, family
                    )
            for k in range(1, 7):
                assert tally.hooks_total.get((n, k), 0) == count_hooks_of_size(
                    n, k, None, family
                )


def test_witnesses_are_ordered_and_unique():
    w = fixed_hook_witnesses(10, 3, 0)
    assert [p.parts for p in w] == [
        (6, 4), (5, 4, 1), (4, 4, 2), (4, 4, 1, 1), (4, 3, 3), (3, 3, 3, 1),
        (3, 2, 2, 2, 1), (3, 2, 2, 1, 1, 1), (3, 2, 1, 1, 1, 1, 1),
        (3, 1, 1, 1, 1, 1, 1, 1),
    ]
