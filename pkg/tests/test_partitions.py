import pytest
from hypothesis import given, strategies as st

from schurwin.partitions import (
    Context,
    GeneratorLabel,
    Partition,
    ShapeError,
    box_partitions,
    canonicalize,
    check_weight,
    dual_weight,
    parse_int_tuple,
)


def all_partitions_of(n):
    """Every partition of exactly n, by first-part recursion."""
    if n == 0:
        return [()]
    out = []
    for first in range(n, 0, -1):
        for rest in all_partitions_of(n - first):
            if not rest or rest[0] <= first:
                out.append((first, *rest))
    return out


def test_normalization_strips_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert Partition(()) == Partition((0, 0))
    assert len(Partition((2, 2, 1))) == 3


def test_invalid_partitions_rejected():
    with pytest.raises(ShapeError):
        Partition((1, 2))
    with pytest.raises(ShapeError):
        Partition((2, -1))


def test_conjugate_known_values():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition(()).conjugate() == Partition(())
    assert Partition((2, 2)).conjugate() == Partition((2, 2))


def test_conjugate_involution_exhaustive_up_to_12_boxes():
    for n in range(13):
        for parts in all_partitions_of(n):
            p = Partition(parts)
            assert p.conjugate().conjugate() == p


def test_col_length_known_values():
    p = Partition((3, 1))
    assert p.col(1) == 2
    assert p.col(2) == 1
    assert p.col(3) == 1
    assert p.col(4) == 0
    for k in range(1, 6):
        assert Partition((k,)).col(1) == 1


def test_col_is_row_of_conjugate():
    for n in range(10):
        for parts in all_partitions_of(n):
            p = Partition(parts)
            q = p.conjugate()
            for i in range(1, 8):
                assert p.col(i) == q.row(i)


def test_canonicalize_known_values():
    assert canonicalize((3, 1)) == GeneratorLabel(Partition((2,)), 1)
    assert canonicalize((1, 1)) == GeneratorLabel(Partition(()), 1)
    assert canonicalize((2, 0), -1) == GeneratorLabel(Partition((2,)), -1)
    assert canonicalize((), 5) == GeneratorLabel(Partition(()), 5)


def test_canonicalize_idempotent():
    # for r >= 1 the label's full weight carries the det power, so
    # re-canonicalizing it with m = 0 must reproduce the label exactly
    for w, m in [((4, 2, -1), 3), ((1, 1), 0), ((0, -5), -1)]:
        g = canonicalize(w, m)
        assert canonicalize(g.weight(len(w))) == g
    # r = 0: the det twist is trivial and m is just a name
    assert canonicalize((), 2) == GeneratorLabel(Partition(()), 2)


@st.composite
def weights(draw):
    entries = draw(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
    return tuple(sorted(entries, reverse=True))


@given(weights(), st.integers(-5, 5), st.integers(-4, 4))
def test_canonicalize_gauge_invariance(w, m, c):
    shifted = tuple(x + c for x in w)
    assert canonicalize(w, m) == canonicalize(shifted, m - c)


def test_fits_box_known_values():
    assert Partition((2, 2)).fits_box(2, 2)
    assert not Partition((3, 1)).fits_box(2, 2)
    assert Partition(()).fits_box(0, 0)
    assert Partition(()).fits_box(5, 7)


def test_fits_box_matches_window_membership():
    from schurwin.windows import in_window

    ctx = Context(5, 2)
    for n in range(9):
        for parts in all_partitions_of(n):
            p = Partition(parts)
            if len(p) > ctx.r:
                continue
            label = canonicalize(p.pad(ctx.r))
            assert p.fits_box(ctx.r, ctx.d - ctx.r) == in_window(label, 0, ctx)


def test_box_partitions_count_and_order():
    from math import comb

    for rows in range(5):
        for cols in range(5):
            shapes = box_partitions(rows, cols)
            assert len(shapes) == comb(rows + cols, rows)
            keys = [(p.size, p.parts) for p in shapes]
            assert keys == sorted(keys)
            assert len(set(shapes)) == len(shapes)


def test_context_validation():
    Context(4, 0)
    Context(4, 4)
    with pytest.raises(ShapeError):
        Context(0, 0)
    with pytest.raises(ShapeError):
        Context(3, 4)
    ctx = Context(7, 3)
    assert ctx.box_rows == 3
    assert ctx.box_cols == 4
    assert ctx.staircase_length == 5


def test_weight_helpers():
    assert check_weight((3, 1, -2)) == (3, 1, -2)
    with pytest.raises(ShapeError):
        check_weight((1, 2))
    with pytest.raises(ShapeError):
        check_weight((1, 0), length=3)
    assert dual_weight((3, 1, -2)) == (2, -1, -3)


def test_parse_int_tuple():
    assert parse_int_tuple("3,1") == (3, 1)
    assert parse_int_tuple("") == ()
    assert parse_int_tuple("0,0") == (0, 0)
    assert parse_int_tuple("-1,-2") == (-1, -2)
    with pytest.raises(ShapeError):
        parse_int_tuple("a,b")


def test_generator_label_weight_roundtrip():
    g = GeneratorLabel(Partition((2, 1)), -3)
    assert g.weight(3) == (-1, -2, -3)
    assert canonicalize(g.weight(3)) == g
