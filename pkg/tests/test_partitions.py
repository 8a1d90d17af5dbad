import pytest

from jcokernel.partitions import (
    Partition,
    StandardTableau,
    gl_dimension,
    partitions_of,
    sp_dimension,
    standard_tableaux,
    syt_count,
)


def test_validation():
    assert Partition((3, 1)) == (3, 1)
    assert Partition(()) == ()
    assert Partition((2, 0, 0)) == (2,)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_conjugate_involution_up_to_size_12():
    for n in range(0, 13):
        for lam in partitions_of(n):
            assert lam.conjugate().conjugate() == lam


def test_conjugate_values():
    assert Partition((3, 1)).conjugate() == (2, 1, 1)
    assert Partition((2, 2)).conjugate() == (2, 2)
    assert Partition(()).conjugate() == ()


def test_containment_and_nodes():
    lam = Partition((3, 2))
    assert lam.contains((2, 2)) and not lam.contains((2, 2, 1))
    assert set(lam.remove_node()) == {Partition((2, 2)), Partition((3, 1))}


def test_partition_count_matches_classical_values():
    # p(n) for n = 0..10
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(partitions_of(n)) for n in range(11)] == expected


def test_standard_tableaux_match_hook_formula():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert len(list(standard_tableaux(lam))) == syt_count(lam)


def test_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(((2, 1),))
    with pytest.raises(ValueError):
        StandardTableau(((1, 2), (2,)))


def test_major_index_hook_shape():
    # Shape (m-1, 1): the unique free entry p sits in row 2, maj = p - 1.
    for m in range(3, 9):
        tableaux = list(standard_tableaux((m - 1, 1)))
        assert sorted(t.major_index for t in tableaux) == list(range(1, m))


def test_major_index_row_and_column():
    for m in range(1, 9):
        (row,) = standard_tableaux((m,))
        assert row.major_index == 0
        (col,) = standard_tableaux((1,) * m)
        assert col.major_index == m * (m - 1) // 2


def test_gl_dimension_elementary_shapes():
    from math import comb

    for n in range(2, 7):
        for k in range(1, n + 1):
            assert gl_dimension((1,) * k, n) == comb(n, k)
            assert gl_dimension((k,), n) == comb(n + k - 1, k)
    assert gl_dimension((1, 1, 1), 2) == 0


def test_sp_dimension_small():
    for g in range(1, 6):
        assert sp_dimension((), g) == 1
        assert sp_dimension((1,), g) == 2 * g
    for g in range(2, 6):
        n = 2 * g
        # Natural rep squares: Sym^2 = [2], Lambda^2 = [1,1] + trivial.
        assert sp_dimension((2,), g) == n * (n + 1) // 2
        assert sp_dimension((1, 1), g) == n * (n - 1) // 2 - 1
