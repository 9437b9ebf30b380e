import pytest
from hypothesis import given, strategies as st

from opal.errors import StructuralError
from opal.perms import (Perm, all_perms, block_perm, block_sum, perm_group,
                        transpose_blocks)


def small_perms(max_n=4):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Perm))


def equal_degree_pairs(max_n=4):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.tuples(st.permutations(list(range(1, n + 1))).map(Perm),
                            st.permutations(list(range(1, n + 1))).map(Perm)))


def test_compose_examples():
    assert Perm.identity(3).compose(Perm((2, 3, 1))) == Perm((2, 3, 1))
    # evaluate (s.t)(i) = s(t(i)) by hand for i = 1, 2, 3
    assert Perm((2, 1, 3)).compose(Perm((1, 3, 2))) == Perm((2, 3, 1))


def test_compose_degree_mismatch():
    with pytest.raises(StructuralError):
        Perm((1, 2)).compose(Perm((1,)))


def test_inverse_examples():
    assert Perm.identity(4).inverse() == Perm.identity(4)
    assert Perm((2, 1)).inverse() == Perm((2, 1))
    # solve p(q(i)) = i
    assert Perm((2, 3, 1)).inverse() == Perm((3, 1, 2))


def test_act_inverse_examples():
    assert Perm((2, 1)).act_inverse(("a", "b")) == ("b", "a")
    assert Perm.identity(3).act_inverse((1, 2, 3)) == (1, 2, 3)
    assert Perm((2, 3, 1)).act_inverse(("a", "b", "c")) == ("b", "c", "a")
    with pytest.raises(StructuralError):
        Perm((1, 2)).act_inverse(("a",))


@given(equal_degree_pairs())
def test_act_inverse_is_right_action(pair):
    s, t = pair
    xs = tuple(range(len(s)))
    assert s.compose(t).act_inverse(xs) == t.act_inverse(s.act_inverse(xs))


@given(small_perms())
def test_inverse_law(p):
    assert p.compose(p.inverse()) == Perm.identity(len(p))
    assert p.inverse().compose(p) == Perm.identity(len(p))


def test_compose_associative_exhaustive():
    for n in range(4):
        for s in perm_group(n):
            for t in perm_group(n):
                for u in perm_group(n):
                    assert s.compose(t).compose(u) == s.compose(t.compose(u))


def test_block_sum_examples():
    assert block_sum(()) == Perm()
    assert block_sum((Perm((2, 1)), Perm((1,)))) == Perm((2, 1, 3))
    assert block_sum((Perm.identity(2), Perm.identity(3))) == Perm.identity(5)


def test_block_sum_associative():
    parts = (Perm((2, 1)), Perm((1,)), Perm((3, 1, 2)))
    assert block_sum((block_sum(parts[:2]), parts[2])) == block_sum(parts)
    assert block_sum((parts[0], block_sum(parts[1:]))) == block_sum(parts)
    assert block_sum((Perm(), parts[0])) == parts[0]


def test_block_perm_examples():
    assert block_perm(Perm.identity(3), (2, 1, 4)) == Perm.identity(7)
    # move block {1} past block {2,3}: enumerate the three images
    assert block_perm(Perm((2, 1)), (1, 2)) == Perm((3, 1, 2))
    for p in perm_group(4):
        assert block_perm(p, (1, 1, 1, 1)) == p
    with pytest.raises(StructuralError):
        block_perm(Perm((2, 1)), (1,))


def test_block_perm_reorders_blocks():
    # the defining property: applied to a concatenation, whole blocks move
    sizes = (2, 1, 3)
    xs = ("a1", "a2", "b1", "c1", "c2", "c3")
    blocks = (("a1", "a2"), ("b1",), ("c1", "c2", "c3"))
    for p in perm_group(3):
        permuted_sizes = tuple(sizes[p(t) - 1] for t in range(1, 4))
        rho = block_perm(p, permuted_sizes)
        expected = tuple(x for t in range(1, 4) for x in blocks[p(t) - 1])
        assert rho.act_inverse(xs) == expected


def test_transpose_blocks_identities():
    for n in range(4):
        for m in range(4):
            if n + m <= 6:
                assert transpose_blocks(n, m).compose(transpose_blocks(m, n)) \
                    == Perm.identity(n + m)
    assert transpose_blocks(1, 2) == block_perm(Perm((2, 1)), (1, 2))


def test_transposition_block_identity():
    for n in range(3):
        for m in range(3):
            for t in range(3):
                lhs = block_sum((Perm.identity(m), transpose_blocks(n, t))).compose(
                    block_sum((transpose_blocks(n, m), Perm.identity(t))))
                assert lhs == transpose_blocks(n, m + t)


def test_from_images_validates():
    with pytest.raises(StructuralError):
        Perm.from_images([1, 1])
    with pytest.raises(StructuralError):
        Perm.from_images([0, 1])
    assert Perm.from_images([2, 1]) == Perm((2, 1))


def test_all_perms_count():
    assert len(list(all_perms(0))) == 1
    assert len(list(all_perms(4))) == 24
