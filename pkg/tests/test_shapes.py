import math

import pytest

from opal.errors import StructuralError
from opal.shapes import (LEAF, Z_ATOM, Z_UNIT, ZObject, enumerate_parens,
                         gamma_z, tensor_z, tree_width, z_objects)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_paren_counts_against_catalan():
    assert len(enumerate_parens(1)) == 1
    assert len(enumerate_parens(2)) == 1
    assert len(enumerate_parens(4)) == 5
    for k in range(1, 8):
        assert len(enumerate_parens(k)) == catalan(k - 1)
    assert enumerate_parens(0) == ()


def test_paren_enumeration_properties():
    for k in range(1, 6):
        trees = enumerate_parens(k)
        assert len(set(trees)) == len(trees)
        assert all(tree_width(t) == k for t in trees)


def test_tensor_with_unit_keeps_marks():
    z = ZObject((LEAF, LEAF), (1,))
    out = tensor_z(z, Z_UNIT)
    assert out.marks == (1,)
    assert out.width == z.width + 1


def test_tensor_atoms():
    out = tensor_z(Z_ATOM, Z_ATOM)
    assert out == ZObject((LEAF, LEAF), (1, 2))
    assert out.arity == 2 and out.width == 2


def test_gamma_unit_substitution():
    z = ZObject(((LEAF, LEAF), LEAF), (1, 3))
    assert gamma_z(Z_ATOM, (z,)) == z
    assert gamma_z(z, (Z_ATOM, Z_ATOM)) == z


def test_gamma_bookkeeping():
    base = ZObject(((LEAF, LEAF), LEAF), (1, 3))  # arity 2, width 3
    p1 = Z_ATOM  # width 1
    p2 = ZObject((LEAF, LEAF), (2,))  # width 2, arity 1
    out = gamma_z(base, (p1, p2))
    assert out.width == 3 - 2 + 1 + 2 == 4
    assert out.arity == p1.arity + p2.arity
    # marks land at the grafted positions: slot 1 at leaf 1, slot 2's mark at
    # offset 2 within the part grafted at leaf 3
    assert out.marks == (1, 4)


def test_gamma_arity_mismatch():
    with pytest.raises(StructuralError):
        gamma_z(Z_ATOM, ())


def test_gamma_associative_exhaustive_small():
    pool = [z for z in z_objects(3) if z.arity <= 2]
    small = [z for z in pool if z.width <= 2]
    for base in pool:
        if base.arity == 0 or base.width > 3:
            continue
        import itertools
        for parts in itertools.product(small, repeat=base.arity):
            mid = gamma_z(base, parts)
            total = sum(p.arity for p in parts)
            if total > 2:
                continue
            for subs in itertools.product(small, repeat=total):
                lhs = gamma_z(mid, subs)
                pos = 0
                regrouped = []
                for p in parts:
                    regrouped.append(gamma_z(p, subs[pos:pos + p.arity]))
                    pos += p.arity
                assert lhs == gamma_z(base, tuple(regrouped))


def test_tensor_gamma_interchange():
    a = ZObject((LEAF, LEAF), (1, 2))
    b = Z_ATOM
    p = ZObject((LEAF, LEAF), (2,))
    lhs = tensor_z(gamma_z(a, (p, p)), gamma_z(b, (p,)))
    rhs = gamma_z(tensor_z(a, b), (p, p, p))
    assert lhs == rhs


def test_json_round_trip():
    z = ZObject(((LEAF, LEAF), LEAF), (1, 3))
    data = z.to_json()
    assert data["tree"] == [["leaf", "leaf"], "leaf"]
    assert data["width"] == 3
    assert ZObject.from_json(data) == z
    with pytest.raises(StructuralError):
        ZObject.from_json({"tree": "leaf", "marks": [2]})
    with pytest.raises(StructuralError):
        ZObject.from_json({"tree": "leaf", "marks": [1], "width": 5})


def test_z_objects_enumeration():
    objs = z_objects(2)
    assert len(objs) == 6
    assert len(set(objs)) == 6
    assert Z_UNIT in objs and Z_ATOM in objs
