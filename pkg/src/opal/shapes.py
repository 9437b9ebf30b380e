"""Complete binary parenthesizations with marked slots, and their grafting.

A tree is either the string ``"leaf"`` or a pair of trees.  A :class:`ZObject`
pairs a tree with an increasing tuple of marked leaf positions; the marked
slots are where arguments get inserted, the unmarked ones are filled by the
unit.  ``gamma_z`` grafts a tuple of marked words into the marked slots of a
base word, which is the substitution underlying every composite recipe in the
package.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, NamedTuple, Sequence, Tuple

from .errors import StructuralError

LEAF = "leaf"


def is_leaf(tree) -> bool:
    return tree == LEAF


@functools.lru_cache(maxsize=None)
def tree_width(tree) -> int:
    if tree == LEAF:
        return 1
    return tree_width(tree[0]) + tree_width(tree[1])


@functools.lru_cache(maxsize=None)
def enumerate_parens(k: int) -> tuple:
    """All complete parenthesizations of k letters; empty for k <= 0."""
    if k <= 0:
        return ()
    if k == 1:
        return (LEAF,)
    out = []
    for i in range(1, k):
        for left in enumerate_parens(i):
            for right in enumerate_parens(k - i):
                out.append((left, right))
    return tuple(out)


def _check_tree(tree):
    if tree == LEAF:
        return tree
    if isinstance(tree, (tuple, list)) and len(tree) == 2:
        return (_check_tree(tree[0]), _check_tree(tree[1]))
    raise StructuralError(f"malformed parenthesization: {tree!r}")


def _tree_json(tree):
    if tree == LEAF:
        return LEAF
    return [_tree_json(tree[0]), _tree_json(tree[1])]


class ZObject(NamedTuple):
    """A parenthesized word together with its marked slot positions.

    ``arity`` counts marked slots, ``width`` all slots.  There is no word of
    width 0; the unit is the single unmarked leaf.
    """

    tree: object
    marks: Tuple[int, ...]

    @property
    def width(self) -> int:
        return tree_width(self.tree)

    @property
    def arity(self) -> int:
        return len(self.marks)

    @classmethod
    def make(cls, tree, marks) -> "ZObject":
        z = cls(_check_tree(tree), tuple(int(m) for m in marks))
        k = z.width
        if list(z.marks) != sorted(set(z.marks)) or any(
            m < 1 or m > k for m in z.marks
        ):
            raise StructuralError(f"marks {list(z.marks)} invalid for width {k}")
        return z

    def to_json(self) -> dict:
        return {
            "tree": _tree_json(self.tree),
            "marks": list(self.marks),
            "width": self.width,
        }

    @classmethod
    def from_json(cls, data) -> "ZObject":
        if not isinstance(data, dict) or "tree" not in data or "marks" not in data:
            raise StructuralError(f"expected a word object, got {data!r}")
        z = cls.make(data["tree"], data["marks"])
        if "width" in data and int(data["width"]) != z.width:
            raise StructuralError(
                f"declared width {data['width']} != actual width {z.width}"
            )
        return z


Z_UNIT = ZObject(LEAF, ())
Z_ATOM = ZObject(LEAF, (1,))


def tensor_z(a: ZObject, b: ZObject) -> ZObject:
    """Concatenate two marked words; marks of ``b`` shift past ``a``'s width."""
    k = a.width
    return ZObject((a.tree, b.tree), a.marks + tuple(k + m for m in b.marks))


def gamma_z(base: ZObject, parts: Sequence[ZObject]) -> ZObject:
    """Graft ``parts`` into the marked slots of ``base``, in slot order.

    Unmarked leaves of the base are kept; the result's marks are the parts'
    marks shifted to their new positions, so arities add and the width is
    ``base.width - base.arity + sum(part widths)``.
    """
    if len(parts) != base.arity:
        raise StructuralError(
            f"substitution needs {base.arity} parts, got {len(parts)}"
        )
    marked = set(base.marks)
    parts_iter = iter(parts)
    out_marks: list[int] = []
    state = {"orig": 0, "offset": 0}

    def build(tree):
        if tree == LEAF:
            state["orig"] += 1
            if state["orig"] in marked:
                part = next(parts_iter)
                out_marks.extend(state["offset"] + m for m in part.marks)
                state["offset"] += part.width
                return part.tree
            state["offset"] += 1
            return LEAF
        return (build(tree[0]), build(tree[1]))

    tree = build(base.tree)
    return ZObject(tree, tuple(out_marks))


def mark_subsets(k: int) -> Iterator[Tuple[int, ...]]:
    for n in range(k + 1):
        yield from itertools.combinations(range(1, k + 1), n)


@functools.lru_cache(maxsize=None)
def z_objects(max_width: int) -> tuple:
    """All marked words of width <= max_width, in a fixed deterministic order."""
    out = []
    for k in range(1, max_width + 1):
        for tree in enumerate_parens(k):
            for marks in mark_subsets(k):
                out.append(ZObject(tree, marks))
    return tuple(out)
