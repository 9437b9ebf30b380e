"""Permutations of {1, ..., n} and the block calculus used by equivariance laws.

Conventions, fixed once for the whole package:

* a permutation stores its image sequence, so ``p[i - 1]`` is p(i);
* composition is function composition: ``p.compose(q)`` sends i to p(q(i));
* the tuple action is ``p.act_inverse(xs) == (xs[p(1)-1], ..., xs[p(n)-1])``,
  which is a right action:
  ``p.compose(q).act_inverse(xs) == q.act_inverse(p.act_inverse(xs))``.

Every reordering elsewhere in the package is phrased through ``act_inverse``,
so the forward-vs-inverse choice lives in exactly one place.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence

from .errors import StructuralError


class Perm(tuple):
    """A permutation of {1, ..., n} as its image tuple (1-based).

    The empty tuple is the unique permutation of degree 0.  Constructing via
    ``Perm(...)`` does not validate; use :meth:`from_images` for untrusted
    input.
    """

    __slots__ = ()

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Perm":
        p = cls(int(i) for i in images)
        if sorted(p) != list(range(1, len(p) + 1)):
            raise StructuralError(f"not a permutation of 1..{len(p)}: {list(p)}")
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: "Perm") -> "Perm":
        """self after other: ``compose(p, q)(i) == p(q(i))``."""
        if len(self) != len(other):
            raise StructuralError(
                f"degree mismatch composing permutations: {len(self)} vs {len(other)}"
            )
        return Perm(self[j - 1] for j in other)

    def inverse(self) -> "Perm":
        images = [0] * len(self)
        for i, j in enumerate(self, start=1):
            images[j - 1] = i
        return Perm(images)

    def act_inverse(self, xs: Sequence) -> tuple:
        """Reorder a tuple: entry i of the result is ``xs[self(i) - 1]``."""
        if len(xs) != len(self):
            raise StructuralError(
                f"cannot reorder {len(xs)} values by a degree-{len(self)} permutation"
            )
        return tuple(xs[j - 1] for j in self)

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self, start=1))

    def to_json(self) -> list:
        return list(self)


def block_sum(parts: Iterable[Perm]) -> Perm:
    """Concatenate permutations, each acting inside its own contiguous block."""
    images: list[int] = []
    offset = 0
    for p in parts:
        images.extend(offset + j for j in p)
        offset += len(p)
    return Perm(images)


def block_perm(p: Perm, sizes: Sequence[int]) -> Perm:
    """Permute contiguous blocks of the given sizes the way ``p`` permutes indices.

    ``sizes[t - 1]`` is the size of the t-th block on the input side; input
    block t lands on output block p(t), order inside a block preserved.  With
    all sizes 1 this is ``p`` itself, and ``block_perm(swap, (n, m))`` is the
    transposition moving an n-block past an m-block.
    """
    if len(sizes) != len(p):
        raise StructuralError(
            f"block sizes {list(sizes)} do not match degree {len(p)}"
        )
    inv = p.inverse()
    out_sizes = [sizes[inv(s) - 1] for s in range(1, len(p) + 1)]
    starts = [0]
    for w in out_sizes[:-1]:
        starts.append(starts[-1] + w)
    images: list[int] = []
    for t, size in enumerate(sizes, start=1):
        base = starts[p(t) - 1]
        images.extend(base + u for u in range(1, size + 1))
    return Perm(images)


def transpose_blocks(n: int, m: int) -> Perm:
    """The permutation moving a leading block of n letters past a block of m."""
    return Perm(itertools.chain(range(m + 1, m + n + 1), range(1, m + 1)))


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of degree n, in lexicographic image order."""
    return iter(perm_group(n))


@functools.lru_cache(maxsize=None)
def perm_group(n: int) -> tuple:
    """The full degree-n symmetric group as a tuple, lexicographically ordered."""
    return tuple(
        Perm(images) for images in itertools.permutations(range(1, n + 1))
    )
