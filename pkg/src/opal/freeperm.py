"""The free permutative category on a multicategory.

Objects are finite tuples of the multicategory's objects; a morphism is a
plain reindexing function together with one multimorphism per target slot,
whose source is the function's fiber taken in increasing index order.  The
tensor is concatenation, the unit the empty tuple, and the associator and
unitors are identities; only the transposition carries content.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Sequence, Tuple

from .errors import StructuralError
from .perms import Perm, transpose_blocks
from .smc import SmcInstance


class LMorphism(NamedTuple):
    source: tuple
    target: tuple
    f: Tuple[int, ...]
    components: tuple

    def to_json(self) -> dict:
        return {
            "f": list(self.f),
            "components": [c.to_json() for c in self.components],
        }


def _level_of(objs):
    """Total arity of a tuple of objects, or None when they carry no arity."""
    try:
        return sum(o.arity for o in objs)
    except (AttributeError, TypeError):
        return None


def _fibers(f: Tuple[int, ...], n: int):
    """The f-preimages of 1..n, each in increasing index order."""
    out = [[] for _ in range(n)]
    for r, s in enumerate(f, start=1):
        if s < 1 or s > n:
            raise StructuralError(f"reindexing value {s} outside 1..{n}")
        out[s - 1].append(r)
    return [tuple(fib) for fib in out]


class FreePermutative(SmcInstance):
    """Tuples of multicategory objects under concatenation."""

    invertible_mors = False

    def __init__(self, m):
        super().__init__()
        self.m = m
        self.name = f"L({getattr(m, 'name', 'M')})"
        self._hom_cache: dict = {}

    unit = ()

    def validate_mor(self, mor: LMorphism) -> LMorphism:
        n = len(mor.target)
        if len(mor.f) != len(mor.source):
            raise StructuralError("reindexing length does not match source length")
        fibers = _fibers(mor.f, n)
        if len(mor.components) != n:
            raise StructuralError("one component per target slot is required")
        for fib, comp, tgt in zip(fibers, mor.components, mor.target):
            expected = tuple(mor.source[r - 1] for r in fib)
            if comp.source != expected or comp.target != tgt:
                raise StructuralError("component endpoints do not match the fibers")
        return mor

    def id(self, a: tuple) -> LMorphism:
        return LMorphism(
            a, a,
            tuple(range(1, len(a) + 1)),
            tuple(self.m.identity(x) for x in a),
        )

    def compose(self, g: LMorphism, f: LMorphism) -> LMorphism:
        if f.target != g.source:
            raise StructuralError("endpoint mismatch composing list morphisms")
        j = len(f.source)
        n = len(f.target)
        p = len(g.target)
        gf = tuple(g.f[s - 1] for s in f.f)
        f_fibers = _fibers(f.f, n)
        g_fibers = _fibers(g.f, p)
        gf_fibers = _fibers(gf, p)
        comps = []
        for t in range(1, p + 1):
            slots = g_fibers[t - 1]
            inner = tuple(f.components[s - 1] for s in slots)
            big = self.m.gamma(g.components[t - 1], inner)
            chunked = [r for s in slots for r in f_fibers[s - 1]]
            fiber = gf_fibers[t - 1]
            rho = Perm(chunked.index(r) + 1 for r in fiber)
            comps.append(self.m.sigma_star(big, rho))
        return LMorphism(f.source, g.target, gf, tuple(comps))

    def tensor_obj(self, a: tuple, b: tuple) -> tuple:
        return a + b

    def tensor_mor(self, f: LMorphism, g: LMorphism) -> LMorphism:
        shift = len(f.target)
        return LMorphism(
            f.source + g.source,
            f.target + g.target,
            f.f + tuple(shift + s for s in g.f),
            f.components + g.components,
        )

    def alpha(self, a, b, c) -> LMorphism:
        return self.id(a + b + c)

    def alpha_inv(self, a, b, c) -> LMorphism:
        return self.id(a + b + c)

    def tau(self, a, b) -> LMorphism:
        target = b + a
        return LMorphism(
            a + b, target,
            tuple(transpose_blocks(len(a), len(b))),
            tuple(self.m.identity(x) for x in target),
        )

    def runit(self, a) -> LMorphism:
        return self.id(a)

    def runit_inv(self, a) -> LMorphism:
        return self.id(a)

    # enumeration ---------------------------------------------------------
    def objects_upto(self, max_width):
        pool = list(self.m.object_pool(max_width))
        out = [()]
        for n in range(1, max_width + 1):
            out.extend(itertools.product(pool, repeat=n))
        return tuple(out)

    def hom(self, xs: tuple, ys: tuple):
        hit = self._hom_cache.get((xs, ys))
        if hit is not None:
            return hit
        if _level_of(xs) is not None and _level_of(xs) != _level_of(ys):
            self._hom_cache[(xs, ys)] = ()
            return ()
        n = len(ys)
        out = []
        if n == 0:
            if len(xs) == 0:
                out.append(LMorphism((), (), (), ()))
            return tuple(out)
        for f in itertools.product(range(1, n + 1), repeat=len(xs)):
            fibers = _fibers(f, n)
            per_slot = []
            for fib, y in zip(fibers, ys):
                sources = tuple(xs[r - 1] for r in fib)
                per_slot.append(tuple(self.m.hom(sources, y)))
            if any(not opts for opts in per_slot):
                continue
            for comps in itertools.product(*per_slot):
                out.append(LMorphism(xs, ys, f, comps))
        result = tuple(out)
        self._hom_cache[(xs, ys)] = result
        return result


def free_permutative(m) -> FreePermutative:
    return FreePermutative(m)
