"""The free symmetric monoidal category on one generator, fully decidable.

Objects are marked words (:class:`opal.shapes.ZObject`); a morphism exists
only between objects with the same number of marked slots and is a
permutation of those slots, composing by permutation composition.  The
associator and unitors carry identity permutations; the transposition carries
the block transposition.  Slot semantics: a morphism with permutation p sends
slot i of its source to slot p(i) of its target, so tensoring morphisms is the
block sum.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import StructuralError
from .perms import Perm, all_perms, block_sum, transpose_blocks
from .shapes import Z_UNIT, ZObject, tensor_z, z_objects
from .smc import SmcInstance


class HMorphism(NamedTuple):
    source: ZObject
    target: ZObject
    perm: Perm

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "perm": list(self.perm),
        }

    @classmethod
    def from_json(cls, data) -> "HMorphism":
        m = cls(
            ZObject.from_json(data["source"]),
            ZObject.from_json(data["target"]),
            Perm.from_images(data["perm"]),
        )
        if m.source.arity != m.target.arity or m.source.arity != len(m.perm):
            raise StructuralError("endpoint arities and permutation degree disagree")
        return m


class HCategory(SmcInstance):
    name = "H"
    unit = Z_UNIT
    invertible_mors = True

    def __init__(self):
        super().__init__()
        self._hom_cache: dict = {}

    def id(self, a: ZObject) -> HMorphism:
        return HMorphism(a, a, Perm.identity(a.arity))

    def compose(self, f: HMorphism, g: HMorphism) -> HMorphism:
        if g.target != f.source:
            raise StructuralError("endpoint mismatch composing word morphisms")
        return HMorphism(g.source, f.target, f.perm.compose(g.perm))

    def tensor_obj(self, a: ZObject, b: ZObject) -> ZObject:
        return tensor_z(a, b)

    def tensor_mor(self, f: HMorphism, g: HMorphism) -> HMorphism:
        return HMorphism(
            tensor_z(f.source, g.source),
            tensor_z(f.target, g.target),
            block_sum((f.perm, g.perm)),
        )

    def alpha(self, a, b, c) -> HMorphism:
        return HMorphism(
            tensor_z(tensor_z(a, b), c),
            tensor_z(a, tensor_z(b, c)),
            Perm.identity(a.arity + b.arity + c.arity),
        )

    def alpha_inv(self, a, b, c) -> HMorphism:
        return HMorphism(
            tensor_z(a, tensor_z(b, c)),
            tensor_z(tensor_z(a, b), c),
            Perm.identity(a.arity + b.arity + c.arity),
        )

    def tau(self, a, b) -> HMorphism:
        return HMorphism(
            tensor_z(a, b), tensor_z(b, a), transpose_blocks(a.arity, b.arity)
        )

    def runit(self, a) -> HMorphism:
        return HMorphism(tensor_z(a, Z_UNIT), a, Perm.identity(a.arity))

    def runit_inv(self, a) -> HMorphism:
        return HMorphism(a, tensor_z(a, Z_UNIT), Perm.identity(a.arity))

    def mor_inverse(self, f: HMorphism) -> HMorphism:
        return HMorphism(f.target, f.source, f.perm.inverse())

    def objects_upto(self, max_width):
        return z_objects(max_width)

    def hom(self, a: ZObject, b: ZObject):
        if a.arity != b.arity:
            return ()
        key = (a, b)
        hit = self._hom_cache.get(key)
        if hit is None:
            hit = tuple(HMorphism(a, b, p) for p in all_perms(a.arity))
            self._hom_cache[key] = hit
        return hit

    def targets_with_arity(self, arity, max_width):
        cap = max(arity, max_width)
        return tuple(z for z in z_objects(cap) if z.arity == arity)


H = HCategory()


def h_instance() -> HCategory:
    """The shared instance of the free symmetric monoidal category."""
    return H
