"""Lax monoidal functors, their structure-map towers, and the translation
to and from multicategory maps.

A lax functor carries a unit comparison ``eta`` and a binary comparison
``xi``; the n-ary comparison tower is built by induction along the
left-nested default recipe.  Restricting a multicategory map to low arities
recovers the lax data, and the two translations are mutually inverse on the
instances with decidable equality, which the round-trip suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import StructuralError
from .hcat import H, HMorphism
from .multicat import MultiArrow, Multifunctor, UnderlyingMulticategory, underlying
from .operad_y import (DEFAULT_KAPPA, Y_M, Y_ONE, Y_ZERO, default_kappa,
                       gamma_y)
from .perms import Perm, block_perm
from .shapes import ZObject, gamma_z
from .smc import SmcInstance, eval_can_iso, eval_obj, left_nested_obj


@dataclass(frozen=True)
class LaxSMF:
    """A lax symmetric monoidal functor between two instances.

    ``eta`` is the unit comparison (target unit to image of source unit) and
    ``xi(a, b)`` the product comparison ``F(a) + F(b) -> F(a + b)``.  Strong
    functors also carry the inverses; strict ones have identity comparisons.
    """

    name: str
    source: SmcInstance
    target: SmcInstance
    obj_map: Callable
    mor_map: Callable
    eta: object
    xi: Callable
    eta_inv: object = None
    xi_inv: Optional[Callable] = None
    strict: bool = False

    def on_object(self, a):
        return self.obj_map(a)

    def on_morphism(self, f):
        return self.mor_map(f)


def identity_lax(inst: SmcInstance) -> LaxSMF:
    ident = lambda x: x
    return LaxSMF(
        name=f"id_{inst.name}",
        source=inst,
        target=inst,
        obj_map=ident,
        mor_map=ident,
        eta=inst.id(inst.unit),
        xi=lambda a, b: inst.id(inst.tensor_obj(a, b)),
        eta_inv=inst.id(inst.unit),
        xi_inv=lambda a, b: inst.id(inst.tensor_obj(a, b)),
        strict=True,
    )


def inflate_strict(word: ZObject) -> LaxSMF:
    """The strict endofunctor of the one-generator instance sending the
    generator slot to ``word`` (every marked slot blows up to a copy)."""
    m = word.arity

    def obj_map(z: ZObject) -> ZObject:
        return gamma_z(z, (word,) * z.arity)

    def mor_map(f: HMorphism) -> HMorphism:
        return HMorphism(
            obj_map(f.source),
            obj_map(f.target),
            block_perm(f.perm, (m,) * len(f.perm)),
        )

    return LaxSMF(
        name=f"inflate[{word.width}:{m}]",
        source=H,
        target=H,
        obj_map=obj_map,
        mor_map=mor_map,
        eta=H.id(H.unit),
        xi=lambda a, b: H.id(H.tensor_obj(obj_map(a), obj_map(b))),
        eta_inv=H.id(H.unit),
        xi_inv=lambda a, b: H.id(H.tensor_obj(obj_map(a), obj_map(b))),
        strict=True,
    )


PAD_RECIPE = gamma_y(Y_M, (Y_ZERO, Y_ONE))  # one argument, padded as e + x


def pad_strong(inst: SmcInstance = H) -> LaxSMF:
    """The strong-but-not-strict endofunctor tensoring the unit on the left.

    All structure maps are coherence isomorphisms between padded recipes.
    """

    def obj_map(a):
        return inst.tensor_obj(inst.unit, a)

    def mor_map(f):
        return inst.tensor_mor(inst.id(inst.unit), f)

    pad2 = gamma_y(default_kappa(2), (PAD_RECIPE, PAD_RECIPE))
    padded_pair = gamma_y(PAD_RECIPE, (Y_M,))
    padded_unit = gamma_y(PAD_RECIPE, (Y_ZERO,))

    def xi(a, b):
        return eval_can_iso(inst, pad2, padded_pair, (a, b))

    def xi_inv(a, b):
        return eval_can_iso(inst, padded_pair, pad2, (a, b))

    return LaxSMF(
        name=f"pad_{inst.name}",
        source=inst,
        target=inst,
        obj_map=obj_map,
        mor_map=mor_map,
        eta=eval_can_iso(inst, Y_ZERO, padded_unit, ()),
        xi=xi,
        eta_inv=eval_can_iso(inst, padded_unit, Y_ZERO, ()),
        xi_inv=xi_inv,
        strict=False,
    )


def compose_lax(g: LaxSMF, f: LaxSMF) -> LaxSMF:
    """Composite lax functor, with pasted structure maps."""
    if f.target is not g.source:
        raise StructuralError("lax functors do not compose: instances differ")
    t = g.target

    def xi(a, b):
        return t.compose(
            g.mor_map(f.xi(a, b)),
            g.xi(f.obj_map(a), f.obj_map(b)),
        )

    xi_inv = None
    if f.xi_inv is not None and g.xi_inv is not None:
        def xi_inv(a, b):  # noqa: F811
            return t.compose(
                g.xi_inv(f.obj_map(a), f.obj_map(b)),
                g.mor_map(f.xi_inv(a, b)),
            )

    eta = t.compose(g.mor_map(f.eta), g.eta)
    eta_inv = None
    if f.eta_inv is not None and g.eta_inv is not None:
        eta_inv = t.compose(g.eta_inv, g.mor_map(f.eta_inv))
    return LaxSMF(
        name=f"{g.name}.{f.name}",
        source=f.source,
        target=g.target,
        obj_map=lambda a: g.obj_map(f.obj_map(a)),
        mor_map=lambda m: g.mor_map(f.mor_map(m)),
        eta=eta,
        xi=xi,
        eta_inv=eta_inv,
        xi_inv=xi_inv,
        strict=f.strict and g.strict,
    )


_TOWER_CACHE: dict = {}


def xi_tower(F: LaxSMF, xs: tuple):
    """The n-ary comparison: left-nested tensor of images to image of tensor.

    Base cases are the unit comparison and the identity; each further stage
    tensors the previous one with an identity and follows with ``xi``.
    """
    xs = tuple(xs)
    key = (id(F), xs)
    hit = _TOWER_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(xs)
    if n == 0:
        out = F.eta
    elif n == 1:
        out = F.target.id(F.obj_map(xs[0]))
    else:
        head = xs[:-1]
        last = xs[-1]
        head_obj = left_nested_obj(F.source, head)
        prev = xi_tower(F, head)
        step = F.xi(head_obj, last)
        out = F.target.compose(
            step, F.target.tensor_mor(prev, F.target.id(F.obj_map(last)))
        )
    _TOWER_CACHE.setdefault(F, None)  # keep the functor alive while cached
    _TOWER_CACHE[key] = out
    return out


def xi_tower_inv(F: LaxSMF, xs: tuple):
    """Inverse of the comparison tower; only for strong functors."""
    if F.xi_inv is None or F.eta_inv is None:
        raise StructuralError(f"{F.name} is not strong: no inverse comparisons")
    xs = tuple(xs)
    n = len(xs)
    if n == 0:
        return F.eta_inv
    if n == 1:
        return F.target.id(F.obj_map(xs[0]))
    head = xs[:-1]
    last = xs[-1]
    head_obj = left_nested_obj(F.source, head)
    prev = xi_tower_inv(F, head)
    step = F.xi_inv(head_obj, last)
    return F.target.compose(
        F.target.tensor_mor(prev, F.target.id(F.obj_map(last))), step
    )


def check_lax_coherence(F: LaxSMF, max_width: int = 2, budget: int = 400) -> list:
    """Bounded check of the unit, associativity, and transposition squares.

    Returns a list of failure descriptions; empty means no problem found.
    """
    C, D = F.source, F.target
    failures = []
    pool = list(C.objects_upto(max_width))

    def record(kind, objs):
        failures.append({"square": kind, "objects": [repr(o) for o in objs]})

    seen = 0
    for a in pool:
        fa = F.obj_map(a)
        lhs = D.compose(F.mor_map(C.runit(a)),
                        D.compose(F.xi(a, C.unit),
                                  D.tensor_mor(D.id(fa), F.eta)))
        if lhs != D.runit(fa):
            record("unit", [a])
        seen += 1
        if seen >= budget:
            break
    seen = 0
    for a in pool:
        for b in pool:
            fa, fb = F.obj_map(a), F.obj_map(b)
            lhs = D.compose(F.mor_map(C.tau(a, b)), F.xi(a, b))
            rhs = D.compose(F.xi(b, a), D.tau(fa, fb))
            if lhs != rhs:
                record("transposition", [a, b])
            seen += 1
            if seen >= budget:
                break
        if seen >= budget:
            break
    seen = 0
    for a in pool:
        for b in pool:
            for c in pool:
                fa, fb, fc = F.obj_map(a), F.obj_map(b), F.obj_map(c)
                lhs = D.compose(
                    F.mor_map(C.alpha(a, b, c)),
                    D.compose(F.xi(C.tensor_obj(a, b), c),
                              D.tensor_mor(F.xi(a, b), D.id(fc))))
                rhs = D.compose(
                    F.xi(a, C.tensor_obj(b, c)),
                    D.compose(D.tensor_mor(D.id(fa), F.xi(b, c)),
                              D.alpha(fa, fb, fc)))
                if lhs != rhs:
                    record("associativity", [a, b, c])
                seen += 1
                if seen >= budget:
                    break
            if seen >= budget:
                break
        if seen >= budget:
            break
    return failures


def lax_to_multifunctor(F: LaxSMF, validate: bool = True) -> Multifunctor:
    """Extend a lax functor to the underlying multicategories (default family).

    Arrows map by applying the functor to the payload and precomposing with
    the comparison tower at the source tuple.
    """
    if validate:
        problems = check_lax_coherence(F)
        if problems:
            raise StructuralError(
                f"lax functor {F.name} fails coherence: {problems[:2]}"
            )
    uc = underlying(F.source, DEFAULT_KAPPA)
    ud = underlying(F.target, DEFAULT_KAPPA)

    def on_arrow(arrow: MultiArrow) -> MultiArrow:
        payload = F.target.compose(
            F.mor_map(arrow.payload), xi_tower(F, arrow.source)
        )
        return MultiArrow(
            tuple(F.obj_map(x) for x in arrow.source),
            F.obj_map(arrow.target),
            payload,
        )

    return Multifunctor(f"U({F.name})", uc, ud, F.obj_map, on_arrow)


def multifunctor_to_lax(Fh: Multifunctor, name: str | None = None) -> LaxSMF:
    """Restrict a multicategory map between default-family underlyings.

    The functor is the arrow action at arity one; the unit comparison is the
    image of the nullary identity arrow and the product comparison the image
    of the binary identity arrow.
    """
    C = Fh.source.inst
    D = Fh.target.inst

    def mor_map(f):
        arrow = MultiArrow((f.source,), f.target, f)
        return Fh.on_arrow(arrow).payload

    eta = Fh.on_arrow(MultiArrow((), C.unit, C.id(C.unit))).payload

    def xi(a, b):
        ab = C.tensor_obj(a, b)
        return Fh.on_arrow(MultiArrow((a, b), ab, C.id(ab))).payload

    return LaxSMF(
        name=name or f"lax({Fh.name})",
        source=C,
        target=D,
        obj_map=Fh.obj_map,
        mor_map=mor_map,
        eta=eta,
        xi=xi,
    )
