"""The unit, weak counit, and strictification checks.

The free permutative category over an underlying multicategory receives the
original instance's tuples; the counit evaluates a list by the left-nested
recipe and a list morphism by sorting its source into reindexing fibers,
regrouping, and applying the recipe to the components.  The unit embeds
objects as singleton lists.  Both adjunction triangles commute exactly; the
counit is natural only up to the comparison-tower cell, which is the
2-dimensional content checked here.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .config import SuiteConfig
from .errors import StructuralError
from .freeperm import FreePermutative, LMorphism, free_permutative
from .functors import LaxSMF, compose_lax, lax_to_multifunctor, xi_tower, xi_tower_inv
from .multicat import (MultiArrow, Multifunctor, UnderlyingMulticategory,
                       _as_json, source_tuples, tuple_level, underlying)
from .operad_y import DEFAULT_KAPPA, Y_M, act_y, default_kappa, gamma_y
from .perms import Perm
from .report import LawResult, SuiteResult, run_law
from .smc import SmcInstance, eval_can_iso, eval_obj, eval_obj_mor


@functools.lru_cache(maxsize=None)
def _grouped_recipe(n: int, sizes: tuple) -> object:
    return gamma_y(default_kappa(n), tuple(default_kappa(k) for k in sizes))


def unit_eta(m, lm: FreePermutative | None = None) -> Multifunctor:
    """Embed a multicategory into the underlying of its free permutative category.

    Objects become singleton lists; an arrow becomes the list morphism that
    collapses all of its sources into the one target slot.
    """
    lm = lm or free_permutative(m)
    ulm = underlying(lm, DEFAULT_KAPPA)

    def on_arrow(arrow: MultiArrow) -> MultiArrow:
        j = len(arrow.source)
        payload = LMorphism(
            tuple(arrow.source), (arrow.target,), (1,) * j, (arrow,)
        )
        return MultiArrow(
            tuple((x,) for x in arrow.source), (arrow.target,), payload
        )

    return Multifunctor("unit", m, ulm, lambda a: (a,), on_arrow)


def counit_eps(inst: SmcInstance, drop_sort: bool = False) -> LaxSMF:
    """The evaluation functor from the free permutative category back to the
    instance, strong monoidal via the regrouping isomorphisms.

    ``drop_sort`` is a deliberate fault for mutation testing: it skips the
    fiber-sorting isomorphism, so list morphisms with interleaved fibers
    evaluate wrongly (or fail to compose).
    """
    m = underlying(inst, DEFAULT_KAPPA)
    lm = free_permutative(m)
    iso_cache: dict = {}

    def obj_map(xs: tuple):
        return eval_obj(inst, default_kappa(len(xs)), xs)

    def mor_map(mor: LMorphism):
        xs, ys = mor.source, mor.target
        j, n = len(xs), len(ys)
        out = iso_cache.get((mor.f, xs, n))
        if out is None:
            fibers = [[] for _ in range(n)]
            for r, s in enumerate(mor.f, start=1):
                fibers[s - 1].append(r)
            chunked_idx = [r for fib in fibers for r in fib]
            chunk_objs = tuple(xs[r - 1] for r in chunked_idx)
            kj = default_kappa(j)
            out = eval_can_iso(
                inst, kj,
                _grouped_recipe(n, tuple(len(fib) for fib in fibers)),
                chunk_objs,
            )
            if not drop_sort:
                sorting = eval_can_iso(
                    inst, act_y(kj, Perm(chunked_idx)), kj, chunk_objs
                )
                out = inst.compose(out, sorting)
            iso_cache[(mor.f, xs, n)] = out
        tens = eval_obj_mor(
            inst, default_kappa(n), tuple(c.payload for c in mor.components)
        )
        return inst.compose(tens, out)

    def xi(a_list, b_list):
        flat = tuple(a_list) + tuple(b_list)
        split = gamma_y(Y_M, (default_kappa(len(a_list)), default_kappa(len(b_list))))
        return eval_can_iso(inst, split, default_kappa(len(flat)), flat)

    def xi_inv(a_list, b_list):
        flat = tuple(a_list) + tuple(b_list)
        split = gamma_y(Y_M, (default_kappa(len(a_list)), default_kappa(len(b_list))))
        return eval_can_iso(inst, default_kappa(len(flat)), split, flat)

    return LaxSMF(
        name=f"counit_{inst.name}",
        source=lm,
        target=inst,
        obj_map=obj_map,
        mor_map=mor_map,
        eta=inst.id(inst.unit),
        xi=xi,
        eta_inv=inst.id(inst.unit),
        xi_inv=xi_inv,
        strict=False,
    )


def free_permutative_functor(F: Multifunctor,
                             lm_source: FreePermutative | None = None,
                             lm_target: FreePermutative | None = None) -> LaxSMF:
    """Lift a multicategory map to the strict map of free permutative categories."""
    lm_s = lm_source or free_permutative(F.source)
    lm_t = lm_target or free_permutative(F.target)

    def obj_map(xs):
        return tuple(F.obj_map(x) for x in xs)

    def mor_map(mor: LMorphism):
        return LMorphism(
            obj_map(mor.source),
            obj_map(mor.target),
            mor.f,
            tuple(F.on_arrow(c) for c in mor.components),
        )

    return LaxSMF(
        name=f"L({F.name})",
        source=lm_s,
        target=lm_t,
        obj_map=obj_map,
        mor_map=mor_map,
        eta=lm_t.id(()),
        xi=lambda a, b: lm_t.id(obj_map(a) + obj_map(b)),
        eta_inv=lm_t.id(()),
        xi_inv=lambda a, b: lm_t.id(obj_map(a) + obj_map(b)),
        strict=True,
    )


@dataclass(frozen=True)
class NaturalCell:
    """A family of morphisms indexed by the objects of a list category."""

    name: str
    component: Callable


def nu_natural(inst: SmcInstance) -> NaturalCell:
    """The comparison from a list to the singleton list of its evaluation.

    Its reindexing function collapses every position, so it has no inverse as
    soon as the list has length other than one.
    """
    m = underlying(inst, DEFAULT_KAPPA)

    def component(xs: tuple) -> LMorphism:
        xs = tuple(xs)
        kbar = eval_obj(inst, default_kappa(len(xs)), xs)
        arrow = MultiArrow(xs, kbar, inst.id(kbar))
        return LMorphism(xs, (kbar,), (1,) * len(xs), (arrow,))

    return NaturalCell("nu", component)


def lax_naturality_cell(F: LaxSMF) -> NaturalCell:
    """The 2-cell filling the counit naturality square of a lax functor.

    Components are the comparison towers; identities when the functor is
    strict, isomorphisms when it is strong.
    """
    return NaturalCell(f"cell({F.name})", lambda xs: xi_tower(F, tuple(xs)))


def embed_as_list_mor(inst: SmcInstance, f) -> LMorphism:
    """View an instance morphism as a morphism of singleton lists."""
    arrow = MultiArrow((f.source,), f.target, f)
    return LMorphism((f.source,), (f.target,), (1,), (arrow,))


# --------------------------------------------------------------------------
# bounded checks
# --------------------------------------------------------------------------

def _list_objects(inst: SmcInstance, config: SuiteConfig, max_len: int):
    pool = list(inst.objects_upto(config.max_width))
    out = [()]
    for n in range(1, max_len + 1):
        out.extend(itertools.product(pool, repeat=n))
    return out


def _lm_mor_stream(lm: FreePermutative, lists):
    for xs in lists:
        for ys in lists:
            for mor in lm.hom(xs, ys):
                yield mor


def triangle_checks(m: UnderlyingMulticategory, inst: SmcInstance,
                    config: SuiteConfig, drop_sort: bool = False) -> SuiteResult:
    """Both adjunction triangles, checked exactly on bounded data."""
    config = config.validated()
    budget = config.max_instances
    suite = SuiteResult("adjunction-triangles")
    max_len = min(config.max_tuple_length, 3)

    # triangle on the multicategory side: counit after unit is the identity
    uc = underlying(inst, DEFAULT_KAPPA)
    eps = counit_eps(inst, drop_sort=drop_sort)
    u_eps = lax_to_multifunctor(eps, validate=False)
    eta = unit_eta(uc)
    pool = list(inst.objects_upto(config.max_width))
    tuples = source_tuples(pool, max_len, config.max_arity)

    def multicat_instances():
        for xs in tuples:
            for y in uc.targets(tuple_level(xs), config.max_width):
                for arrow in uc.hom(xs, y):
                    yield arrow

    def check_multicat(arrow):
        try:
            got = u_eps.on_arrow(eta.on_arrow(arrow))
        except StructuralError as exc:
            return {"law": "triangle_on_multicategory", "error": str(exc),
                    "arrow": arrow.to_json()}
        if got != arrow:
            return {"law": "triangle_on_multicategory",
                    "arrow": arrow.to_json(), "got": got.to_json()}
        return None

    suite.laws.append(run_law(
        "triangle_on_multicategory", multicat_instances(), check_multicat, budget))

    # triangle on the permutative side: evaluating the lifted unit is trivial
    lm = free_permutative(m)
    l_eta = free_permutative_functor(unit_eta(m), lm_source=lm)
    eps_lm = counit_eps(lm, drop_sort=drop_sort)
    lists = _list_objects_of_multicat(m, config, max_len)

    def check_lists(mor):
        try:
            got = eps_lm.mor_map(l_eta.mor_map(mor))
        except StructuralError as exc:
            return {"law": "triangle_on_lists", "error": str(exc)}
        if got != mor or eps_lm.obj_map(l_eta.obj_map(mor.source)) != mor.source:
            return {"law": "triangle_on_lists", "mor": mor.to_json()}
        return None

    suite.laws.append(run_law(
        "triangle_on_lists", _lm_mor_stream(lm, lists), check_lists, budget))
    return suite


def _list_objects_of_multicat(m, config: SuiteConfig, max_len: int):
    pool = list(m.object_pool(config.max_width))
    out = [()]
    for n in range(1, max_len + 1):
        out.extend(itertools.product(pool, repeat=n))
    return out


def nu_checks(inst: SmcInstance, config: SuiteConfig) -> list:
    """Naturality of the list-collapse comparison, plus its non-invertibility."""
    config = config.validated()
    budget = config.max_instances
    max_len = min(config.max_tuple_length, 3)
    lm = free_permutative(underlying(inst, DEFAULT_KAPPA))
    eps = counit_eps(inst)
    nu = nu_natural(inst)
    lists = _list_objects(inst, config, max_len)

    def check_naturality(mor):
        try:
            lhs = lm.compose(nu.component(mor.target), mor)
            rhs = lm.compose(embed_as_list_mor(inst, eps.mor_map(mor)),
                             nu.component(mor.source))
        except StructuralError as exc:
            return {"law": "nu_naturality", "error": str(exc)}
        if lhs != rhs:
            return {"law": "nu_naturality", "mor": mor.to_json(),
                    "lhs": lhs.to_json(), "rhs": rhs.to_json()}
        return None

    laws = [run_law("nu_naturality", _lm_mor_stream(lm, lists),
                    check_naturality, budget)]

    witness = LawResult("nu_not_invertible")
    pool = list(inst.objects_upto(1))
    pair = (pool[0], pool[0])
    comp = nu.component(pair)
    witness.checked = 1
    if sorted(comp.f) == list(range(1, len(comp.f) + 1)) and len(set(comp.f)) == len(comp.f) and len(comp.f) == len(comp.target):
        witness.failures.append({"law": "nu_not_invertible",
                                 "detail": "collapse map is bijective"})
    laws.append(witness)
    return laws


def xi_cell_checks(functors: Sequence[LaxSMF], config: SuiteConfig) -> list:
    """Component shape and naturality of the counit 2-cells."""
    config = config.validated()
    budget = config.max_instances
    max_len = min(config.max_tuple_length, 3)
    laws = []
    lm_cache: dict = {}
    eps_cache: dict = {}

    def lm_for(inst):
        if id(inst) not in lm_cache:
            lm_cache[id(inst)] = free_permutative(underlying(inst, DEFAULT_KAPPA))
        return lm_cache[id(inst)]

    def eps_for(inst):
        if id(inst) not in eps_cache:
            eps_cache[id(inst)] = counit_eps(inst)
        return eps_cache[id(inst)]

    for F in functors:
        cell = lax_naturality_cell(F)
        C, D = F.source, F.target
        lists = _list_objects(C, config, max_len)

        def shape_instances():
            for xs in lists:
                yield xs

        def check_shape(xs, F=F, cell=cell, D=D):
            comp = cell.component(xs)
            if F.strict:
                if comp != D.id(comp.source):
                    return {"law": "cell_strict_identity", "xs": _as_json(xs)}
                return None
            try:
                inv = xi_tower_inv(F, xs)
                if D.compose(inv, comp) != D.id(comp.source):
                    return {"law": "cell_strong_iso", "xs": _as_json(xs)}
                if D.compose(comp, inv) != D.id(comp.target):
                    return {"law": "cell_strong_iso", "xs": _as_json(xs)}
            except StructuralError as exc:
                return {"law": "cell_strong_iso", "error": str(exc)}
            return None

        name = "cell_strict_identity" if F.strict else "cell_strong_iso"
        laws.append(run_law(f"{name}[{F.name}]", shape_instances(),
                            check_shape, budget))

        lm = lm_for(C)
        eps_c = eps_for(C)
        eps_d = eps_for(D)
        luf = free_permutative_functor(lax_to_multifunctor(F, validate=False))

        def check_nat(mor, F=F, cell=cell, D=D, eps_c=eps_c, eps_d=eps_d, luf=luf):
            try:
                lhs = D.compose(F.mor_map(eps_c.mor_map(mor)), cell.component(mor.source))
                rhs = D.compose(cell.component(mor.target), eps_d.mor_map(luf.mor_map(mor)))
            except StructuralError as exc:
                return {"law": "cell_naturality", "error": str(exc)}
            if lhs != rhs:
                return {"law": "cell_naturality", "mor": mor.to_json()}
            return None

        laws.append(run_law(f"cell_naturality[{F.name}]",
                            _lm_mor_stream(lm, lists), check_nat, budget))
    return laws


def pasting_checks(pairs: Sequence, config: SuiteConfig) -> list:
    """The cell of a composite equals the pasting of the cells."""
    config = config.validated()
    budget = config.max_instances
    max_len = min(config.max_tuple_length, 3)
    laws = []
    for G, F in pairs:
        composite = compose_lax(G, F)
        lists = _list_objects(F.source, config, max_len)

        def check(xs, G=G, F=F, composite=composite):
            lhs = xi_tower(composite, xs)
            mapped = tuple(F.obj_map(x) for x in xs)
            rhs = G.target.compose(G.mor_map(xi_tower(F, xs)),
                                   xi_tower(G, mapped))
            if lhs != rhs:
                return {"law": "cell_pasting", "xs": _as_json(xs),
                        "pair": f"{G.name}.{F.name}"}
            return None

        laws.append(run_law(f"cell_pasting[{G.name}.{F.name}]",
                            iter(lists), check, budget))
    return laws


def comonad_checks(inst: SmcInstance, config: SuiteConfig) -> list:
    """Counit and comultiplication identities for the strictification comonad."""
    config = config.validated()
    budget = config.max_instances
    max_len = min(config.max_tuple_length, 2)
    uc = underlying(inst, DEFAULT_KAPPA)
    lm = free_permutative(uc)
    delta = free_permutative_functor(unit_eta(uc), lm_source=lm)
    eps_lm = counit_eps(lm)
    lu_eps = free_permutative_functor(
        lax_to_multifunctor(counit_eps(inst), validate=False))
    lists = _list_objects(inst, config, max_len)

    def check(mor):
        try:
            one = eps_lm.mor_map(delta.mor_map(mor))
            two = lu_eps.mor_map(delta.mor_map(mor))
        except StructuralError as exc:
            return {"law": "comonad", "error": str(exc)}
        if one != mor or two != mor:
            return {"law": "comonad", "mor": mor.to_json()}
        return None

    return [run_law("comonad_identities", _lm_mor_stream(lm, lists), check, budget)]
