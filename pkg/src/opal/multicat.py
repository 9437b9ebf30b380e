"""Underlying multicategories of monoidal instances, and their law suite.

An arrow from a tuple to an object is a morphism out of the tuple's tensored
evaluation under the instance's recipe family, tagged with the full source
tuple.  The tag participates in equality on purpose: the same instance
morphism can appear as arrows of several different arities, and those arrows
must stay distinct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .config import SuiteConfig, rng_for
from .errors import StructuralError
from .operad_y import KappaFamily, Y_ONE, act_y, gamma_y
from .perms import Perm, all_perms, block_perm, block_sum
from .report import LawResult, SuiteResult, run_law
from .smc import SmcInstance, eval_can_iso, eval_obj, eval_obj_mor


class MultiArrow(NamedTuple):
    """A multimorphism with its source tuple kept as part of its identity."""

    source: tuple
    target: object
    payload: object

    def to_json(self) -> dict:
        return {
            "source": [_as_json(x) for x in self.source],
            "target": _as_json(self.target),
            "payload": _as_json(self.payload),
        }


def _as_json(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, tuple):
        return [_as_json(v) for v in value]
    return value


def tuple_level(xs) -> int:
    return sum(x.arity for x in xs)


class UnderlyingMulticategory:
    """The multicategory carried by a monoidal instance and a recipe family."""

    def __init__(self, inst: SmcInstance, kappa: KappaFamily, drop_phi: bool = False):
        self.inst = inst
        self.kappa = kappa
        self.name = f"U[{kappa.name}]{inst.name}"
        self._drop_phi = drop_phi
        self._kbar_cache: dict = {}
        self._hom_cache: dict = {}
        self._reindex_cache: dict = {}
        self._grouping_cache: dict = {}

    def kbar(self, xs):
        """Tensor a tuple according to the recipe family."""
        hit = self._kbar_cache.get(xs)
        if hit is None:
            hit = eval_obj(self.inst, self.kappa(xs), xs)
            self._kbar_cache[xs] = hit
        return hit

    def identity(self, a) -> MultiArrow:
        payload = eval_can_iso(self.inst, self.kappa((a,)), Y_ONE, (a,))
        return MultiArrow((a,), a, payload)

    def reindexing_iso(self, xs: tuple, s: Perm):
        """The canonical morphism from the reordered tuple's tensor to the original's.

        Returns ``(reordered tuple, iso)`` with the iso running
        kbar(reordered) -> kbar(xs).
        """
        hit = self._reindex_cache.get((xs, s))
        if hit is None:
            new = s.act_inverse(xs)
            iso = eval_can_iso(
                self.inst, self.kappa(new), act_y(self.kappa(xs), s), new
            )
            hit = (new, iso)
            self._reindex_cache[(xs, s)] = hit
        return hit

    def sigma_star(self, arrow: MultiArrow, s: Perm) -> MultiArrow:
        if s.degree != len(arrow.source):
            raise StructuralError(
                f"degree {s.degree} acting on a {len(arrow.source)}-ary arrow"
            )
        new, iso = self.reindexing_iso(arrow.source, s)
        return MultiArrow(new, arrow.target, self.inst.compose(arrow.payload, iso))

    def grouping_iso(self, ys: tuple, source_tuples: Sequence[tuple]):
        """Canonical morphism kbar(concatenation) -> recipe(ys) applied to the kbars."""
        key = (ys, tuple(source_tuples))
        hit = self._grouping_cache.get(key)
        if hit is None:
            flat = tuple(x for xs in source_tuples for x in xs)
            grouped = gamma_y(
                self.kappa(ys), tuple(self.kappa(xs) for xs in source_tuples)
            )
            hit = eval_can_iso(self.inst, self.kappa(flat), grouped, flat)
            self._grouping_cache[key] = hit
        return hit

    def gamma(self, outer: MultiArrow, inners: Sequence[MultiArrow]) -> MultiArrow:
        ys = outer.source
        if len(inners) != len(ys):
            raise StructuralError(
                f"{len(ys)}-ary arrow composed with {len(inners)} inner arrows"
            )
        for g, y in zip(inners, ys):
            if g.target != y:
                raise StructuralError("inner arrow target does not match outer source slot")
        recipe = self.kappa(ys)
        tensored = eval_obj_mor(self.inst, recipe, tuple(g.payload for g in inners))
        out = self.inst.compose(outer.payload, tensored)
        flat = tuple(x for g in inners for x in g.source)
        if not self._drop_phi:
            out = self.inst.compose(out, self.grouping_iso(ys, [g.source for g in inners]))
        return MultiArrow(flat, outer.target, out)

    # enumeration ---------------------------------------------------------
    def object_pool(self, max_width):
        return self.inst.objects_upto(max_width)

    def targets(self, arity, max_width):
        return self.inst.targets_with_arity(arity, max_width)

    def hom(self, xs: tuple, y):
        key = (xs, y)
        hit = self._hom_cache.get(key)
        if hit is None:
            hit = tuple(
                MultiArrow(xs, y, payload)
                for payload in self.inst.hom(self.kbar(xs), y)
            )
            self._hom_cache[key] = hit
        return hit


def underlying(inst: SmcInstance, kappa: KappaFamily) -> UnderlyingMulticategory:
    return UnderlyingMulticategory(inst, kappa)


@dataclass(frozen=True)
class Multifunctor:
    """A structure-preserving map of multicategories, given by its two actions."""

    name: str
    source: object
    target: object
    obj_map: Callable
    arrow_map: Callable

    def on_object(self, a):
        return self.obj_map(a)

    def on_arrow(self, arrow: MultiArrow) -> MultiArrow:
        return self.arrow_map(arrow)


def identity_multifunctor(m) -> Multifunctor:
    return Multifunctor("identity", m, m, lambda a: a, lambda arrow: arrow)


def compose_multifunctors(g: Multifunctor, f: Multifunctor) -> Multifunctor:
    return Multifunctor(
        f"{g.name}.{f.name}",
        f.source,
        g.target,
        lambda a: g.obj_map(f.obj_map(a)),
        lambda arrow: g.arrow_map(f.arrow_map(arrow)),
    )


def canonical_iso(u_from: UnderlyingMulticategory,
                  u_to: UnderlyingMulticategory) -> Multifunctor:
    """The coherent comparison between two recipe choices over one instance.

    Identity on objects; arrows precompose with the coherence isomorphism
    between the two tensored sources.
    """
    if u_from.inst is not u_to.inst:
        raise StructuralError("canonical comparison needs a shared instance")
    inst = u_from.inst

    def on_arrow(arrow: MultiArrow) -> MultiArrow:
        iso = eval_can_iso(
            inst,
            u_to.kappa(arrow.source),
            u_from.kappa(arrow.source),
            arrow.source,
        )
        return MultiArrow(arrow.source, arrow.target, inst.compose(arrow.payload, iso))

    return Multifunctor(
        f"compare[{u_from.kappa.name}->{u_to.kappa.name}]",
        u_from,
        u_to,
        lambda a: a,
        on_arrow,
    )


# --------------------------------------------------------------------------
# law suite
# --------------------------------------------------------------------------

def source_tuples(pool, max_len: int, max_level: int):
    """All tuples over the pool, shortest first, with bounded total arity."""
    out = [()]
    for n in range(1, max_len + 1):
        for combo in itertools.product(pool, repeat=n):
            if tuple_level(combo) <= max_level:
                out.append(combo)
    return out


def _arrows_for(m, xs, config):
    return [
        arrow
        for y in m.targets(tuple_level(xs), config.max_width)
        for arrow in m.hom(xs, y)
    ]


def _arrow_stream(m, tuples, config):
    for xs in tuples:
        for arrow in _arrows_for(m, xs, config):
            yield arrow


def _arrows_by_target(m, tuples, config):
    table: dict = {}
    for xs in tuples:
        for arrow in _arrows_for(m, xs, config):
            table.setdefault(arrow.target, []).append(arrow)
    return table


def _assignments(options, budget_len):
    """Pick one arrow per slot with bounded total source length."""
    if not options:
        yield ()
        return
    head, *rest = options
    for arrow in head:
        used = len(arrow.source)
        if used > budget_len:
            continue
        for tail in _assignments(rest, budget_len - used):
            yield (arrow,) + tail


def _gamma_stacks(m, tuples, config):
    """(outer arrow, inner arrows) pairs, composable, smallest first."""
    by_target = _arrows_by_target(m, tuples, config)
    for ys in tuples:
        options = [by_target.get(y, []) for y in ys]
        if any(not opts for opts in options):
            continue
        outers = _arrows_for(m, ys, config)
        if not outers:
            continue
        for inners in _assignments(options, config.max_tuple_length):
            for outer in outers:
                yield outer, inners


def _assoc_stacks(m, tuples, config):
    by_target = _arrows_by_target(m, tuples, config)
    for outer, mids in _gamma_stacks(m, tuples, config):
        flat_sources = tuple(x for g in mids for x in g.source)
        options = [by_target.get(x, []) for x in flat_sources]
        if any(not opts for opts in options):
            continue
        for bottoms in _assignments(options, config.max_tuple_length):
            yield outer, mids, bottoms


def _failure(law, detail):
    record = {"law": law}
    record.update(detail)
    return record


def _describe_arrow(arrow: MultiArrow):
    return arrow.to_json()


def _two_sided(law, lhs, rhs, context):
    if lhs == rhs:
        return None
    detail = dict(context)
    detail["lhs"] = _as_json(lhs)
    detail["rhs"] = _as_json(rhs)
    return _failure(law, detail)


def law_suite(m: UnderlyingMulticategory, config: SuiteConfig,
              drop_block_perm: bool = False) -> SuiteResult:
    """Exhaustively-within-bounds checks of the multicategory axioms.

    Cheap structure-level identities (the reindexing cocycle and the grouping
    coherence) run over the full bounded range; the arrow-level diagrams run
    over smallest-first streams truncated at the per-law budget.  On an
    instance with invertible morphisms the structure-level identities imply
    the arrow-level ones for every payload, so together the two layers cover
    the stated bounds.
    """
    config = config.validated()
    budget = config.max_instances
    pool = list(m.object_pool(config.max_width))
    tuples = source_tuples(pool, config.max_tuple_length, config.max_arity)
    suite = SuiteResult(f"multicat-{m.kappa.name}")

    # right action: identity law, arrow level
    def check_unit(arrow):
        got = m.sigma_star(arrow, Perm.identity(len(arrow.source)))
        return _two_sided("right_action_identity", got, arrow,
                          {"arrow": _describe_arrow(arrow)})

    suite.laws.append(run_law(
        "right_action_identity", _arrow_stream(m, tuples, config), check_unit, budget))

    # right action: the reindexing isos compose like the group
    def cocycle_instances():
        for xs in tuples:
            n = len(xs)
            for s in all_perms(n):
                for t in all_perms(n):
                    yield xs, s, t

    def check_cocycle(item):
        xs, s, t = item
        st = s.compose(t)
        _, direct = m.reindexing_iso(xs, st)
        mid, first = m.reindexing_iso(xs, s)
        _, second = m.reindexing_iso(mid, t)
        try:
            chained = m.inst.compose(first, second)
        except StructuralError as exc:
            return _failure("right_action_cocycle", {"error": str(exc)})
        return _two_sided("right_action_cocycle", direct, chained,
                          {"tuple": _as_json(xs), "s": list(s), "t": list(t)})

    suite.laws.append(run_law(
        "right_action_cocycle", cocycle_instances(), check_cocycle, budget))

    # right action on arrows, full quantification at small degrees
    def action_instances():
        for xs in tuples:
            n = len(xs)
            if n > 3:
                continue
            arrows = _arrows_for(m, xs, config)
            for s in all_perms(n):
                for t in all_perms(n):
                    for arrow in arrows:
                        yield arrow, s, t

    def check_action(item):
        arrow, s, t = item
        lhs = m.sigma_star(arrow, s.compose(t))
        rhs = m.sigma_star(m.sigma_star(arrow, s), t)
        return _two_sided("right_action_composition", lhs, rhs,
                          {"arrow": _describe_arrow(arrow), "s": list(s), "t": list(t)})

    suite.laws.append(run_law(
        "right_action_composition", action_instances(), check_action, budget))

    # unit diagrams
    def check_unit_inner(arrow):
        inners = tuple(m.identity(c) for c in arrow.source)
        try:
            got = m.gamma(arrow, inners)
        except StructuralError as exc:
            return _failure("unit_inner", {"error": str(exc),
                                           "arrow": _describe_arrow(arrow)})
        return _two_sided("unit_inner", got, arrow,
                          {"arrow": _describe_arrow(arrow)})

    suite.laws.append(run_law(
        "unit_inner", _arrow_stream(m, tuples, config), check_unit_inner, budget))

    def check_unit_outer(arrow):
        try:
            got = m.gamma(m.identity(arrow.target), (arrow,))
        except StructuralError as exc:
            return _failure("unit_outer", {"error": str(exc),
                                           "arrow": _describe_arrow(arrow)})
        return _two_sided("unit_outer", got, arrow,
                          {"arrow": _describe_arrow(arrow)})

    suite.laws.append(run_law(
        "unit_outer", _arrow_stream(m, tuples, config), check_unit_outer, budget))

    # grouping coherence: pasting two layers of grouping isos equals the
    # one-shot iso onto the doubly-grafted recipe.  This is the payload-free
    # core of associativity; with invertible payloads it implies the arrow
    # level for every choice of payloads.
    def grouping_instances():
        tuple_options = [list(tuples)]
        for top in tuples:
            mid_options = [tuple_options[0]] * len(top)
            for mids in _assignments_tuples(mid_options, config.max_tuple_length):
                flat_mids = tuple(x for b in mids for x in b)
                bottom_options = [tuple_options[0]] * len(flat_mids)
                for bottoms in _assignments_tuples(
                        bottom_options, config.max_tuple_length):
                    yield top, mids, bottoms

    def check_grouping(item):
        top, mids, bottoms = item
        chunked = []
        pos = 0
        for b in mids:
            chunked.append(tuple(bottoms[pos:pos + len(b)]))
            pos += len(b)
        flatflat = tuple(x for xs in bottoms for x in xs)
        coarse = m.grouping_iso(
            top, [tuple(x for xs in chunk for x in xs) for chunk in chunked])
        refit = eval_obj_mor(m.inst, m.kappa(top), tuple(
            m.grouping_iso(b, chunk) for b, chunk in zip(mids, chunked)))
        pasted = m.inst.compose(refit, coarse)
        nested = gamma_y(m.kappa(top), tuple(
            gamma_y(m.kappa(b), tuple(m.kappa(xs) for xs in chunk))
            for b, chunk in zip(mids, chunked)))
        direct = eval_can_iso(m.inst, m.kappa(flatflat), nested, flatflat)
        return _two_sided("grouping_coherence", direct, pasted,
                          {"top": _as_json(top),
                           "mids": [_as_json(b) for b in mids],
                           "bottoms": [_as_json(xs) for xs in bottoms]})

    suite.laws.append(run_law(
        "grouping_coherence", grouping_instances(), check_grouping, budget))

    # associativity of composition, arrow level
    def check_assoc(item):
        outer, mids, bottoms = item
        try:
            lhs = m.gamma(m.gamma(outer, mids), bottoms)
            split = []
            pos = 0
            for g in mids:
                take = len(g.source)
                split.append(m.gamma(g, bottoms[pos:pos + take]))
                pos += take
            rhs = m.gamma(outer, tuple(split))
        except StructuralError as exc:
            return _failure("gamma_associativity", {"error": str(exc)})
        return _two_sided("gamma_associativity", lhs, rhs,
                          {"outer": _describe_arrow(outer)})

    suite.laws.append(run_law(
        "gamma_associativity", _assoc_stacks(m, tuples, config), check_assoc, budget))

    # equivariance 1: permuting the outer arrow's source
    def equiv_block_instances():
        for outer, inners in _gamma_stacks(m, tuples, config):
            for s in all_perms(len(outer.source)):
                yield outer, inners, s

    def check_equiv_block(item):
        outer, inners, s = item
        permuted = s.act_inverse(tuple(inners))
        try:
            lhs = m.gamma(m.sigma_star(outer, s), permuted)
            base = m.gamma(outer, inners)
            sizes = tuple(len(g.source) for g in permuted)
            blk = Perm.identity(sum(sizes)) if drop_block_perm else block_perm(s, sizes)
            rhs = m.sigma_star(base, blk)
        except StructuralError as exc:
            return _failure("equivariance_block", {"error": str(exc)})
        return _two_sided("equivariance_block", lhs, rhs,
                          {"outer": _describe_arrow(outer), "s": list(s)})

    suite.laws.append(run_law(
        "equivariance_block", equiv_block_instances(), check_equiv_block, budget))

    # equivariance 2: permuting each inner arrow's source
    def equiv_slots_instances():
        for outer, inners in _gamma_stacks(m, tuples, config):
            perm_options = [list(all_perms(len(g.source))) for g in inners]
            for taus in itertools.product(*perm_options):
                yield outer, inners, taus

    def check_equiv_slots(item):
        outer, inners, taus = item
        try:
            lhs = m.gamma(outer, tuple(
                m.sigma_star(g, t) for g, t in zip(inners, taus)))
            rhs = m.sigma_star(m.gamma(outer, inners), block_sum(taus))
        except StructuralError as exc:
            return _failure("equivariance_slots", {"error": str(exc)})
        return _two_sided("equivariance_slots", lhs, rhs,
                          {"outer": _describe_arrow(outer),
                           "taus": [list(t) for t in taus]})

    suite.laws.append(run_law(
        "equivariance_slots", equiv_slots_instances(), check_equiv_slots, budget))

    return suite


def _assignments_tuples(options, budget_len):
    """Pick one tuple per slot with bounded total length."""
    if not options:
        yield ()
        return
    head, *rest = options
    for pick in head:
        used = len(pick)
        if used > budget_len:
            continue
        for tail in _assignments_tuples(rest, budget_len - used):
            yield (pick,) + tail
