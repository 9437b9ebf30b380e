"""Named law suites and the verify driver.

Each suite returns a :class:`opal.report.SuiteResult`.  Instance streams are
generated smallest-first and truncated at the configured per-law budget, so
"exhaustive within bounds" always means: everything the stream produces below
the budget, in a deterministic order, plus seeded random supplements where
noted.  The fault-injection entry points reuse the same suites against
deliberately corrupted structure, which is how the suites prove they have
teeth.
"""

from __future__ import annotations

import itertools

from .adjunction import (comonad_checks, counit_eps, nu_checks, pasting_checks,
                         triangle_checks, xi_cell_checks)
from .config import SuiteConfig, rng_for, shrink
from .errors import StructuralError
from .functors import (LaxSMF, check_lax_coherence, identity_lax,
                       inflate_strict, lax_to_multifunctor,
                       multifunctor_to_lax, pad_strong, xi_tower)
from .hcat import H
from .multicat import (MultiArrow, canonical_iso, law_suite, source_tuples,
                       tuple_level, underlying, _as_json)
from .freeperm import free_permutative
from .operad_y import (DEFAULT_KAPPA, EXOTIC_KAPPA, RIGHT_NESTED_KAPPA, Y_M,
                       Y_ONE, act_y, default_kappa, gamma_y, resolve_kappa,
                       y_objects)
from .perms import Perm, all_perms, block_perm, block_sum, transpose_blocks
from .report import LawResult, SuiteResult, run_law
from .smc import eval_can_iso, eval_obj, eval_obj_mor

FAULTS = ("gamma-phi", "eps-sort", "equiv-block")


# --------------------------------------------------------------------------
# monoidal instance laws
# --------------------------------------------------------------------------

def suite_smc_laws(inst, config: SuiteConfig, name: str,
                   with_perm_identities: bool = False,
                   with_can_iso: bool = True) -> SuiteResult:
    config = config.validated()
    budget = config.max_instances
    suite = SuiteResult(name)
    pool = list(inst.objects_upto(config.max_width))

    def pairs():
        return itertools.product(pool, pool)

    def triples():
        return itertools.product(pool, pool, pool)

    def hom_stream():
        for a, b in pairs():
            for f in inst.hom(a, b):
                yield f

    def check_identity(f):
        if inst.compose(f, inst.id(f.source)) != f or inst.compose(inst.id(f.target), f) != f:
            return {"law": "category_identity", "mor": _as_json(f)}
        return None

    suite.laws.append(run_law("category_identity", hom_stream(),
                              check_identity, budget))

    def composable_triples():
        for a, b in pairs():
            homs_ab = inst.hom(a, b)
            if not homs_ab:
                continue
            for c in pool:
                homs_bc = inst.hom(b, c)
                if not homs_bc:
                    continue
                for d in pool:
                    for f in homs_ab:
                        for g in homs_bc:
                            for h in inst.hom(c, d):
                                yield f, g, h

    def check_assoc(item):
        f, g, h = item
        if inst.compose(h, inst.compose(g, f)) != inst.compose(inst.compose(h, g), f):
            return {"law": "category_associativity",
                    "mors": [_as_json(x) for x in (f, g, h)]}
        return None

    suite.laws.append(run_law("category_associativity", composable_triples(),
                              check_assoc, budget))

    def bifunctor_instances():
        for a, b in pairs():
            homs_ab = inst.hom(a, b)
            for c, d in pairs():
                homs_cd = inst.hom(c, d)
                for b2 in pool:
                    homs_bb2 = inst.hom(b, b2)
                    if not homs_bb2:
                        continue
                    for d2 in pool:
                        homs_dd2 = inst.hom(d, d2)
                        for f in homs_ab:
                            for f2 in homs_bb2:
                                for g in homs_cd:
                                    for g2 in homs_dd2:
                                        yield f, f2, g, g2

    def check_bifunctor(item):
        f, f2, g, g2 = item
        lhs = inst.tensor_mor(inst.compose(f2, f), inst.compose(g2, g))
        rhs = inst.compose(inst.tensor_mor(f2, g2), inst.tensor_mor(f, g))
        if lhs != rhs:
            return {"law": "tensor_bifunctorial",
                    "mors": [_as_json(x) for x in (f, f2, g, g2)]}
        return None

    suite.laws.append(run_law("tensor_bifunctorial", bifunctor_instances(),
                              check_bifunctor, budget))

    def check_iso_pairs(item):
        a, b = item
        t1 = inst.compose(inst.tau(b, a), inst.tau(a, b))
        if t1 != inst.id(inst.tensor_obj(a, b)):
            return {"law": "transposition_involution", "objects": _as_json((a, b))}
        r = inst.compose(inst.runit(a), inst.runit_inv(a))
        r2 = inst.compose(inst.runit_inv(a), inst.runit(a))
        if r != inst.id(a) or r2 != inst.id(inst.tensor_obj(a, inst.unit)):
            return {"law": "transposition_involution", "objects": _as_json((a,))}
        return None

    suite.laws.append(run_law("transposition_involution", pairs(),
                              check_iso_pairs, budget))

    def check_alpha_iso(item):
        a, b, c = item
        fwd = inst.alpha(a, b, c)
        bwd = inst.alpha_inv(a, b, c)
        if inst.compose(bwd, fwd) != inst.id(fwd.source) or \
           inst.compose(fwd, bwd) != inst.id(fwd.target):
            return {"law": "associator_iso", "objects": _as_json((a, b, c))}
        return None

    suite.laws.append(run_law("associator_iso", triples(),
                              check_alpha_iso, budget))

    def nat_instances():
        for a, b in pairs():
            for f in inst.hom(a, b):
                for c, d in pairs():
                    for g in inst.hom(c, d):
                        yield f, g

    def check_tau_natural(item):
        f, g = item
        lhs = inst.compose(inst.tau(f.target, g.target), inst.tensor_mor(f, g))
        rhs = inst.compose(inst.tensor_mor(g, f), inst.tau(f.source, g.source))
        if lhs != rhs:
            return {"law": "transposition_natural",
                    "mors": [_as_json(f), _as_json(g)]}
        return None

    suite.laws.append(run_law("transposition_natural", nat_instances(),
                              check_tau_natural, budget))

    def check_runit_natural(f):
        lhs = inst.compose(inst.runit(f.target),
                           inst.tensor_mor(f, inst.id(inst.unit)))
        rhs = inst.compose(f, inst.runit(f.source))
        if lhs != rhs:
            return {"law": "unitor_natural", "mor": _as_json(f)}
        return None

    suite.laws.append(run_law("unitor_natural", hom_stream(),
                              check_runit_natural, budget))

    def alpha_nat_instances():
        for f, g in nat_instances():
            for e2, d2 in pairs():
                for h in inst.hom(e2, d2):
                    yield f, g, h

    def check_alpha_natural(item):
        f, g, h = item
        lhs = inst.compose(inst.alpha(f.target, g.target, h.target),
                           inst.tensor_mor(inst.tensor_mor(f, g), h))
        rhs = inst.compose(inst.tensor_mor(f, inst.tensor_mor(g, h)),
                           inst.alpha(f.source, g.source, h.source))
        if lhs != rhs:
            return {"law": "associator_natural",
                    "mors": [_as_json(x) for x in (f, g, h)]}
        return None

    suite.laws.append(run_law("associator_natural", alpha_nat_instances(),
                              check_alpha_natural, budget))

    def check_triangle(item):
        a, b = item
        lhs = inst.compose(inst.tensor_mor(inst.id(a), inst.lunit(b)),
                           inst.alpha(a, inst.unit, b))
        rhs = inst.tensor_mor(inst.runit(a), inst.id(b))
        if lhs != rhs:
            return {"law": "unitor_triangle", "objects": _as_json((a, b))}
        return None

    suite.laws.append(run_law("unitor_triangle", pairs(),
                              check_triangle, budget))

    def check_hexagon(item):
        a, b, c = item
        lhs = inst.compose(
            inst.tensor_mor(inst.id(b), inst.tau(a, c)),
            inst.compose(inst.alpha(b, a, c),
                         inst.tensor_mor(inst.tau(a, b), inst.id(c))))
        rhs = inst.compose(
            inst.alpha(b, c, a),
            inst.compose(inst.tau(a, inst.tensor_obj(b, c)),
                         inst.alpha(a, b, c)))
        if lhs != rhs:
            return {"law": "hexagon", "objects": _as_json((a, b, c))}
        return None

    def hexagon_instances():
        yield from triples()
        rng = rng_for(config, "hexagon")
        for _ in range(config.random_supplement):
            yield tuple(rng.choice(pool) for _ in range(3))

    suite.laws.append(run_law("hexagon", hexagon_instances(),
                              check_hexagon, budget))

    def check_pentagon(item):
        a, b, c, d = item
        ab = inst.tensor_obj(a, b)
        cd = inst.tensor_obj(c, d)
        lhs = inst.compose(inst.alpha(a, b, cd), inst.alpha(ab, c, d))
        rhs = inst.compose(
            inst.tensor_mor(inst.id(a), inst.alpha(b, c, d)),
            inst.compose(inst.alpha(a, inst.tensor_obj(b, c), d),
                         inst.tensor_mor(inst.alpha(a, b, c), inst.id(d))))
        if lhs != rhs:
            return {"law": "pentagon", "objects": _as_json((a, b, c, d))}
        return None

    def pentagon_instances():
        yield from itertools.product(pool, pool, pool, pool)
        rng = rng_for(config, "pentagon")
        for _ in range(config.random_supplement):
            yield tuple(rng.choice(pool) for _ in range(4))

    suite.laws.append(run_law("pentagon", pentagon_instances(),
                              check_pentagon, budget))

    if with_perm_identities:
        def perm_identity_instances():
            for total in range(0, 7):
                for n in range(total + 1):
                    for mm in range(total - n + 1):
                        yield n, mm, total - n - mm

        def check_perm_identity(item):
            n, mm, t = item
            lhs = block_sum((Perm.identity(mm), transpose_blocks(n, t))).compose(
                block_sum((transpose_blocks(n, mm), Perm.identity(t))))
            if lhs != transpose_blocks(n, mm + t):
                return {"law": "block_transposition", "sizes": [n, mm, t]}
            if transpose_blocks(n, mm).compose(transpose_blocks(mm, n)) != \
                    Perm.identity(n + mm):
                return {"law": "block_transposition", "sizes": [n, mm]}
            return None

        suite.laws.append(run_law("block_transposition",
                                  perm_identity_instances(),
                                  check_perm_identity, budget))

    if with_can_iso:
        recipes = y_objects(min(config.max_width, 3), 2)
        tuples = source_tuples(pool, 2, config.max_arity)

        def can_iso_triples():
            for a in recipes:
                for b in recipes:
                    if b.arity != a.arity:
                        continue
                    for c in recipes:
                        if c.arity != a.arity:
                            continue
                        for xs in tuples:
                            if len(xs) == a.arity:
                                yield a, b, c, xs

        def check_can_iso(item):
            a, b, c, xs = item
            if eval_can_iso(inst, a, a, xs) != inst.id(eval_obj(inst, a, xs)):
                return {"law": "can_iso_coherence", "recipe": a.to_json()}
            direct = eval_can_iso(inst, a, c, xs)
            stepped = inst.compose(eval_can_iso(inst, b, c, xs),
                                   eval_can_iso(inst, a, b, xs))
            if direct != stepped:
                return {"law": "can_iso_coherence",
                        "recipes": [a.to_json(), b.to_json(), c.to_json()],
                        "inputs": _as_json(xs)}
            return None

        suite.laws.append(run_law("can_iso_coherence", can_iso_triples(),
                                  check_can_iso, budget))

        def can_iso_nat_instances():
            for a in recipes:
                for b in recipes:
                    if b.arity != a.arity:
                        continue
                    for srcs in source_tuples(pool, 2, config.max_arity):
                        if len(srcs) != a.arity:
                            continue
                        options = [list(itertools.chain.from_iterable(
                            inst.hom(s, t) for t in pool)) for s in srcs]
                        if any(not o for o in options):
                            continue
                        for fs in itertools.product(*options):
                            yield a, b, srcs, fs

        def check_can_iso_natural(item):
            a, b, srcs, fs = item
            tgts = tuple(f.target for f in fs)
            lhs = inst.compose(eval_can_iso(inst, a, b, tgts),
                               eval_obj_mor(inst, a, fs))
            rhs = inst.compose(eval_obj_mor(inst, b, fs),
                               eval_can_iso(inst, a, b, srcs))
            if lhs != rhs:
                return {"law": "can_iso_natural",
                        "recipes": [a.to_json(), b.to_json()]}
            return None

        suite.laws.append(run_law("can_iso_natural", can_iso_nat_instances(),
                                  check_can_iso_natural, budget))

    return suite


# --------------------------------------------------------------------------
# operad laws
# --------------------------------------------------------------------------

def suite_y_operad(config: SuiteConfig) -> SuiteResult:
    config = config.validated()
    budget = config.max_instances
    suite = SuiteResult("y-operad-laws")
    pool = y_objects(config.max_width, config.max_arity)
    max_w = config.max_width

    def check_unit(y):
        if gamma_y(Y_ONE, (y,)) != y:
            return {"law": "gamma_unit", "recipe": y.to_json(), "side": "outer"}
        if gamma_y(y, (Y_ONE,) * y.arity) != y:
            return {"law": "gamma_unit", "recipe": y.to_json(), "side": "inner"}
        return None

    suite.laws.append(run_law("gamma_unit", iter(pool), check_unit, budget))

    def act_instances():
        for y in pool:
            for s in all_perms(y.arity):
                for t in all_perms(y.arity):
                    yield y, s, t

    def check_act(item):
        y, s, t = item
        if act_y(y, Perm.identity(y.arity)) != y:
            return {"law": "act_right_action", "recipe": y.to_json()}
        if act_y(act_y(y, s), t) != act_y(y, s.compose(t)):
            return {"law": "act_right_action", "recipe": y.to_json(),
                    "s": list(s), "t": list(t)}
        return None

    suite.laws.append(run_law("act_right_action", act_instances(),
                              check_act, budget))

    pool_widths = [(p, p.width) for p in pool]
    parts_cache: dict = {}

    def parts_for(base, width_room):
        """Part tuples whose grafted result stays within the width bound."""
        key = (base.arity, base.width, width_room)
        hit = parts_cache.get(key)
        if hit is not None:
            return hit
        n = base.arity
        if n == 0:
            hit = ((),)
        else:
            combos: list = []
            floor = base.width - n

            def rec(i, acc, wsum):
                if i == n:
                    combos.append(tuple(acc))
                    return
                remaining = n - i - 1
                for p, w in pool_widths:
                    if floor + wsum + w + remaining <= width_room:
                        acc.append(p)
                        rec(i + 1, acc, wsum + w)
                        acc.pop()

            rec(0, [], 0)
            hit = tuple(combos)
        parts_cache[key] = hit
        return hit

    def assoc_instances():
        for b in pool:
            for parts in parts_for(b, max_w):
                mid = gamma_y(b, parts)
                if mid.arity > config.max_arity:
                    continue
                for subparts in parts_for(mid, max_w):
                    yield b, parts, subparts

    def check_assoc(item):
        b, parts, subparts = item
        lhs = gamma_y(gamma_y(b, parts), subparts)
        pos = 0
        regrouped = []
        for p in parts:
            take = p.arity
            regrouped.append(gamma_y(p, subparts[pos:pos + take]))
            pos += take
        rhs = gamma_y(b, tuple(regrouped))
        if lhs != rhs:
            return {"law": "gamma_associativity", "base": b.to_json()}
        return None

    suite.laws.append(run_law("gamma_associativity", assoc_instances(),
                              check_assoc, budget))

    def equiv_outer_instances():
        for b in pool:
            for parts in parts_for(b, max_w):
                for s in all_perms(b.arity):
                    yield b, parts, s

    def check_equiv_outer(item):
        b, parts, s = item
        permuted = s.act_inverse(parts)
        lhs = gamma_y(act_y(b, s), permuted)
        sizes = tuple(p.arity for p in permuted)
        rhs = act_y(gamma_y(b, parts), block_perm(s, sizes))
        if lhs != rhs:
            return {"law": "equivariance_outer", "base": b.to_json(), "s": list(s)}
        return None

    suite.laws.append(run_law("equivariance_outer", equiv_outer_instances(),
                              check_equiv_outer, budget))

    def equiv_inner_instances():
        for b in pool:
            for parts in parts_for(b, max_w):
                for taus in itertools.product(
                        *[list(all_perms(p.arity)) for p in parts]):
                    yield b, parts, taus

    def check_equiv_inner(item):
        b, parts, taus = item
        lhs = gamma_y(b, tuple(act_y(p, t) for p, t in zip(parts, taus)))
        rhs = act_y(gamma_y(b, parts), block_sum(taus))
        if lhs != rhs:
            return {"law": "equivariance_inner", "base": b.to_json()}
        return None

    suite.laws.append(run_law("equivariance_inner", equiv_inner_instances(),
                              check_equiv_inner, budget))

    # evaluation contracts, exercised on the decidable word instance
    h_pool = list(H.objects_upto(min(config.max_width, 2)))

    def eval_instances():
        for y in pool:
            for xs in itertools.product(h_pool, repeat=y.arity):
                for s in all_perms(y.arity):
                    yield y, xs, s

    def check_eval(item):
        y, xs, s = item
        if eval_obj(H, act_y(y, s), s.act_inverse(xs)) != eval_obj(H, y, xs):
            return {"law": "action_eval_contract", "recipe": y.to_json(),
                    "s": list(s), "inputs": _as_json(xs)}
        return None

    suite.laws.append(run_law("action_eval_contract", eval_instances(),
                              check_eval, budget))

    def gamma_eval_instances():
        for b in pool:
            if b.width > 3:
                continue
            for parts in parts_for(b, min(max_w, 3)):
                arity = sum(p.arity for p in parts)
                if arity > 3:
                    continue
                for xs in itertools.product(h_pool, repeat=arity):
                    yield b, parts, xs

    def check_gamma_eval(item):
        b, parts, xs = item
        composite = gamma_y(b, parts)
        lhs = eval_obj(H, composite, xs)
        pos = 0
        evals = []
        for p in parts:
            evals.append(eval_obj(H, p, xs[pos:pos + p.arity]))
            pos += p.arity
        rhs = eval_obj(H, b, tuple(evals))
        if lhs != rhs:
            return {"law": "gamma_eval_contract", "base": b.to_json()}
        return None

    suite.laws.append(run_law("gamma_eval_contract", gamma_eval_instances(),
                              check_gamma_eval, budget))
    return suite


# --------------------------------------------------------------------------
# choice-family coherence
# --------------------------------------------------------------------------

def suite_kappa_coherence(config: SuiteConfig) -> SuiteResult:
    """Comparisons between three recipe families are coherent isomorphisms."""
    config = config.validated()
    budget = config.max_instances
    suite = SuiteResult("kappa-coherence")
    families = (DEFAULT_KAPPA, EXOTIC_KAPPA, RIGHT_NESTED_KAPPA)
    cats = {fam.name: underlying(H, fam) for fam in families}
    max_len = min(config.max_tuple_length, 3)
    pool = list(H.objects_upto(min(config.max_width, 2)))
    tuples = source_tuples(pool, max_len, config.max_arity)

    def arrow_stream(u):
        for xs in tuples:
            for y in u.targets(tuple_level(xs), config.max_width):
                for arrow in u.hom(xs, y):
                    yield arrow

    def check_self(item):
        name, arrow = item
        u = cats[name]
        got = canonical_iso(u, u).on_arrow(arrow)
        if got != arrow:
            return {"law": "compare_self_identity", "family": name,
                    "arrow": arrow.to_json()}
        return None

    suite.laws.append(run_law(
        "compare_self_identity",
        ((fam.name, a) for fam in families for a in arrow_stream(cats[fam.name])),
        check_self, budget))

    ordered_pairs = [(a, b) for a in families for b in families if a is not b]

    def check_bijection(item):
        (fa, fb), xs, y = item
        u1, u2 = cats[fa.name], cats[fb.name]
        iso = canonical_iso(u1, u2)
        image = [iso.on_arrow(f) for f in u1.hom(xs, y)]
        target = list(u2.hom(xs, y))
        if sorted(map(repr, image)) != sorted(map(repr, target)):
            return {"law": "compare_bijection", "families": [fa.name, fb.name],
                    "tuple": _as_json(xs)}
        return None

    def bijection_instances():
        for pair in ordered_pairs:
            for xs in tuples:
                u1 = cats[pair[0].name]
                for y in u1.targets(tuple_level(xs), config.max_width):
                    yield pair, xs, y

    suite.laws.append(run_law("compare_bijection", bijection_instances(),
                              check_bijection, budget))

    def check_preserve_identity(item):
        (fa, fb), a = item
        u1, u2 = cats[fa.name], cats[fb.name]
        iso = canonical_iso(u1, u2)
        if iso.on_arrow(u1.identity(a)) != u2.identity(a):
            return {"law": "compare_preserves_identity",
                    "families": [fa.name, fb.name], "object": _as_json(a)}
        return None

    suite.laws.append(run_law(
        "compare_preserves_identity",
        ((pair, a) for pair in ordered_pairs for a in pool),
        check_preserve_identity, budget))

    def action_instances():
        for pair in ordered_pairs:
            u1 = cats[pair[0].name]
            for arrow in arrow_stream(u1):
                for s in all_perms(len(arrow.source)):
                    yield pair, arrow, s

    def check_preserve_action(item):
        (fa, fb), arrow, s = item
        u1, u2 = cats[fa.name], cats[fb.name]
        iso = canonical_iso(u1, u2)
        if iso.on_arrow(u1.sigma_star(arrow, s)) != u2.sigma_star(iso.on_arrow(arrow), s):
            return {"law": "compare_preserves_action",
                    "families": [fa.name, fb.name], "s": list(s)}
        return None

    suite.laws.append(run_law("compare_preserves_action", action_instances(),
                              check_preserve_action, budget))

    def gamma_instances():
        for pair in ordered_pairs:
            u1 = cats[pair[0].name]
            by_target = {}
            for arrow in arrow_stream(u1):
                by_target.setdefault(arrow.target, []).append(arrow)
            for ys in tuples:
                options = [by_target.get(y, []) for y in ys]
                if any(not o for o in options):
                    continue
                for y_t in u1.targets(tuple_level(ys), config.max_width):
                    for outer in u1.hom(ys, y_t):
                        for inners in itertools.product(*options):
                            if sum(len(g.source) for g in inners) <= config.max_tuple_length:
                                yield pair, outer, inners

    def check_preserve_gamma(item):
        (fa, fb), outer, inners = item
        u1, u2 = cats[fa.name], cats[fb.name]
        iso = canonical_iso(u1, u2)
        lhs = iso.on_arrow(u1.gamma(outer, inners))
        rhs = u2.gamma(iso.on_arrow(outer), tuple(iso.on_arrow(g) for g in inners))
        if lhs != rhs:
            return {"law": "compare_preserves_gamma",
                    "families": [fa.name, fb.name]}
        return None

    suite.laws.append(run_law("compare_preserves_gamma", gamma_instances(),
                              check_preserve_gamma, budget))

    def triangle_instances():
        for fa in families:
            for fb in families:
                for fc in families:
                    for arrow in arrow_stream(cats[fa.name]):
                        yield fa, fb, fc, arrow

    def check_triangle(item):
        fa, fb, fc, arrow = item
        u1, u2, u3 = cats[fa.name], cats[fb.name], cats[fc.name]
        direct = canonical_iso(u1, u3).on_arrow(arrow)
        stepped = canonical_iso(u2, u3).on_arrow(canonical_iso(u1, u2).on_arrow(arrow))
        if direct != stepped:
            return {"law": "compare_triangle",
                    "families": [fa.name, fb.name, fc.name]}
        return None

    suite.laws.append(run_law("compare_triangle", triangle_instances(),
                              check_triangle, budget))
    return suite


# --------------------------------------------------------------------------
# lax functor round trips and tower squares
# --------------------------------------------------------------------------

def test_functors() -> list:
    return [identity_lax(H), inflate_strict(Y_M.z), pad_strong(H)]


def suite_roundtrips(config: SuiteConfig) -> SuiteResult:
    config = config.validated()
    budget = config.max_instances
    suite = SuiteResult("lax-roundtrips")
    functors = test_functors()
    pool = list(H.objects_upto(min(config.max_width, 2)))
    tuples = source_tuples(pool, min(config.max_tuple_length, 3),
                           config.max_arity)
    uh = underlying(H, DEFAULT_KAPPA)

    def coherence_instances():
        for F in functors:
            yield F

    def check_coherence(F):
        problems = check_lax_coherence(F, max_width=min(config.max_width, 2))
        if problems:
            return {"law": "functor_coherence", "functor": F.name,
                    "problems": problems[:2]}
        return None

    suite.laws.append(run_law("functor_coherence", coherence_instances(),
                              check_coherence, budget))

    def lax_roundtrip_instances():
        for F in functors:
            back = multifunctor_to_lax(lax_to_multifunctor(F, validate=False))
            yield F, back, None, None
            for a in pool:
                for b in pool:
                    yield F, back, ("xi", a, b), None
                    for f in H.hom(a, b):
                        yield F, back, ("mor", f), None

    def check_lax_roundtrip(item):
        F, back, probe, _ = item
        if probe is None:
            if back.eta != F.eta:
                return {"law": "roundtrip_lax", "functor": F.name, "part": "eta"}
            return None
        if probe[0] == "xi":
            _, a, b = probe
            if back.xi(a, b) != F.xi(a, b):
                return {"law": "roundtrip_lax", "functor": F.name, "part": "xi"}
            return None
        _, f = probe
        if back.mor_map(f) != F.mor_map(f) or back.obj_map(f.source) != F.obj_map(f.source):
            return {"law": "roundtrip_lax", "functor": F.name, "part": "mor"}
        return None

    suite.laws.append(run_law("roundtrip_lax", lax_roundtrip_instances(),
                              check_lax_roundtrip, budget))

    def multi_roundtrip_instances():
        for F in functors:
            fh = lax_to_multifunctor(F, validate=False)
            back = lax_to_multifunctor(multifunctor_to_lax(fh), validate=False)
            for xs in tuples:
                for y in uh.targets(tuple_level(xs), config.max_width):
                    for arrow in uh.hom(xs, y):
                        yield F, fh, back, arrow

    def check_multi_roundtrip(item):
        F, fh, back, arrow = item
        if back.on_arrow(arrow) != fh.on_arrow(arrow):
            return {"law": "roundtrip_multifunctor", "functor": F.name,
                    "arrow": arrow.to_json()}
        return None

    suite.laws.append(run_law("roundtrip_multifunctor",
                              multi_roundtrip_instances(),
                              check_multi_roundtrip, budget))

    # tower squares: binary split
    def split_instances():
        for F in functors:
            for j in range(1, min(config.max_tuple_length, 4) + 1):
                for q in range(0, j + 1):
                    for xs in itertools.product(pool, repeat=j):
                        yield F, q, j - q, xs

    def check_split(item):
        F, q, r, xs = item
        j = q + r
        xs = tuple(xs)
        head, tail = xs[:q], xs[q:]
        split_recipe = gamma_y(Y_M, (default_kappa(q), default_kappa(r)))
        phi_c = eval_can_iso(H, default_kappa(j), split_recipe, xs)
        fxs = tuple(F.obj_map(x) for x in xs)
        phi_d = eval_can_iso(H, default_kappa(j), split_recipe, fxs)
        lhs = H.compose(F.mor_map(phi_c), xi_tower(F, xs))
        kb_head = eval_obj(H, default_kappa(q), head)
        kb_tail = eval_obj(H, default_kappa(r), tail)
        rhs = H.compose(
            F.xi(kb_head, kb_tail),
            H.compose(H.tensor_mor(xi_tower(F, head), xi_tower(F, tail)),
                      phi_d))
        if lhs != rhs:
            return {"law": "tower_split_square", "functor": F.name,
                    "split": [q, r], "inputs": _as_json(xs)}
        return None

    suite.laws.append(run_law("tower_split_square", split_instances(),
                              check_split, budget))

    def multi_split_instances():
        for F in functors:
            for j in range(0, min(config.max_tuple_length, 4) + 1):
                for n in range(1, 4):
                    for sizes in itertools.product(range(0, j + 1), repeat=n):
                        if sum(sizes) != j:
                            continue
                        for xs in itertools.product(pool, repeat=j):
                            yield F, sizes, xs

    def check_multi_split(item):
        F, sizes, xs = item
        xs = tuple(xs)
        n = len(sizes)
        j = len(xs)
        grouped_recipe = gamma_y(default_kappa(n),
                                 tuple(default_kappa(k) for k in sizes))
        phi_c = eval_can_iso(H, default_kappa(j), grouped_recipe, xs)
        fxs = tuple(F.obj_map(x) for x in xs)
        phi_d = eval_can_iso(H, default_kappa(j), grouped_recipe, fxs)
        chunks = []
        pos = 0
        for k in sizes:
            chunks.append(xs[pos:pos + k])
            pos += k
        towers = tuple(xi_tower(F, chunk) for chunk in chunks)
        kb_chunks = tuple(eval_obj(H, default_kappa(len(c)), c) for c in chunks)
        lhs = H.compose(F.mor_map(phi_c), xi_tower(F, xs))
        rhs = H.compose(
            xi_tower(F, kb_chunks),
            H.compose(eval_obj_mor(H, default_kappa(n), towers), phi_d))
        if lhs != rhs:
            return {"law": "tower_grouping_square", "functor": F.name,
                    "sizes": list(sizes)}
        return None

    suite.laws.append(run_law("tower_grouping_square", multi_split_instances(),
                              check_multi_split, budget))
    return suite




# --------------------------------------------------------------------------
# adjunction suite
# --------------------------------------------------------------------------

def suite_adjunction(config: SuiteConfig, drop_sort: bool = False) -> SuiteResult:
    config = config.validated()
    small = shrink(config, max_width=min(config.max_width, 2))
    suite = SuiteResult("adjunction")
    m = underlying(H, DEFAULT_KAPPA)
    triangles = triangle_checks(m, H, small, drop_sort=drop_sort)
    suite.laws.extend(triangles.laws)
    if not drop_sort:
        suite.laws.extend(nu_checks(H, small))
        functors = test_functors()
        suite.laws.extend(xi_cell_checks(functors, small))
        pairs = [(functors[0], functors[0]), (functors[1], functors[1]),
                 (functors[1], functors[2]), (functors[2], functors[2])]
        suite.laws.extend(pasting_checks(pairs, small))
        suite.laws.extend(comonad_checks(H, small))

        # the free permutative category is itself a lawful instance with
        # identity associator, and the counit over it has identity comparisons
        lm = free_permutative(m)
        tiny = shrink(small, max_width=1, max_instances=min(config.max_instances, 4000))
        lm_suite = suite_smc_laws(lm, tiny, "lm-smc-laws", with_can_iso=False)
        for law in lm_suite.laws:
            law.name = f"lm_{law.name}"
        suite.laws.extend(lm_suite.laws)

        eps_lm = counit_eps(lm)

        def strict_instances():
            lm_pool = list(lm.objects_upto(1))
            lists = [()] + [(x,) for x in lm_pool] + [
                (x, y2) for x in lm_pool for y2 in lm_pool]
            for a in lists:
                for b in lists:
                    yield a, b

        def check_strict(item):
            a, b = item
            comp = eps_lm.xi(a, b)
            if comp != lm.id(comp.source) or comp.source != comp.target:
                return {"law": "counit_strict_on_permutative"}
            return None

        suite.laws.append(run_law("counit_strict_on_permutative",
                                  strict_instances(), check_strict,
                                  config.max_instances))
    return suite


# --------------------------------------------------------------------------
# mutation suites and the verify driver
# --------------------------------------------------------------------------

def mutated_suite(fault: str, config: SuiteConfig) -> SuiteResult:
    """Run the suite corresponding to a deliberately injected fault."""
    small = shrink(config, max_width=min(config.max_width, 2),
                   max_tuple_length=min(config.max_tuple_length, 3),
                   max_instances=min(config.max_instances, 4000))
    if fault == "gamma-phi":
        broken = underlying(H, DEFAULT_KAPPA)
        broken._drop_phi = True
        out = law_suite(broken, small)
        out.name = "multicat-default[fault:gamma-phi]"
        return out
    if fault == "equiv-block":
        out = law_suite(underlying(H, DEFAULT_KAPPA), small, drop_block_perm=True)
        out.name = "multicat-default[fault:equiv-block]"
        return out
    if fault == "eps-sort":
        out = suite_adjunction(small, drop_sort=True)
        out.name = "adjunction[fault:eps-sort]"
        return out
    raise StructuralError(f"unknown fault {fault!r}; choose from {FAULTS}")


def run_verify(config: SuiteConfig, fault: str | None = None) -> list:
    """All suites in a fixed order; a fault replaces its healthy counterpart."""
    config = config.validated()
    suites = []
    suites.append(suite_smc_laws(H, config, "h-smc-laws",
                                 with_perm_identities=True))
    suites.append(suite_y_operad(config))
    for name in config.kappa_choice:
        kappa = resolve_kappa(name)
        if fault in ("gamma-phi", "equiv-block") and kappa.name == "default":
            suites.append(mutated_suite(fault, config))
        else:
            suites.append(law_suite(underlying(H, kappa), config))
    suites.append(suite_kappa_coherence(config))
    suites.append(suite_roundtrips(config))
    if fault == "eps-sort":
        suites.append(mutated_suite(fault, config))
    else:
        suites.append(suite_adjunction(config))
    if fault in ("gamma-phi", "equiv-block") and "default" not in [
            resolve_kappa(n).name for n in config.kappa_choice]:
        suites.append(mutated_suite(fault, config))
    return suites
