"""Symmetric monoidal instances and evaluation of tensoring recipes.

``eval_obj`` applies a recipe to a tuple of objects; ``eval_obj_mor`` applies
it to a tuple of morphisms.  ``eval_can_iso`` produces the coherence
isomorphism between two recipes evaluated at the same tuple by normalizing
both sides to the left-nested form through generated associator /
transposition / unitor moves and composing one normalization with the
inverse of the other.  Normalizations are cached per instance, keyed on the
recipe and the argument tuple, because the law suites revisit the same shapes
with many different payloads.
"""

from __future__ import annotations

from typing import Sequence

from .errors import StructuralError
from .operad_y import YObject, default_kappa
from .shapes import is_leaf


class SmcInstance:
    """Strategy object for a symmetric monoidal category with decidable equality.

    Subclasses provide identities, composition, the tensor on objects and
    morphisms, the unit object, the associator and its inverse, the
    transposition, and the right unitor with its inverse.  The left unitor is
    derived (``runit . tau``), never primitive.  Morphism values must expose
    ``source`` and ``target`` attributes and compare by value.
    """

    name = "smc"
    #: True when every morphism of the instance is invertible; law suites use
    #: this to justify quantifier reductions.
    invertible_mors = False

    def __init__(self):
        self._norm_cache: dict = {}
        self._can_cache: dict = {}

    # structure ---------------------------------------------------------
    unit = None

    def id(self, a):
        raise NotImplementedError

    def compose(self, f, g):
        """f after g."""
        raise NotImplementedError

    def tensor_obj(self, a, b):
        raise NotImplementedError

    def tensor_mor(self, f, g):
        raise NotImplementedError

    def alpha(self, a, b, c):
        """(a + b) + c -> a + (b + c)"""
        raise NotImplementedError

    def alpha_inv(self, a, b, c):
        raise NotImplementedError

    def tau(self, a, b):
        """a + b -> b + a"""
        raise NotImplementedError

    def runit(self, a):
        """a + e -> a"""
        raise NotImplementedError

    def runit_inv(self, a):
        raise NotImplementedError

    # derived -----------------------------------------------------------
    def lunit(self, a):
        """e + a -> a, derived as runit after tau."""
        return self.compose(self.runit(a), self.tau(self.unit, a))

    def lunit_inv(self, a):
        return self.compose(self.tau(a, self.unit), self.runit_inv(a))

    # optional enumeration hooks, used by law suites ---------------------
    def objects_upto(self, max_width):
        raise NotImplementedError

    def hom(self, a, b):
        raise NotImplementedError

    def targets_with_arity(self, arity, max_width):
        raise NotImplementedError

    def mor_inverse(self, f):
        raise NotImplementedError


def eval_obj(inst: SmcInstance, y: YObject, xs: Sequence):
    """Apply a recipe to a tuple of objects of the instance."""
    xs = tuple(xs)
    if len(xs) != y.arity:
        raise StructuralError(f"recipe arity {y.arity} applied to {len(xs)} objects")
    inv = y.sigma.inverse()
    slot_of = {leaf: i for i, leaf in enumerate(y.z.marks, start=1)}
    counter = 0

    def rec(tree):
        nonlocal counter
        if is_leaf(tree):
            counter += 1
            slot = slot_of.get(counter)
            if slot is None:
                return inst.unit
            return xs[inv(slot) - 1]
        return inst.tensor_obj(rec(tree[0]), rec(tree[1]))

    return rec(y.z.tree)


def eval_obj_mor(inst: SmcInstance, y: YObject, fs: Sequence):
    """Apply a recipe to a tuple of morphisms, giving the induced morphism."""
    fs = tuple(fs)
    if len(fs) != y.arity:
        raise StructuralError(f"recipe arity {y.arity} applied to {len(fs)} morphisms")
    inv = y.sigma.inverse()
    slot_of = {leaf: i for i, leaf in enumerate(y.z.marks, start=1)}
    counter = 0

    def rec(tree):
        nonlocal counter
        if is_leaf(tree):
            counter += 1
            slot = slot_of.get(counter)
            if slot is None:
                return inst.id(inst.unit)
            return fs[inv(slot) - 1]
        return inst.tensor_mor(rec(tree[0]), rec(tree[1]))

    return rec(y.z.tree)


def _nest(inst, vals):
    if not vals:
        return inst.unit
    obj = vals[0]
    for v in vals[1:]:
        obj = inst.tensor_obj(obj, v)
    return obj


def _attach(inst, left_obj, rvals):
    """Flatten ``left_obj + leftnested(rvals)`` into a single left-nested word."""
    last = rvals[-1]
    if len(rvals) == 1:
        obj = inst.tensor_obj(left_obj, last)
        ident = inst.id(obj)
        return ident, ident, obj
    init = rvals[:-1]
    init_obj = _nest(inst, init)
    down = inst.alpha_inv(left_obj, init_obj, last)
    up = inst.alpha(left_obj, init_obj, last)
    f_rec, b_rec, inner = _attach(inst, left_obj, init)
    id_last = inst.id(last)
    fwd = inst.compose(inst.tensor_mor(f_rec, id_last), down)
    bwd = inst.compose(up, inst.tensor_mor(b_rec, id_last))
    return fwd, bwd, inst.tensor_obj(inner, last)


def _merge(inst, left_obj, has_left, rvals):
    if not rvals:
        return inst.runit(left_obj), inst.runit_inv(left_obj), left_obj
    if not has_left:
        robj = _nest(inst, rvals)
        return inst.lunit(robj), inst.lunit_inv(robj), robj
    return _attach(inst, left_obj, rvals)


def _sort_iso(inst, order, xs):
    """Bubble the variables of a left-nested word into increasing order."""
    cur = list(order)

    def vals(seq):
        return [xs[v - 1] for v in seq]

    obj = _nest(inst, vals(cur))
    fwd = inst.id(obj)
    bwd = fwd
    while True:
        pos = next((i for i in range(len(cur) - 1) if cur[i] > cur[i + 1]), None)
        if pos is None:
            return fwd, bwd
        u = xs[cur[pos] - 1]
        v = xs[cur[pos + 1] - 1]
        if pos == 0:
            mf = inst.tau(u, v)
            mb = inst.tau(v, u)
        else:
            head = _nest(inst, vals(cur[:pos]))
            id_head = inst.id(head)
            mf = inst.compose(
                inst.alpha_inv(head, v, u),
                inst.compose(inst.tensor_mor(id_head, inst.tau(u, v)),
                             inst.alpha(head, u, v)),
            )
            mb = inst.compose(
                inst.alpha_inv(head, u, v),
                inst.compose(inst.tensor_mor(id_head, inst.tau(v, u)),
                             inst.alpha(head, v, u)),
            )
        for w in vals(cur[pos + 2:]):
            idw = inst.id(w)
            mf = inst.tensor_mor(mf, idw)
            mb = inst.tensor_mor(mb, idw)
        fwd = inst.compose(mf, fwd)
        bwd = inst.compose(bwd, mb)
        cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]


def normal_iso(inst: SmcInstance, y: YObject, xs: Sequence):
    """The pair (to, from) between ``eval_obj(inst, y, xs)`` and its left-nested form."""
    xs = tuple(xs)
    key = (y, xs)
    hit = inst._norm_cache.get(key)
    if hit is not None:
        return hit
    if len(xs) != y.arity:
        raise StructuralError(f"recipe arity {y.arity} applied to {len(xs)} objects")
    inv = y.sigma.inverse()
    slot_of = {leaf: i for i, leaf in enumerate(y.z.marks, start=1)}
    unit = inst.unit
    id_unit = inst.id(unit)
    counter = 0

    def rec(tree):
        nonlocal counter
        if is_leaf(tree):
            counter += 1
            slot = slot_of.get(counter)
            if slot is None:
                return [], unit, id_unit, id_unit
            v = inv(slot)
            x = xs[v - 1]
            ident = inst.id(x)
            return [v], x, ident, ident
        ordL, nL, fL, bL = rec(tree[0])
        ordR, nR, fR, bR = rec(tree[1])
        f0 = inst.tensor_mor(fL, fR)
        b0 = inst.tensor_mor(bL, bR)
        mf, mb, obj = _merge(inst, nL, bool(ordL), [xs[v - 1] for v in ordR])
        return ordL + ordR, obj, inst.compose(mf, f0), inst.compose(b0, mb)

    order, _, fwd, bwd = rec(y.z.tree)
    sf, sb = _sort_iso(inst, order, xs)
    pair = (inst.compose(sf, fwd), inst.compose(bwd, sb))
    inst._norm_cache[key] = pair
    return pair


def eval_can_iso(inst: SmcInstance, a: YObject, b: YObject, xs: Sequence):
    """The coherence isomorphism ``eval_obj(a, xs) -> eval_obj(b, xs)``.

    Computed as the normalization of ``a`` followed by the reversed
    normalization of ``b``; coherence makes the result independent of the
    normalization path, which the law suites verify exhaustively on the
    decidable instances.
    """
    xs = tuple(xs)
    if a.arity != b.arity or len(xs) != a.arity:
        raise StructuralError(
            f"canonical isomorphism needs matching arities: {a.arity}, {b.arity}, {len(xs)} inputs"
        )
    key = (a, b, xs)
    hit = inst._can_cache.get(key)
    if hit is not None:
        return hit
    fwd_a, _ = normal_iso(inst, a, xs)
    _, bwd_b = normal_iso(inst, b, xs)
    out = inst.compose(bwd_b, fwd_a)
    inst._can_cache[key] = out
    return out


def left_nested_obj(inst: SmcInstance, xs: Sequence):
    """The default evaluation of a tuple: left-nested tensor, unit when empty."""
    return eval_obj(inst, default_kappa(len(xs)), xs)


def hom_dot(inst: SmcInstance, a, b, label=None) -> str:
    """Render a hom-set as a DOT digraph, one edge per morphism."""
    lines = ["digraph hom {"]
    lines.append('  rankdir=LR;')
    lines.append(f'  src [label="{_dot_label(a)}"];')
    lines.append(f'  tgt [label="{_dot_label(b)}"];')
    for f in inst.hom(a, b):
        lines.append(f'  src -> tgt [label="{_dot_label(getattr(f, "perm", f))}"];')
    lines.append("}")
    return "\n".join(lines)


def _dot_label(value) -> str:
    if hasattr(value, "to_json"):
        import json

        return json.dumps(value.to_json()).replace('"', "'")
    return str(value).replace('"', "'")
