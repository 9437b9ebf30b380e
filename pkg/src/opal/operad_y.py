"""The operad of tensoring recipes.

A :class:`YObject` of arity n is a marked word plus a permutation routing the
n arguments into the marked slots; evaluating it in a monoidal instance
produces one object from an n-tuple (see :mod:`opal.smc`).  Between any two
recipes of the same arity there is exactly one coherence morphism, so no
morphism data is ever stored; its value in an instance is
``smc.eval_can_iso``.

Routing convention (pinned by the evaluation contract tested in the suites):
marked slot i receives argument ``sigma^{-1}(i)``, the right action multiplies
on the right of sigma, and composite recipes assemble their permutation from
``block_perm`` and ``block_sum`` so that both operad equivariance identities
hold by construction.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import StructuralError
from .perms import Perm, all_perms, block_perm, block_sum
from .shapes import LEAF, Z_ATOM, Z_UNIT, ZObject, gamma_z, z_objects


class YObject(NamedTuple):
    z: ZObject
    sigma: Perm

    @property
    def arity(self) -> int:
        return len(self.sigma)

    @property
    def width(self) -> int:
        return self.z.width

    @classmethod
    def make(cls, z: ZObject, sigma: Perm) -> "YObject":
        if z.arity != len(sigma):
            raise StructuralError(
                f"marks count {z.arity} != permutation degree {len(sigma)}"
            )
        return cls(z, sigma)

    def to_json(self) -> dict:
        return {"z": self.z.to_json(), "sigma": list(self.sigma)}

    @classmethod
    def from_json(cls, data) -> "YObject":
        if not isinstance(data, dict) or "z" not in data or "sigma" not in data:
            raise StructuralError(f"expected a recipe object, got {data!r}")
        return cls.make(ZObject.from_json(data["z"]), Perm.from_images(data["sigma"]))


Y_ZERO = YObject(Z_UNIT, Perm())
Y_ONE = YObject(Z_ATOM, Perm((1,)))
Y_M = YObject(ZObject((LEAF, LEAF), (1, 2)), Perm((1, 2)))


def generators() -> tuple:
    """The nullary unit recipe, the identity recipe, and the binary product."""
    return Y_ZERO, Y_ONE, Y_M


def act_y(y: YObject, s: Perm) -> YObject:
    """Right action: evaluating the result on a reordered tuple undoes ``s``."""
    if s.degree != y.arity:
        raise StructuralError(
            f"degree {s.degree} does not act on arity {y.arity}"
        )
    return YObject(y.z, y.sigma.compose(s))


def gamma_y(base: YObject, parts: Sequence[YObject]) -> YObject:
    """Operadic substitution of recipes into a recipe.

    The parts are routed through the base permutation before grafting, and the
    composite permutation is ``block_perm(base.sigma, part arities)`` after the
    block sum of the part permutations.
    """
    if len(parts) != base.arity:
        raise StructuralError(
            f"substitution needs {base.arity} parts, got {len(parts)}"
        )
    routed = base.sigma.inverse().act_inverse(tuple(parts))
    z = gamma_z(base.z, tuple(p.z for p in routed))
    arities = tuple(p.arity for p in parts)
    sigma = block_perm(base.sigma, arities).compose(
        block_sum(p.sigma for p in parts)
    )
    return YObject(z, sigma)


@functools.lru_cache(maxsize=None)
def default_kappa(n: int) -> YObject:
    """The left-nested recipe: unit, identity, then m applied to (previous, 1)."""
    if n == 0:
        return Y_ZERO
    if n == 1:
        return Y_ONE
    if n == 2:
        return Y_M
    return gamma_y(Y_M, (default_kappa(n - 1), Y_ONE))


@functools.lru_cache(maxsize=None)
def right_nested_kappa(n: int) -> YObject:
    """Like :func:`default_kappa` but piling parentheses up to the right."""
    if n <= 2:
        return default_kappa(n)
    return gamma_y(Y_M, (Y_ONE, right_nested_kappa(n - 1)))


@dataclass(frozen=True)
class KappaFamily:
    """A per-arity choice of tensoring recipe, possibly depending on the tuple."""

    name: str
    fn: Callable[[int, tuple], YObject]

    def __call__(self, xs: Sequence) -> YObject:
        xs = tuple(xs)
        y = self.fn(len(xs), xs)
        if y.arity != len(xs):
            raise StructuralError(
                f"family {self.name} returned arity {y.arity} for {len(xs)} inputs"
            )
        return y


DEFAULT_KAPPA = KappaFamily("default", lambda n, xs: default_kappa(n))
RIGHT_NESTED_KAPPA = KappaFamily("right-nested", lambda n, xs: right_nested_kappa(n))


def exotic_kappa(n: int, xs: tuple) -> YObject:
    """A deliberately irregular recipe choice on marked-word objects.

    The word grafts each argument's full parenthesization (all slots marked)
    into a left-nested backbone, then marks only the first slot of every
    argument block, and finally twists by a transposition of the first two
    arguments when n is odd and of the last two when n is even.  It exists to
    flush out any hidden dependence on the left-nested default.
    """
    trees = tuple(ZObject(x.tree, tuple(range(1, x.width + 1))) for x in xs)
    delta = gamma_z(default_kappa(n).z, trees)
    marks = []
    pos = 1
    for x in xs:
        marks.append(pos)
        pos += x.width
    if n <= 1:
        sigma = Perm.identity(n)
    else:
        images = list(range(1, n + 1))
        if n % 2 == 1:
            images[0], images[1] = 2, 1
        else:
            images[-2], images[-1] = n, n - 1
        sigma = Perm(images)
    return YObject(ZObject(delta.tree, tuple(marks)), sigma)


EXOTIC_KAPPA = KappaFamily("exotic", exotic_kappa)


def kappa_from_file(path: str) -> KappaFamily:
    """Load a constant family from JSON mapping arity to a recipe object.

    Arities missing from the file fall back to the default family.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise StructuralError(f"kappa file {path} must hold an object")
    table = {int(k): YObject.from_json(v) for k, v in data.items()}
    for n, y in table.items():
        if y.arity != n:
            raise StructuralError(
                f"kappa file entry {n} has arity {y.arity}"
            )

    def fn(n, xs):
        return table.get(n, default_kappa(n))

    return KappaFamily(f"file:{path}", fn)


def resolve_kappa(name: str) -> KappaFamily:
    if name == "default":
        return DEFAULT_KAPPA
    if name == "exotic":
        return EXOTIC_KAPPA
    if name == "right-nested":
        return RIGHT_NESTED_KAPPA
    if name.startswith("file:"):
        return kappa_from_file(name[len("file:"):])
    raise StructuralError(f"unknown kappa family {name!r}")


def y_objects(max_width: int, max_arity: int) -> tuple:
    """All recipes with bounded word width and arity, deterministically ordered."""
    out = []
    for z in z_objects(max_width):
        if z.arity <= max_arity:
            for sigma in all_perms(z.arity):
                out.append(YObject(z, sigma))
    return tuple(out)
