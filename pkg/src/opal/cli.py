"""Command-line surface: verify, hom, eval, export.

Exit codes: 0 all checks pass, 1 at least one law failure, 2 usage or parse
errors.  Reports are byte-deterministic for a fixed configuration and seed;
human-readable progress goes to stderr when machine output is requested.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .adjunction import counit_eps
from .config import ConfigError, SuiteConfig, load_config
from .errors import StructuralError
from .freeperm import free_permutative
from .hcat import H
from .multicat import underlying
from .operad_y import (DEFAULT_KAPPA, YObject, default_kappa, generators,
                       resolve_kappa, right_nested_kappa)
from .report import human_lines, report_bytes, write_report
from .shapes import ZObject, enumerate_parens, _tree_json, z_objects
from .smc import eval_can_iso, eval_obj, hom_dot
from .suites import FAULTS, run_verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opal",
        description="machine checks for monoidal coherence, underlying "
                    "multicategories, and the free permutative strictification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the full law suites")
    _bounds_flags(verify)
    verify.add_argument("--kappa", action="append", default=None,
                        help="recipe family: default, exotic, right-nested, "
                             "or file:PATH (repeatable)")
    verify.add_argument("--json", action="store_true",
                        help="print the canonical JSON report on stdout")
    verify.add_argument("--report-dir", default=None,
                        help="write report.json, suites.csv, and suites.png here")
    verify.add_argument("--inject-fault", choices=FAULTS, default=None,
                        help="run with a deliberately corrupted construction "
                             "(mutation testing aid; must exit 1)")

    hom = sub.add_parser("hom", help="list a hom-set as JSON lines")
    hom.add_argument("--category", choices=("h", "ukh", "lm"), default="h")
    hom.add_argument("--kappa", default="default")
    hom.add_argument("--dot", action="store_true", help="emit a DOT digraph instead")
    hom.add_argument("source", help="JSON object descriptor (or array for tuples)")
    hom.add_argument("target", help="JSON object descriptor")

    ev = sub.add_parser("eval", help="evaluate recipes on word objects")
    ev.add_argument("recipe", help="recipe JSON")
    ev.add_argument("inputs", help="JSON array of word objects")
    ev.add_argument("second", nargs="?", default=None,
                    help="optional second recipe: emit the coherence morphism")

    ex = sub.add_parser("export", help="export structures as JSON lines")
    ex_sub = ex.add_subparsers(dest="what", required=True)
    p = ex_sub.add_parser("parens", help="all parenthesizations of a width")
    p.add_argument("--width", type=int, required=True)
    o = ex_sub.add_parser("objects", help="word objects up to a width")
    o.add_argument("--width", type=int, required=True)
    k = ex_sub.add_parser("kappa", help="a constant family's recipe at an arity")
    k.add_argument("--arity", type=int, required=True)
    k.add_argument("--kappa", default="default")
    k.add_argument("--args", default=None,
                   help="JSON array of word objects, for tuple-dependent families")
    ex_sub.add_parser("generators", help="the three generating recipes")
    return parser


def _bounds_flags(cmd):
    cmd.add_argument("--max-tuple-length", type=int, default=None)
    cmd.add_argument("--max-width", type=int, default=None)
    cmd.add_argument("--max-arity", type=int, default=None)
    cmd.add_argument("--max-instances", type=int, default=None)
    cmd.add_argument("--seed", type=int, default=None)


def _config_from(ns) -> SuiteConfig:
    overrides = {
        "max_tuple_length": ns.max_tuple_length,
        "max_width": ns.max_width,
        "max_arity": ns.max_arity,
        "max_instances": ns.max_instances,
        "seed": ns.seed,
        "kappa_choice": tuple(ns.kappa) if ns.kappa else None,
    }
    return load_config(overrides)


def cmd_verify(ns) -> int:
    try:
        config = _config_from(ns)
        for name in config.kappa_choice:
            resolve_kappa(name)
    except (ConfigError, StructuralError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    suites = run_verify(config, fault=ns.inject_fault)
    lines_out = sys.stderr if ns.json else sys.stdout
    for line in human_lines(suites):
        print(line, file=lines_out)
    if ns.json:
        sys.stdout.buffer.write(report_bytes(suites, config))
    if ns.report_dir:
        write_report(suites, config, Path(ns.report_dir))
    return 0 if all(s.passed for s in suites) else 1


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc


def _zobject(data) -> ZObject:
    return ZObject.from_json(data)


def _ztuple(data) -> tuple:
    if not isinstance(data, list):
        raise StructuralError("expected a JSON array of word objects")
    return tuple(ZObject.from_json(d) for d in data)


def cmd_hom(ns) -> int:
    try:
        if ns.category == "h":
            a = _zobject(_load_json(ns.source))
            b = _zobject(_load_json(ns.target))
            if ns.dot:
                print(hom_dot(H, a, b))
                return 0
            for f in H.hom(a, b):
                print(json.dumps(f.to_json(), sort_keys=True))
            return 0
        if ns.category == "ukh":
            xs = _ztuple(_load_json(ns.source))
            y = _zobject(_load_json(ns.target))
            u = underlying(H, resolve_kappa(ns.kappa))
            for arrow in u.hom(xs, y):
                print(json.dumps(arrow.to_json(), sort_keys=True))
            return 0
        xs = _ztuple(_load_json(ns.source))
        ys = _ztuple(_load_json(ns.target))
        lm = free_permutative(underlying(H, resolve_kappa(ns.kappa)))
        for mor in lm.hom(xs, ys):
            print(json.dumps(mor.to_json(), sort_keys=True))
        return 0
    except (StructuralError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cmd_eval(ns) -> int:
    try:
        recipe = YObject.from_json(_load_json(ns.recipe))
        xs = _ztuple(_load_json(ns.inputs))
        if ns.second is None:
            out = eval_obj(H, recipe, xs)
            print(json.dumps(out.to_json(), sort_keys=True))
            return 0
        second = YObject.from_json(_load_json(ns.second))
        mor = eval_can_iso(H, recipe, second, xs)
        print(json.dumps(mor.to_json(), sort_keys=True))
        return 0
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cmd_export(ns) -> int:
    try:
        if ns.what == "parens":
            for tree in enumerate_parens(ns.width):
                print(json.dumps(_tree_json(tree)))
            return 0
        if ns.what == "objects":
            for z in z_objects(ns.width):
                print(json.dumps(z.to_json(), sort_keys=True))
            return 0
        if ns.what == "generators":
            for y in generators():
                print(json.dumps(y.to_json(), sort_keys=True))
            return 0
        family = resolve_kappa(ns.kappa)
        if ns.args is not None:
            xs = _ztuple(_load_json(ns.args))
            if len(xs) != ns.arity:
                raise StructuralError(
                    f"--args has {len(xs)} entries but --arity is {ns.arity}")
            print(json.dumps(family(xs).to_json(), sort_keys=True))
            return 0
        if family.name == "exotic":
            raise StructuralError("the exotic family needs --args (it is tuple-dependent)")
        print(json.dumps(family.fn(ns.arity, ()).to_json(), sort_keys=True))
        return 0
    except (StructuralError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "verify":
        return cmd_verify(ns)
    if ns.command == "hom":
        return cmd_hom(ns)
    if ns.command == "eval":
        return cmd_eval(ns)
    return cmd_export(ns)


if __name__ == "__main__":
    sys.exit(main())
