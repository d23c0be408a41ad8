"""Command-line surface.

Exit codes: 0 for success or a positive verdict, 1 for a negative
outcome (false evaluation, failed verdict, missing root pair, no
separating formula found, counterexamples found, suite failures), 2 for
usage or input errors, which are reported on stderr.

Formula arguments are taken inline; an argument of the form @PATH reads
the formula text from that file instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .asimulation import (
    Asimulation,
    DirectedPair,
    _pair_sort_key,
    _seq_sort_key,
    asim_to_dict,
    check_asimulation,
    check_k_asimulation,
    distinguishing_formula,
    load_asimulation,
    load_seq_asimulation,
    maximal_asimulation,
    seq_asim_to_dict,
)
from .classes import (
    AXIOM_SETS,
    kappa_invariance_test,
    load_axioms,
    modal_companion_search,
    satisfies_axioms,
)
from .genmod import check_generated, gen_conditions, gen_st, parse_signature
from .harness import SUITE_NAMES, run_suite, write_report
from .kripke import load_model
from .semantics import Variant, eval_fol, eval_modal
from .syntax import ParseError, format_fol, format_modal, parse_fol, parse_modal
from .translate import translate
from .types import (
    canonical_asimulation,
    canonical_k_asimulation,
    enumerate_pool,
    make_pools,
)


class _UsageError(Exception):
    pass


def _variant(text: str, allow_basic: bool = False) -> Optional[Variant]:
    if allow_basic and text == "basic":
        return None
    if text not in ("11", "12", "21", "22"):
        raise _UsageError(
            f"bad variant {text!r}: expected 11, 12, 21 or 22"
            + (" or basic" if allow_basic else "")
        )
    return Variant.from_code(text)


def _formula_text(arg: str) -> str:
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return arg


def _world(M, text: str, label: str):
    if text in M.worlds:
        return text
    # integer world ids arrive as text on the command line
    try:
        n = int(text)
    except ValueError:
        n = None
    if n is not None and n in M.worlds:
        return n
    raise _UsageError(f"{label}={text!r} is not a world of its model")


def _axiom_spec(args):
    if getattr(args, "axiom_file", None):
        return load_axioms(args.axiom_file)
    name = getattr(args, "axioms", "none")
    if name not in AXIOM_SETS:
        raise _UsageError(
            f"unknown axiom set {name!r}; known: {', '.join(sorted(AXIOM_SETS))}"
        )
    return AXIOM_SETS[name]


# ---------------------------------------------------------------------------
# subcommand bodies; each returns the exit status
# ---------------------------------------------------------------------------


def _cmd_translate(args) -> int:
    v = _variant(args.variant)
    f = parse_modal(_formula_text(args.formula))
    print(format_fol(translate(f, v, args.var)))
    return 0


def _cmd_eval(args) -> int:
    M = load_model(args.model)
    if args.fol:
        f = parse_fol(_formula_text(args.formula))
        env = {}
        for item in args.bind or []:
            var, eq, world = item.partition("=")
            if not eq or not var or not world:
                raise _UsageError(f"bad --bind {item!r}: expected VAR=WORLD")
            env[var] = _world(M, world, var)
        value = eval_fol(M, env, f)
    else:
        if args.variant is None:
            raise _UsageError("--variant is required for modal evaluation")
        if args.world is None:
            raise _UsageError("--world is required for modal evaluation")
        v = _variant(args.variant)
        f = parse_modal(_formula_text(args.formula))
        value = eval_modal(M, _world(M, args.world, "world"), f, v)
    print("true" if value else "false")
    return 0 if value else 1


def _load_pair(args):
    M1 = load_model(args.m1)
    M2 = load_model(args.m2)
    t = _world(M1, args.t, "t")
    u = _world(M2, args.u, "u")
    return M1, t, M2, u


def _print_verdict(verdict) -> int:
    if verdict.ok:
        print("ok")
        return 0
    for v in verdict.violations:
        print(str(v))
    return 1


def _cmd_check_asim(args) -> int:
    v = _variant(args.variant, allow_basic=True)
    M1, t, M2, u = _load_pair(args)
    rel = load_asimulation(args.rel)
    return _print_verdict(check_asimulation(M1, t, M2, u, v, rel))


def _cmd_check_kasim(args) -> int:
    v = _variant(args.variant, allow_basic=True)
    M1, t, M2, u = _load_pair(args)
    rel = load_seq_asimulation(args.rel)
    return _print_verdict(check_k_asimulation(M1, t, M2, u, args.k, v, rel))


def _print_relation(relA, relB) -> None:
    print("relA:")
    for p in sorted(relA, key=_pair_sort_key):
        print(f"  {p}")
    if relB is not None:
        print("relB:")
        for p in sorted(relB, key=_pair_sort_key):
            print(f"  {p}")


def _cmd_max_asim(args) -> int:
    v = _variant(args.variant, allow_basic=True)
    M1, t, M2, u = _load_pair(args)
    rel, contains_root = maximal_asimulation(M1, t, M2, u, v)
    _print_relation(rel.relA, rel.relB)
    print(f"contains_root: {'true' if contains_root else 'false'}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(asim_to_dict(rel), fh, indent=2)
            fh.write("\n")
    return 0 if contains_root else 1


def _cmd_distinguish(args) -> int:
    v = _variant(args.variant)
    M1, t, M2, u = _load_pair(args)
    f = distinguishing_formula(M1, t, M2, u, v, args.max_depth)
    if f is None:
        print("none")
        return 1
    print(format_modal(f))
    return 0


def _cmd_canonical(args) -> int:
    v = _variant(args.variant)
    M1, t, M2, u = _load_pair(args)
    if (args.k is None) == (args.bound is None):
        raise _UsageError("exactly one of --k and --bound is required")
    if args.k is not None:
        pools = make_pools(M1, M2, args.k, v)
        rel = canonical_k_asimulation(M1, t, M2, u, args.k, v, pools)
        print("relA:")
        for p in sorted(rel.relA, key=_seq_sort_key):
            print(f"  {p}")
        if rel.relB is not None:
            print("relB:")
            for p in sorted(rel.relB, key=_seq_sort_key):
                print(f"  {p}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(seq_asim_to_dict(rel), fh, indent=2)
                fh.write("\n")
    else:
        rel, stabilized = canonical_asimulation(M1, t, M2, u, v, args.bound)
        _print_relation(rel.relA, rel.relB)
        print(f"stabilized: {'true' if stabilized else 'false'}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(asim_to_dict(rel), fh, indent=2)
                fh.write("\n")
    return 0


def _cmd_gen_st(args) -> int:
    sig = parse_signature(args.signature)
    v = _variant(args.variant)
    f = parse_modal(_formula_text(args.formula))
    print(format_fol(gen_st(sig, f, args.var, variant=v)))
    return 0


def _cmd_gen_conditions(args) -> int:
    sig = parse_signature(args.signature)
    for schema in gen_conditions(sig):
        print(str(schema))
    return 0


def _cmd_check_gen(args) -> int:
    sig = parse_signature(args.signature)
    M1, t, M2, u = _load_pair(args)
    with open(args.rels, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "relations" not in data:
        raise _UsageError(f"{args.rels}: expected an object with a 'relations' key")
    raw = data["relations"]
    if not isinstance(raw, list):
        raise _UsageError(f"{args.rels}: 'relations' must be an array of pair arrays")
    relations = []
    for docs in raw:
        pairs = set()
        for doc in docs:
            try:
                pairs.add(DirectedPair(doc["dir"], doc["from"], doc["to"]))
            except (TypeError, KeyError, ValueError) as exc:
                raise _UsageError(f"{args.rels}: bad pair {doc!r}: {exc}")
        relations.append(frozenset(pairs))
    return _print_verdict(check_generated(M1, t, M2, u, sig, tuple(relations)))


def _load_corpus(paths) -> list:
    return [load_model(p) for p in paths]


def _cmd_kappa_test(args) -> int:
    v = _variant(args.variant)
    spec = _axiom_spec(args)
    phi = parse_fol(_formula_text(args.phi))
    corpus = _load_corpus(args.models)
    hits = kappa_invariance_test(phi, corpus, spec, v)
    if not hits:
        print("none")
        return 0
    for c in hits:
        print(str(c))
    return 1


def _cmd_companion(args) -> int:
    v = _variant(args.variant)
    spec = _axiom_spec(args)
    phi = parse_fol(_formula_text(args.phi))
    corpus = _load_corpus(args.models)
    filtered = [M for M in corpus if satisfies_axioms(M, spec)]
    sig = frozenset().union(*(M.letters() for M in filtered)) if filtered else frozenset()
    pool = enumerate_pool(sig, v, args.degree_bound, tuple(filtered) or tuple(corpus))
    ranked = modal_companion_search(phi, corpus, spec, v, pool)
    for f, agreement in ranked[: args.top]:
        print(f"{format_modal(f)}\t{agreement}")
    return 0


def _cmd_suite(args) -> int:
    bounds = {}
    for item in args.bound or []:
        key, eq, value = item.partition("=")
        if not eq or not key:
            raise _UsageError(f"bad --bound {item!r}: expected KEY=VALUE")
        try:
            bounds[key] = int(value)
        except ValueError:
            raise _UsageError(f"bad --bound {item!r}: value must be an integer")
    try:
        report = run_suite(args.name, args.trials, args.seed, bounds or None)
    except ValueError as exc:
        raise _UsageError(str(exc))
    sys.stdout.write(report.body())
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    if args.report_dir:
        for path in write_report(report, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------


def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m1", required=True, help="first model JSON file")
    p.add_argument("--t", required=True, help="world of the first model")
    p.add_argument("--m2", required=True, help="second model JSON file")
    p.add_argument("--u", required=True, help="world of the second model")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="asimkit",
        description="Standard translations and asimulations for modal "
        "intuitionistic logic over two-relation frames.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="translate a modal formula to FOL")
    p.add_argument("--variant", required=True, help="clause system: 11, 12, 21 or 22")
    p.add_argument("--var", default="x", help="free entry variable (default x)")
    p.add_argument("formula", help="modal formula, or @FILE")
    p.set_defaults(fn=_cmd_translate)

    p = sub.add_parser("eval", help="evaluate a formula on a model")
    p.add_argument("--model", required=True, help="model JSON file")
    p.add_argument("--world", help="world for modal evaluation")
    p.add_argument("--variant", help="clause system for modal evaluation")
    p.add_argument("--fol", action="store_true", help="treat the formula as FOL")
    p.add_argument(
        "--bind",
        action="append",
        metavar="VAR=WORLD",
        help="bind a free FOL variable (repeatable)",
    )
    p.add_argument("formula", help="formula, or @FILE")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("check-asim", help="check a relation against the conditions")
    p.add_argument("--variant", required=True, help="11, 12, 21, 22 or basic")
    _add_pair_args(p)
    p.add_argument("--rel", required=True, help="relation JSON file")
    p.set_defaults(fn=_cmd_check_asim)

    p = sub.add_parser("check-kasim", help="check a bounded sequence relation")
    p.add_argument("--variant", required=True, help="11, 12, 21, 22 or basic")
    _add_pair_args(p)
    p.add_argument("--k", required=True, type=int, help="rank bound")
    p.add_argument("--rel", required=True, help="sequence relation JSON file")
    p.set_defaults(fn=_cmd_check_kasim)

    p = sub.add_parser("max-asim", help="largest relation satisfying the conditions")
    p.add_argument("--variant", required=True, help="11, 12, 21, 22 or basic")
    _add_pair_args(p)
    p.add_argument("--out", help="write the relation as JSON to this file")
    p.set_defaults(fn=_cmd_max_asim)

    p = sub.add_parser("distinguish", help="search for a separating modal formula")
    p.add_argument("--variant", required=True, help="11, 12, 21 or 22")
    _add_pair_args(p)
    p.add_argument("--max-depth", type=int, default=6, help="connective depth cap")
    p.set_defaults(fn=_cmd_distinguish)

    p = sub.add_parser("canonical", help="type-set based canonical relations")
    p.add_argument("--variant", required=True, help="11, 12, 21 or 22")
    _add_pair_args(p)
    p.add_argument("--k", type=int, help="rank bound for the sequence form")
    p.add_argument("--bound", type=int, help="stabilization bound for the plain form")
    p.add_argument("--out", help="write the relation as JSON to this file")
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("gen-st", help="translation under a generalized modality")
    p.add_argument("--signature", required=True, help='prefix, e.g. "A:R;A:Rb"')
    p.add_argument("--variant", default="22", help="clause system for the body")
    p.add_argument("--var", default="x", help="free entry variable (default x)")
    p.add_argument("formula", help="modal argument formula, or @FILE")
    p.set_defaults(fn=_cmd_gen_st)

    p = sub.add_parser("gen-conditions", help="condition schemas for a signature")
    p.add_argument("--signature", required=True, help='prefix, e.g. "A:R;E:Rd"')
    p.set_defaults(fn=_cmd_gen_conditions)

    p = sub.add_parser("check-gen", help="check relations against generated schemas")
    p.add_argument("--signature", required=True, help='prefix, e.g. "A:R;E:Rd"')
    _add_pair_args(p)
    p.add_argument(
        "--rels",
        required=True,
        help='JSON file {"relations": [[{"dir","from","to"}, ...], ...]}',
    )
    p.set_defaults(fn=_cmd_check_gen)

    p = sub.add_parser("kappa-test", help="invariance counterexamples over a corpus")
    p.add_argument("--variant", required=True, help="11, 12, 21 or 22")
    p.add_argument("--phi", required=True, help="FOL formula with one free variable")
    p.add_argument("--models", required=True, nargs="+", help="corpus model files")
    p.add_argument("--axioms", default="none", help="named axiom set")
    p.add_argument("--axiom-file", help="axiom file overriding --axioms")
    p.set_defaults(fn=_cmd_kappa_test)

    p = sub.add_parser("companion", help="closest modal translations to a FOL formula")
    p.add_argument("--variant", required=True, help="11, 12, 21 or 22")
    p.add_argument("--phi", required=True, help="FOL formula with one free variable")
    p.add_argument("--models", required=True, nargs="+", help="corpus model files")
    p.add_argument("--axioms", default="none", help="named axiom set")
    p.add_argument("--axiom-file", help="axiom file overriding --axioms")
    p.add_argument("--degree-bound", type=int, default=2, help="candidate pool bound")
    p.add_argument("--top", type=int, default=5, help="how many candidates to print")
    p.set_defaults(fn=_cmd_companion)

    p = sub.add_parser("suite", help="run a named property suite")
    p.add_argument("--name", required=True, help=f"one of: {', '.join(SUITE_NAMES)}")
    p.add_argument("--trials", type=int, help="trial count (suite default if omitted)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--report-dir", help="directory for report files and figure")
    p.add_argument(
        "--bound",
        action="append",
        metavar="KEY=VALUE",
        help="override a suite size bound (repeatable)",
    )
    p.set_defaults(fn=_cmd_suite)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
