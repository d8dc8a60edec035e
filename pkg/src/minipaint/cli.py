"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity
error, 4 internal error. Documents go to stdout (or ``-o``); diagnostics and
human-readable reports go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io
from .equivalence import flood_to_plan, plan_to_flood
from .errors import CapacityError, InputError, MiniPaintError
from .generators import KINDS, generate
from .graph import cogem_witnesses, induced_p4s, is_connected
from .oracle import DEPTH_CAP, flood_optimum, plan_optimum
from .painting import VerificationReport, color_lower_bound, verify_flood, verify_plan
from .solvers import ALGORITHMS, MAX_TAIL, SolveConfig, solve_with_report

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAPACITY, EXIT_INTERNAL = range(5)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _instance(path: str) -> io.Instance:
    return io.parse_instance(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _report(rep: VerificationReport, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(_json({"ok": rep.ok, "kind": rep.kind.value if rep.kind else None,
                                "index": rep.index, "message": rep.message}))
    elif rep.ok:
        print("ok")
    else:
        print(f"fail: {rep.kind.value}: {rep.message}")
    return EXIT_OK if rep.ok else EXIT_VERIFY


# -- subcommands ---------------------------------------------------------------


def cmd_solve(args) -> int:
    inst = _instance(args.instance)
    cfg_kw = {"algorithm": args.algorithm, "max_tail_k": args.max_tail}
    if args.threads:
        cfg_kw["threads"] = args.threads
    result = solve_with_report(inst.graph, inst.template, SolveConfig(**cfg_kw))
    length, bound = len(result.plan), result.lower_bound
    reason = "matches color lower bound" if length == bound else f"exact search, lower bound {bound}"
    if args.json:
        doc = json.loads(io.serialize_plan(result.plan, inst))
        doc.update({
            "length": length,
            "lower_bound": bound,
            "optimal": True,
            "components": [{
                "vertices": [inst.graph.label(v) for v in c.vertices],
                "algorithm": c.algorithm,
                "colors_used": c.colors_used,
                "length": c.length,
                "tail_k": c.tail_k,
                "hub": [inst.graph.label(v) for v in c.hub] if c.hub else None,
            } for c in result.components],
        })
        _emit(_json(doc), args.output)
    else:
        _emit(io.serialize_plan(result.plan, inst), args.output)
        print(f"length: {length}", file=sys.stderr)
        print(f"optimal: true ({reason})", file=sys.stderr)
    return EXIT_OK


def cmd_verify_plan(args) -> int:
    inst = _instance(args.instance)
    plan = io.parse_plan(_read(args.plan), inst)
    return _report(verify_plan(inst.graph, inst.template, plan), args.json)


def cmd_verify_flood(args) -> int:
    inst = _instance(args.instance)
    seq = io.parse_flood(_read(args.flood), inst)
    return _report(verify_flood(inst.graph, inst.template, seq), args.json)


def cmd_to_flood(args) -> int:
    inst = _instance(args.instance)
    plan = io.parse_plan(_read(args.plan), inst)
    _emit(io.serialize_flood(plan_to_flood(inst.graph, inst.template, plan), inst), args.output)
    return EXIT_OK


def cmd_to_plan(args) -> int:
    inst = _instance(args.instance)
    seq = io.parse_flood(_read(args.flood), inst)
    _emit(io.serialize_plan(flood_to_plan(inst.graph, inst.template, seq), inst), args.output)
    return EXIT_OK


def cmd_recognize(args) -> int:
    inst = _instance(args.instance)
    g = inst.graph
    p4s = induced_p4s(g)
    cogems = cogem_witnesses(g, args.witnesses)
    doc = {
        "cograph": not p4s,
        "cogem_free": not cogems,
        "connected": is_connected(g),
        "p4_witnesses": [[g.label(v) for v in p] for p in p4s[:args.witnesses]],
        "cogem_witnesses": [[g.label(v) for v in c] for c in cogems],
    }
    if args.json:
        sys.stdout.write(_json(doc))
        return EXIT_OK
    print(f"cograph: {'yes' if doc['cograph'] else 'no'}")
    for w in doc["p4_witnesses"]:
        print(f"  induced P4: {' - '.join(w)}")
    print(f"co-gem-free: {'yes' if doc['cogem_free'] else 'no'}")
    for w in doc["cogem_witnesses"]:
        print(f"  co-gem: P4 {' - '.join(w[:4])} plus isolated {w[4]}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _instance(args.instance)
    g, t = inst.graph, inst.template
    length, plan = plan_optimum(g, t, args.depth_cap)
    doc = json.loads(io.serialize_plan(plan, inst))
    doc["length"] = length
    doc["lower_bound"] = color_lower_bound(g, t)
    if is_connected(g):
        moves, seq = flood_optimum(g, t, args.depth_cap)
        doc["flood_length"] = moves
        doc["moves"] = json.loads(io.serialize_flood(seq, inst))["moves"]
    if args.json:
        _emit(_json(doc), args.output)
    else:
        _emit(io.serialize_plan(plan, inst), args.output)
        print(f"plan optimum: {length}", file=sys.stderr)
        if "flood_length" in doc:
            print(f"flood optimum: {doc['flood_length']}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = generate(args.kind, args.n, args.colors, args.seed, connected=args.connected,
                    non_cograph=args.non_cograph)
    _emit(io.serialize_instance(inst), args.output)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minipaint", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal paint plan for an instance")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--max-tail", type=int, default=MAX_TAIL, metavar="K")
    p.add_argument("--threads", type=int, default=0, help="worker threads (default: MINIPAINT_THREADS)")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify-plan", help="check a plan document against an instance")
    p.add_argument("instance")
    p.add_argument("plan")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_plan)

    p = sub.add_parser("verify-flood", help="check a flood document against an instance")
    p.add_argument("instance")
    p.add_argument("flood")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_flood)

    p = sub.add_parser("to-flood", help="convert a plan into a flooding one move shorter")
    p.add_argument("instance")
    p.add_argument("plan")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_flood)

    p = sub.add_parser("to-plan", help="convert a flooding into a plan one stroke longer")
    p.add_argument("instance")
    p.add_argument("flood")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_to_plan)

    p = sub.add_parser("recognize", help="cograph / co-gem-free tests with witnesses")
    p.add_argument("instance")
    p.add_argument("--witnesses", type=int, default=1, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("oracle", help="exhaustive optimum for small instances")
    p.add_argument("instance")
    p.add_argument("--depth-cap", type=int, default=DEPTH_CAP, metavar="N")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--non-cograph", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except MiniPaintError as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the exit-code contract covers everything
        print(f"internal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
