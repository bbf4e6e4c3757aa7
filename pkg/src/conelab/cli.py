"""Command-line front end: JSON-lines on stdin, JSON-lines on stdout.

Subcommands compose in shell pipelines, e.g.

    conelab gen --max-n 2 --max-t 6 | conelab reduce ss-to-ssm \\
        | conelab reduce ssm-to-pic | conelab solve

Exit codes: 0 success, 1 a verification reported failure, 2 malformed or
unsupported input, 3 a size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cone import GeneratorSet, decide_membership
from .errors import (
    DEFAULT_EXPLOSION_CAP,
    BoxUnderivable,
    ExplosionGuard,
    NegativeInput,
    ParseError,
    SupportSearchTooLarge,
)
from .instances import (
    DEFAULT_SEED,
    PointInConeInstance,
    SsmInstance,
    SubsetSumInstance,
    cone_witness_doc,
    encoding_size,
    gen_family,
    parse,
    serialize,
    witness_doc,
)
from .polytope import integer_points
from .reductions import ss_to_ssm, ssm_to_pic
from .solvers import ss_decide, ssm_decide
from .verify import run_family_audit, verify_equivalence_chain, verify_point_set_identity

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_GUARD = 3


def _emit(doc, out) -> None:
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")), file=out)


def _instances_from(stream):
    for line_no, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {line_no}: not valid JSON: {exc}") from exc
        yield parse(doc)


def _expect(instance, kind, what: str):
    if not isinstance(instance, kind):
        raise ParseError(f"expected a {what} instance, got {type(instance).__name__}")
    return instance


def _cmd_gen(args, stdin, out) -> int:
    family = gen_family(
        args.max_n,
        args.max_t,
        count=args.random,
        seed=args.seed,
    )
    for inst in family:
        _emit(serialize(inst), out)
    return EXIT_OK


def _cmd_reduce(args, stdin, out) -> int:
    for inst in _instances_from(stdin):
        if args.transform == "ss-to-ssm":
            reduced, _ = ss_to_ssm(_expect(inst, SubsetSumInstance, "subset-sum"))
            _emit(serialize(reduced), out)
        else:
            pic, gadget = ssm_to_pic(_expect(inst, SsmInstance, "subset-sum-mult"))
            _emit(serialize(pic), out)
            if args.emit_points:
                _emit(
                    {
                        "kind": "gadget-points",
                        "d": gadget.d,
                        "points": [[str(v) for v in p] for p in gadget.points],
                    },
                    out,
                )
    return EXIT_OK


def _cmd_solve(args, stdin, out) -> int:
    cap = args.explosion_cap
    for inst in _instances_from(stdin):
        if isinstance(inst, SubsetSumInstance):
            witness = ss_decide(inst)
            doc = witness_doc(witness) if witness is not None else None
        elif isinstance(inst, SsmInstance):
            witness = ssm_decide(inst)
            doc = witness_doc(witness) if witness is not None else None
        else:
            points = integer_points(inst.polytope, cap=cap)
            witness = decide_membership(GeneratorSet(tuple(points)), inst.q, cap=cap)
            doc = cone_witness_doc(witness) if witness is not None else None
        _emit(
            {"answer": "yes" if witness is not None else "no", "witness": doc}, out
        )
    return EXIT_OK


def _cmd_verify(args, stdin, out) -> int:
    cap = args.explosion_cap
    all_pass = True
    if args.check == "audit":
        if args.max_n is None or args.max_t is None:
            raise ParseError("verify audit requires --max-n and --max-t")

        def report_line(inst, identity, chain):
            _emit(
                {
                    "claim": "audit",
                    "pass": identity["pass"] and chain["pass"],
                    "details": {
                        "instance": serialize(inst),
                        "point-set-identity": identity,
                        "equivalence-chain": chain,
                    },
                },
                out,
            )

        summary = run_family_audit(
            args.max_n, args.max_t, cap=cap, on_report=report_line
        )
        _emit(
            {
                "claim": "audit-summary",
                "pass": not summary["failures"],
                "details": summary,
            },
            out,
        )
        return EXIT_OK if not summary["failures"] else EXIT_VERIFY_FAILED
    for inst in _instances_from(stdin):
        if args.check == "claim1":
            report = verify_point_set_identity(
                _expect(inst, SsmInstance, "subset-sum-mult"), cap=cap
            )
        else:
            report = verify_equivalence_chain(
                _expect(inst, SubsetSumInstance, "subset-sum"), cap=cap
            )
        all_pass = all_pass and report["pass"]
        _emit(report, out)
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def _cmd_enc_size(args, stdin, out) -> int:
    for inst in _instances_from(stdin):
        pic = _expect(inst, PointInConeInstance, "point-in-cone")
        print(encoding_size(pic.polytope, pic.q), file=out)
    return EXIT_OK


def _cmd_bench(args, stdin, out) -> int:
    cap = args.explosion_cap
    print("n\td\tm\tenc_bits\tsolve_ms", file=out)
    for n in range(1, args.max_n + 1):
        inst = SsmInstance(tuple(range(1, n + 1)), 2 * n)
        pic, gadget = ssm_to_pic(inst)
        bits = encoding_size(pic.polytope, pic.q)
        started = time.perf_counter()
        decide_membership(gadget.generator_set(), pic.q, cap=cap)
        elapsed = (time.perf_counter() - started) * 1000
        print(
            f"{n}\t{gadget.d}\t{pic.polytope.num_rows}\t{bits}\t{elapsed:.2f}",
            file=out,
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conelab",
        description="integer-cone membership lab: generators, reductions, "
        "solvers, and claim audits over JSON-lines documents",
    )
    parser.add_argument(
        "--explosion-cap",
        type=int,
        default=DEFAULT_EXPLOSION_CAP,
        help="size guard for enumerations and membership searches",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a family of subset-sum instances")
    gen.add_argument("--max-n", type=int, required=True)
    gen.add_argument("--max-t", type=int, required=True)
    gen.add_argument(
        "--random",
        type=int,
        metavar="COUNT",
        help="draw COUNT instances uniformly instead of exhausting the family",
    )
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)

    reduce_cmd = sub.add_parser("reduce", help="transform instances on stdin")
    reduce_cmd.add_argument("transform", choices=["ss-to-ssm", "ssm-to-pic"])
    reduce_cmd.add_argument(
        "--emit-points",
        action="store_true",
        help="also emit the gadget point list after each point-in-cone document",
    )

    sub.add_parser("solve", help="decide instances on stdin, with witnesses")

    verify_cmd = sub.add_parser("verify", help="run claim checks")
    verify_cmd.add_argument("check", choices=["claim1", "chain", "audit"])
    verify_cmd.add_argument("--max-n", type=int)
    verify_cmd.add_argument("--max-t", type=int)

    sub.add_parser("enc-size", help="print encoding size of point-in-cone input")

    bench = sub.add_parser("bench", help="print a size/time scaling table")
    bench.add_argument("--max-n", type=int, required=True)

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "enc-size": _cmd_enc_size,
    "bench": _cmd_bench,
}


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, stdin, stdout)
    except (ParseError, NegativeInput, BoxUnderivable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ExplosionGuard, SupportSearchTooLarge) as exc:
        print(f"guard tripped: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
