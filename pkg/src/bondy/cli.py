"""Command-line front end.

Subcommands: check (report all predicates on a system read from a
file), build (construct a slender system of a requested size and
self-verify it), enumerate and spectrum (exhaustive classification on
small grounds, constructive certificates above), complement and
minimize (transform a system file).  Reports print as plain text, or as
JSON objects carrying a schema_version field under --json.  Output is
deterministic: identical invocations print identical bytes.

Exit status 0 covers every successful run including negative verdicts
(a Bondy answer is an answer); 2 flags bad usage or bad input; 1 flags
an internal verification failure, which would be a bug.
"""

import argparse
import json
import sys

from .builders import (
    VARIANT_NO_EMPTY,
    VARIANT_NO_FULL,
    SpectrumTarget,
    build_slender,
    build_slender_2s,
    slender_2s_trace,
    slender_trace,
)
from .core import (
    adjacent_members,
    bondy_verdict,
    complement_system,
    covered_elements,
    is_inclusion_minimal_non_bondy,
    is_slender,
    minimize,
    once_covered_elements,
)
from .documents import (
    JSON_SCHEMA_VERSION,
    SystemDocument,
    format_text,
    load_path,
    save_path,
)
from .enumeration import (
    EXHAUSTIVE_MAX_GROUND,
    KIND_MINIMAL,
    KIND_SLENDER,
    WORKERS_ENV,
    certify_spectrum,
    enumerate_minimal,
    spectrum,
)

_KIND_BY_FLAG = {"minimal": KIND_MINIMAL, "slender": KIND_SLENDER}


def _emit_json(payload: dict):
    print(json.dumps({"schema_version": JSON_SCHEMA_VERSION, **payload}, indent=2))


def _elements_text(elements) -> str:
    return ",".join(str(e) for e in elements) if elements else "-"


def _system_text(sets) -> str:
    return " ".join("{" + ",".join(str(e) for e in s) + "}" for s in sets)


def _trace_json(trace) -> dict:
    if trace.rule == "fixture":
        s, index = trace.detail
        return {"rule": "fixture", "ground": s, "index": index}
    if trace.rule == "base-2s":
        return {"rule": "base-2s", "ground": trace.detail[0]}
    if trace.rule == "extend":
        member = trace.detail[0]
        return {
            "rule": "extend",
            "member": [i + 1 for i in range(member.bit_length()) if member >> i & 1],
            "inputs": [_trace_json(t) for t in trace.inputs],
        }
    return {"rule": trace.rule, "inputs": [_trace_json(t) for t in trace.inputs]}


def _trace_lines(trace, depth=0) -> list:
    pad = "  " * depth
    node = _trace_json(trace)
    children = node.pop("inputs", [])
    head = node.pop("rule")
    args = " ".join(f"{k}={_elements_text(v) if k == 'member' else v}" for k, v in node.items())
    lines = [f"{pad}{head} {args}".rstrip()]
    for child in trace.inputs:
        lines.extend(_trace_lines(child, depth + 1))
    return lines


def _write_document(doc: SystemDocument, args, extra: dict, comments=()):
    """Send a document to --output or stdout, as text or JSON."""
    if args.output:
        save_path(args.output, doc)
        return
    if args.json:
        _emit_json({"ground": doc.ground, "sets": [list(s) for s in doc.sets], **extra})
    else:
        for line in comments:
            print(f"# {line}")
        print(format_text(doc), end="")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    system = load_path(args.file).to_system()
    verdict = bondy_verdict(system)
    covered = covered_elements(system)
    once = once_covered_elements(system)
    adjacent = adjacent_members(system)
    minimal = is_inclusion_minimal_non_bondy(system)
    slender = is_slender(system)
    if args.json:
        _emit_json(
            {
                "command": "check",
                "ground": system.ground.size,
                "members": len(system),
                "bondy": verdict.is_bondy,
                "witnesses": list(verdict.witnesses.elements),
                "covered": list(covered.elements),
                "covered_once": list(once.elements),
                "adjacent_members": len(adjacent),
                "inclusion_minimal": minimal,
                "slender": slender,
                "has_empty_set": system.has_empty_member,
                "has_full_set": system.has_full_member,
            }
        )
        return 0
    yes = lambda flag: "yes" if flag else "no"
    print(f"ground size       {system.ground.size}")
    print(f"members           {len(system)}")
    print(f"bondy             {yes(verdict.is_bondy)}")
    print(f"witnesses         {_elements_text(verdict.witnesses.elements)}")
    print(f"covered           {_elements_text(covered.elements)}")
    print(f"covered once      {_elements_text(once.elements)}")
    print(f"adjacent members  {len(adjacent)} of {len(system)}")
    print(f"inclusion-minimal {yes(minimal)}")
    print(f"slender           {yes(slender)}")
    print(f"empty set member  {yes(system.has_empty_member)}")
    print(f"full set member   {yes(system.has_full_member)}")
    return 0


def _cmd_build(args) -> int:
    if args.variant is not None:
        if args.t != 2 * args.s:
            raise ValueError(
                f"variant builds have size exactly 2*s, got t={args.t} for s={args.s}"
            )
        trace = slender_2s_trace(args.s, args.variant)
        system = build_slender_2s(args.s, args.variant)
        banned = "empty set" if args.variant == VARIANT_NO_EMPTY else "full set"
        excluded_ok = not (
            system.has_empty_member
            if args.variant == VARIANT_NO_EMPTY
            else system.has_full_member
        )
    else:
        target = SpectrumTarget(args.s, args.t)
        trace = slender_trace(target)
        system = build_slender(target)
        banned = "full set"
        excluded_ok = not system.has_full_member
    if len(system) != args.t or not is_slender(system) or not excluded_ok:
        print(
            f"internal verification failed for s={args.s}, t={args.t}: "
            f"expected a slender system of size {args.t} without the {banned}",
            file=sys.stderr,
        )
        return 1
    doc = SystemDocument.from_system(system)
    extra = {"command": "build", "slender": True}
    if args.trace:
        extra["trace"] = _trace_json(trace)
    comments = []
    if args.trace:
        comments = ["trace:"] + ["  " + line for line in _trace_lines(trace)]
    _write_document(doc, args, extra, comments)
    return 0


def _cmd_enumerate(args) -> int:
    kind = _KIND_BY_FLAG[args.kind]
    classes = enumerate_minimal(args.s, args.t, kind)
    if args.json:
        _emit_json(
            {
                "command": "enumerate",
                "ground": args.s,
                "size": args.t,
                "kind": kind,
                "class_count": len(classes),
                "classes": [
                    [list(s) for s in form.system.sets()] for form in classes
                ],
            }
        )
        return 0
    print(f"ground size {args.s}, size {args.t}, kind {kind}: {len(classes)} classes")
    for form in classes:
        print(_system_text(form.system.sets()))
    return 0


def _cmd_spectrum(args) -> int:
    if args.certify:
        report = certify_spectrum(args.s)
    else:
        if args.s > EXHAUSTIVE_MAX_GROUND:
            raise ValueError(
                f"exhaustive spectra stop at ground size {EXHAUSTIVE_MAX_GROUND}; "
                f"rerun with --certify for a constructive certificate"
            )
        report = spectrum(args.s, _KIND_BY_FLAG[args.kind])
    if args.json:
        payload = {
            "command": "spectrum",
            "ground": report.s,
            "kind": report.kind,
            "exhaustive": report.exhaustive,
            "sizes": list(report.sizes),
            "representatives": {
                str(t): [list(s) for s in system.sets()]
                for t, system in sorted(report.representatives.items())
            },
        }
        if report.class_counts is not None:
            payload["class_counts"] = {
                str(t): n for t, n in sorted(report.class_counts.items())
            }
        _emit_json(payload)
        return 0
    mode = "exhaustive" if report.exhaustive else "constructive certificate, not exhaustive"
    print(f"ground size {report.s}, kind {report.kind} ({mode})")
    print(f"sizes: {_elements_text(report.sizes)}")
    for t in report.sizes:
        head = f"size {t}:"
        if report.class_counts is not None:
            n = report.class_counts[t]
            head += f" {n} {'class' if n == 1 else 'classes'},"
        print(f"{head} representative {_system_text(report.representatives[t].sets())}")
    return 0


def _transform_command(args, op, name: str) -> int:
    system = load_path(args.file).to_system()
    result = op(system)
    _write_document(SystemDocument.from_system(result), args, {"command": name})
    return 0


def _cmd_complement(args) -> int:
    return _transform_command(args, complement_system, "complement")


def _cmd_minimize(args) -> int:
    return _transform_command(args, minimize, "minimize")


# ---------------------------------------------------------------------------
# parser


def _add_output_flags(sub, with_output=True):
    sub.add_argument("--json", action="store_true", help="emit a JSON report")
    if with_output:
        sub.add_argument(
            "--output",
            metavar="FILE",
            help="write the resulting system to FILE (.json selects JSON layout)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bondy",
        description="Inspect, build, and enumerate Bondy and non-Bondy set systems.",
        epilog=f"The {WORKERS_ENV} environment variable sets the enumeration worker count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report every predicate for a system file")
    p.add_argument("file", help="system document (.json or text layout)")
    _add_output_flags(p, with_output=False)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("build", help="construct a slender system of a given size")
    p.add_argument("--s", type=int, required=True, help="ground size")
    p.add_argument("--t", type=int, required=True, help="system size")
    p.add_argument(
        "--variant",
        choices=[VARIANT_NO_EMPTY, VARIANT_NO_FULL],
        help="size-2s build excluding the empty set or the full set (allows s=5)",
    )
    p.add_argument("--trace", action="store_true", help="include the derivation trace")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser(
        "enumerate", help="list isomorphism classes of a given kind and size"
    )
    p.add_argument("--s", type=int, required=True, help="ground size, at most 5")
    p.add_argument("--t", type=int, required=True, help="system size")
    p.add_argument("--kind", choices=sorted(_KIND_BY_FLAG), default="minimal")
    _add_output_flags(p, with_output=False)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("spectrum", help="attainable sizes for one ground size")
    p.add_argument("--s", type=int, required=True, help="ground size")
    p.add_argument("--kind", choices=sorted(_KIND_BY_FLAG), default="minimal")
    p.add_argument(
        "--certify",
        action="store_true",
        help="constructive certificate for ground sizes 6..12 (always slender)",
    )
    _add_output_flags(p, with_output=False)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("complement", help="complement every member of a system file")
    p.add_argument("file")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_complement)

    p = sub.add_parser(
        "minimize", help="extract an inclusion-minimal non-Bondy subsystem"
    )
    p.add_argument("file")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_minimize)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
