"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(including degree-limit violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._limits import DegreeLimitError
from .algebra import GroupAlgebraElement
from .branching import decompose, idempotent_triple
from .characters import CharacterTable
from .classify import (
    ANNIHILATES,
    REPRODUCES,
    STATUSES,
    classify_frame,
    compare_with_appendix,
    frame_for,
    group_verdicts,
    target_idempotent,
)
from .dft import FourierImage, dft, inverse_dft
from .tensors import CDC_IDENTITIES, cdc_candidate, verify_cdc_identities
from .young import parse_partition, partitions_of

CDC_TYPES = ("SU", "US", "AU", "UA", "SS'", "S'S")


class UsageError(Exception):
    pass


def format_element(a: GroupAlgebraElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for p, c in a.items():
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign} {abs(c)}*{list(p.images)}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def format_tableau_inline(rows) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in rows)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_idempotents(args):
    kind = args.kind
    triple = idempotent_triple(args.r, signed=(kind == "alternating"))
    if args.format == "json":
        return {"r": args.r, "kind": kind, **{k: v.to_json() for k, v in triple.items()}}, 0
    lines = [f"{name} = {format_element(elem)}" for name, elem in triple.items()]
    return "\n".join(lines), 0


def cmd_decompose(args):
    elem = GroupAlgebraElement.from_json(_read_json(args.input))
    shape = parse_partition(args.shape)
    result = decompose(elem, shape, method=args.method)
    if args.format == "json":
        return result.to_json(), 0
    lines = [f"source = {format_element(result.source)}"]
    for mu in result.frames:
        lines.append(f"h{list(mu)} = {format_element(result.components[mu])}")
    return "\n".join(lines), 0


def cmd_classify(args):
    shape = parse_partition(args.frame) if args.frame else frame_for(args.r, args.against)
    if sum(shape) != args.r + 1:
        raise UsageError(f"frame {list(shape)} must be a partition of r+1 = {args.r + 1}")
    h = target_idempotent(args.r, args.against)
    verdicts = classify_frame(h, shape, method=args.method)
    groups = group_verdicts(verdicts)
    counts = {s: len(groups[s]) for s in STATUSES}
    if args.format == "json":
        return {
            "r": args.r,
            "against": args.against,
            "frame": list(shape),
            "counts": counts,
            "verdicts": [v.to_json() for v in verdicts],
        }, 0
    lines = [f"r = {args.r}, against {args.against}, frame {list(shape)}"]
    for s in STATUSES:
        lines.append(f"{s} ({counts[s]}):")
        lines.extend(
            f"  {format_tableau_inline(v.tableau.rows)}{'  [standard]' if v.standard else ''}"
            for v in verdicts
            if v.status == s
        )
    return "\n".join(lines), 0


def cmd_appendix(args):
    rs = args.r or [2, 3, 4]
    comparisons = [c for r in rs for c in compare_with_appendix(r)]
    ok = all(c.matches for c in comparisons)
    if args.format == "json":
        payload = [
            {
                "r": c.r,
                "kind": c.kind,
                "count": len(c.computed),
                "expected_count": len(c.expected),
                "tableaux": [t.to_json() for t in c.computed],
                "match": c.matches,
            }
            for c in comparisons
        ]
        return {"lists": payload, "all_match": ok}, 0 if ok else 1
    relation = {"reproduce": "h_a e_t = h_a", "annihilate": "h_a e_t = 0"}
    lines = []
    for c in comparisons:
        lines.append(f"{len(c.computed)} tableaux for r = {c.r} with {relation[c.kind]}:")
        lines.extend(f"  {format_tableau_inline(t.rows)}" for t in c.computed)
        lines.append(f"{'PASS' if c.matches else 'FAIL'} r={c.r} {c.kind}")
    return "\n".join(lines), 0 if ok else 1


def cmd_dft(args):
    data = _read_json(args.input)
    if args.inverse:
        image = FourierImage.from_json(data)
        if image.n != args.n:
            raise UsageError(f"input has n = {image.n}, --n says {args.n}")
        elem = inverse_dft(image)
        return (elem.to_json() if args.format == "json" else format_element(elem)), 0
    elem = GroupAlgebraElement.from_json(data)
    if elem.degree != args.n:
        raise UsageError(f"input has degree {elem.degree}, --n says {args.n}")
    image = dft(elem)
    if args.format == "json":
        return image.to_json(), 0
    lines = []
    for shape, rows in image.to_json()["blocks"].items():
        lines.append(f"D{shape}:")
        lines.extend("  " + " ".join(row) for row in rows)
    return "\n".join(lines), 0


def cmd_characters(args):
    table = CharacterTable.build(args.n)
    if args.format == "json":
        return table.to_json(), 0
    shapes = partitions_of(args.n)
    header = "λ \\ class".ljust(14) + " ".join(str(list(ct)).rjust(12) for ct in shapes)
    lines = [header]
    for lam in shapes:
        lines.append(str(list(lam)).ljust(14) + " ".join(str(table[lam, ct]).rjust(12) for ct in shapes))
    return "\n".join(lines), 0


def cmd_verify_cdc(args):
    R = cdc_candidate(args.type, args.dim, args.seed, u_kind=args.u_kind)
    report = verify_cdc_identities(R)
    ok = all(report.values())
    if args.format == "json":
        return {
            "type": args.type,
            "dim": args.dim,
            "seed": args.seed,
            "u_kind": args.u_kind,
            "nonzero": not R.is_zero(),
            "identities": report,
            "all_pass": ok,
        }, 0 if ok else 1
    lines = [f"y_t'*({args.type}) at dim {args.dim}, seed {args.seed}, U from {args.u_kind}"]
    lines.extend(f"  {'PASS' if report[name] else 'FAIL'} {name}" for name in CDC_IDENTITIES)
    return "\n".join(lines), 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="json"):
        p.add_argument("--format", choices=("json", "text"), default=default_format)
        p.add_argument("--output", help="write the result here instead of stdout")
        return p

    p = common(sub.add_parser("idempotents", help="e, f and h for the one-box induction"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=("symmetric", "alternating"), required=True)
    p.set_defaults(func=cmd_idempotents)

    p = common(sub.add_parser("decompose", help="split an embedded primitive idempotent"))
    p.add_argument("--input", required=True, help="group algebra element JSON")
    p.add_argument("--lambda", dest="shape", required=True, help='frame of the input, e.g. "2,1"')
    p.add_argument("--method", choices=("fourier", "characters"), default="fourier")
    p.set_defaults(func=cmd_decompose)

    p = common(sub.add_parser("classify", help="tableau verdicts against h_a or h_s"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--frame", help="partition of r+1 (default matches --against)")
    p.add_argument("--against", choices=("ha", "hs"), default="ha")
    p.add_argument("--method", choices=("auto", "direct", "fourier"), default="auto")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("appendix", help="recompute the reference tableau lists"), "text")
    p.add_argument("--r", type=int, action="append", choices=(2, 3, 4))
    p.set_defaults(func=cmd_appendix)

    p = common(sub.add_parser("dft", help="Fourier transform of a group algebra element"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true", help="input is a Fourier image")
    p.set_defaults(func=cmd_dft)

    p = common(sub.add_parser("characters", help="character table of S_n"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_characters)

    p = common(sub.add_parser("verify-cdc", help="check a generator candidate for R' identities"))
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--type", choices=CDC_TYPES, default="SU")
    p.add_argument("--u-kind", choices=("symmetric", "alternating"), default="symmetric")
    p.set_defaults(func=cmd_verify_cdc)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, status = args.func(args)
    except (UsageError, DegreeLimitError, ValueError) as exc:
        print(f"symalg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(result, indent=2) if isinstance(result, (dict, list)) else result
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
