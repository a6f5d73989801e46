"""Command-line front end.

    toricgens bound   --a -2,0,3
    toricgens gens    --a 0,1,2,3 --format json
    toricgens connect --a -2,0,3 --q 6 --c 0 --x -2 --y 0
    toricgens verify  --a 0,1,3 --extra 3
    toricgens oracle  --a 0,1,3 --q 3 --c 3

Exit codes: 0 success, 1 failed verification or library error, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ToricError, ValidationError
from .ideal import degree_bound, generator_bidegrees, rank_oracle, render_binomial, verify_main_theorem
from .multisets import Bidegree, Multiset
from .values import ValueSet, gap_profile, normalize
from .walks import WalkCertificate, connect, verify_certificate

COMMANDS = ("bound", "gens", "connect", "verify", "oracle")
FORMATS = ("json", "csv", "text")
_VALUE_FLAGS = ("--a", "--q", "--c", "--x", "--y", "--extra", "--format", "--out")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CommandRequest:
    command: str
    a: tuple[int, ...]
    q: Optional[int] = None
    c: Optional[int] = None
    x: Optional[int] = None
    y: Optional[int] = None
    extra: int = 2
    format: str = "text"
    out: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricgens", description=__doc__.split("\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--a", required=True, help="comma-separated strictly increasing integers")
    for flag in ("--q", "--c", "--x", "--y"):
        parser.add_argument(flag, type=int)
    parser.add_argument("--extra", type=int, default=2)
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--out", help="also write the output to this file")
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    # "--a -2,0,3" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _parse_a(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--a must be comma-separated integers, got {text!r}") from None
    try:
        ValueSet(values)
    except ValidationError as exc:
        raise UsageError(f"--a: {exc}") from None
    return values


def parse_args(argv: Sequence[str]) -> CommandRequest:
    ns = _build_parser().parse_args(_glue_values(argv))
    a = _parse_a(ns.a)
    required = {"connect": ("q", "c", "x", "y"), "oracle": ("q", "c")}.get(ns.command, ())
    missing = [f"--{name}" for name in required if getattr(ns, name) is None]
    if missing:
        raise UsageError(f"{ns.command} requires {', '.join(missing)}")
    if ns.format == "csv" and ns.command != "gens":
        raise UsageError("csv output is only available for gens")
    if ns.extra < 0:
        raise UsageError("--extra must be non-negative")
    return CommandRequest(ns.command, a, ns.q, ns.c, ns.x, ns.y, ns.extra, ns.format, ns.out)


def _json(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _bound(V: ValueSet, fmt: str):
    W, scale, offset = normalize(V)
    if len(V) == 2:
        r = s = None
    else:
        profile = gap_profile(W)
        r, s = profile.r, profile.s
    bound = degree_bound(V)
    if fmt == "json":
        payload = {
            "a": list(V.elements),
            "r": r,
            "s": s,
            "bound": bound,
            "normalized_a": list(W.elements),
            "scale": scale,
            "offset": offset,
            "zero_ideal": len(V) == 2,
        }
        return _json(payload), 0
    if r is None:
        return f"bound={bound} (zero ideal)", 0
    return f"r={r} s={s} bound={bound}", 0


def _gens(V: ValueSet, fmt: str):
    report = generator_bidegrees(V)
    rows = []
    for e in report.entries:
        rows.append((e, [(b, render_binomial(b, V)) for b in e.binomials]))
    if fmt == "json":
        entries = [
            {
                "q": e.q,
                "c": e.c,
                "k": e.k,
                "count": e.count,
                "binomials": [
                    {"plus": list(b.plus.items), "minus": list(b.minus.items), "text": text}
                    for b, text in binomials
                ],
            }
            for e, binomials in rows
        ]
        if len(V) == 2:
            r = s = None
        else:
            profile = gap_profile(normalize(V)[0])
            r, s = profile.r, profile.s
        payload = {
            "a": list(V.elements),
            "r": r,
            "s": s,
            "bound": report.bound,
            "zero_ideal": report.zero_ideal,
            "entries": entries,
        }
        return _json(payload), 0
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "c", "k", "count", "binomial_text"])
        for e, binomials in rows:
            for _, text in binomials:
                writer.writerow([e.q, e.c, e.k, e.count, text])
        return buf.getvalue().rstrip("\n"), 0
    lines = [f"bound={report.bound} generators={report.total}"]
    for e, binomials in rows:
        texts = ", ".join(text for _, text in binomials)
        lines.append(f"q={e.q} c={e.c} k={e.k} count={e.count}: {texts}")
    return "\n".join(lines), 0


def certificate_to_json(cert: WalkCertificate) -> dict:
    return {
        "q": cert.bidegree.q,
        "c": cert.bidegree.c,
        "x": cert.x,
        "y": cert.y,
        "chain": [list(D.items) for D in cert.chain],
    }


def certificate_from_json(obj: dict) -> WalkCertificate:
    return WalkCertificate(
        chain=tuple(Multiset(tuple(items)) for items in obj["chain"]),
        x=obj["x"],
        y=obj["y"],
        bidegree=Bidegree(obj["q"], obj["c"]),
    )


def _connect(V: ValueSet, req: CommandRequest):
    cert = connect(V, req.q, req.c, req.x, req.y)
    valid = verify_certificate(V, cert)
    code = 0 if valid else 1
    if req.format == "json":
        payload = {"a": list(V.elements), **certificate_to_json(cert), "valid": valid}
        if not valid:
            payload["error"] = "certificate failed verification"
        return _json(payload), code
    lines = [f"x={cert.x} y={cert.y} q={req.q} c={req.c} length={len(cert.chain)} valid={valid}"]
    lines.extend(",".join(map(str, D.items)) for D in cert.chain)
    return "\n".join(lines), code


def _verify(V: ValueSet, req: CommandRequest):
    summary = verify_main_theorem(V, req.extra)
    code = 0 if summary.passed else 1
    if req.format == "json":
        cx = summary.counterexample
        payload = {
            "a": list(V.elements),
            "bound": summary.bound,
            "extra": summary.extra,
            "cells": summary.cells_checked,
            "pass": summary.passed,
            "counterexample": None if cx is None else dict(zip(("q", "c", "k"), cx)),
        }
        return _json(payload), code
    if summary.passed:
        return "pass", code
    q, c, k = summary.counterexample
    return f"fail q={q} c={c} k={k}", code


def _oracle(V: ValueSet, req: CommandRequest):
    res = rank_oracle(V, req.q, req.c)
    if req.format == "json":
        payload = {
            "a": list(V.elements),
            "q": req.q,
            "c": req.c,
            "dim_I": res.dim_I,
            "dim_I_less": res.dim_I_less,
            "min_gen_count": res.min_gen_count,
        }
        return _json(payload), 0
    return f"dim_I={res.dim_I} dim_I_less={res.dim_I_less} min_gen_count={res.min_gen_count}", 0


def run(req: CommandRequest) -> tuple[str, int]:
    """Execute a parsed request; return (output, exit code)."""
    try:
        V = ValueSet(req.a)
        if req.command == "bound":
            return _bound(V, req.format)
        if req.command == "gens":
            return _gens(V, req.format)
        if req.command == "connect":
            return _connect(V, req)
        if req.command == "verify":
            return _verify(V, req)
        return _oracle(V, req)
    except ToricError as exc:
        if req.format == "json":
            return _json({"error": str(exc), "kind": type(exc).__name__}), 1
        return f"error: {exc}", 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    text, code = run(req)
    print(text)
    if code:
        print(f"toricgens {req.command}: exit {code}", file=sys.stderr)
    if req.out:
        with open(req.out, "w") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
