"""Command line front end: ``lfactor [--registry PATH] [--json] COMMAND REPR...``."""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import parse_repr, render_repr, render_segment
from .errors import LFactorError
from .galois import FormalParam, galois_ext, langlands_agree
from .lfun import (
    check_general_position,
    gamma_ext,
    l_ex_constituent,
    l_ext_via_derivatives,
    l_rep_ext,
    l_rep_rs_pair,
    l_rep_sym,
)
from .registry import load_registry
from .segments import derivative_constituents

COMMANDS = ("ext", "sym", "rs", "gamma", "lex", "derive", "oracle", "check-gp", "langlands", "selftest")

OK, DOMAIN_ERROR, DISAGREE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lfactor", description="Exact local exterior-square L-factors.")
    ap.add_argument("--registry", metavar="PATH", help="cuspidal registry (JSON); 'std.json' uses the bundled one")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--order", type=int, metavar="K", help="derivative order for 'derive'")
    ap.add_argument("--seed", type=int, default=0, help="seed for 'selftest'")
    ap.add_argument("--scale", type=int, default=1, help="case multiplier for 'selftest'")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("repr", nargs="*", help="representation such as \"[one:2@-1/2] * [rho2:1]\"")
    return ap


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, payload: dict):
        if self.as_json:
            self.stream.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _factor(cmd, f):
    return {"command": cmd, "factor": str(f), **f.to_json()}


def _run(args, out: _Out) -> int:
    cmd = args.command

    if cmd == "selftest":
        from .registry import std_registry
        from .selftest import run_selftest

        reg = load_registry(args.registry) if args.registry else std_registry()
        results = run_selftest(reg, seed=args.seed, scale=args.scale)
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.cases} cases, {len(r.failures)} failures)" for r in results]
        ok = all(r.ok for r in results)
        out.emit(
            "\n".join(lines),
            {
                "command": cmd,
                "ok": ok,
                "checks": [{"name": r.name, "cases": r.cases, "failures": len(r.failures)} for r in results],
            },
        )
        return OK if ok else DISAGREE

    allowed = (1, 2) if cmd == "rs" else (1,)
    if len(args.repr) not in allowed:
        raise SystemExit(f"lfactor {cmd}: expected {'one or two representations' if cmd == 'rs' else 'one representation'}")
    # parse first so syntax errors surface even without a registry
    reps = [parse_repr(s) for s in args.repr]
    if not args.registry:
        raise SystemExit("lfactor: --registry is required for this command")
    reg = load_registry(args.registry)
    p = reps[0]

    if cmd == "ext":
        f = l_rep_ext(reg, p)
        out.emit(str(f), _factor(cmd, f))
    elif cmd == "sym":
        f = l_rep_sym(reg, p)
        out.emit(str(f), _factor(cmd, f))
    elif cmd == "rs":
        f = l_rep_rs_pair(reg, p, reps[-1])
        out.emit(str(f), _factor(cmd, f))
    elif cmd == "lex":
        f = l_ex_constituent(reg, p.segments)
        out.emit(str(f), _factor(cmd, f))
    elif cmd == "gamma":
        g = gamma_ext(reg, p)
        out.emit(str(g), {"command": cmd, **g.to_json()})
    elif cmd == "derive":
        if args.order is None:
            raise SystemExit("lfactor derive: --order K is required")
        cons = derivative_constituents(reg, p, args.order)
        lines = []
        items = []
        for c in cons:
            body = render_repr(c.parts) if c.parts else "1"
            lines.append(f"{c.source}: {body}")
            items.append({"orders": list(c.source), "parts": [render_segment(d) for d in c.parts]})
        out.emit("\n".join(lines) if lines else "(none)", {"command": cmd, "order": args.order, "constituents": items})
    elif cmd == "oracle":
        via = l_ext_via_derivatives(reg, p)
        closed = l_rep_ext(reg, p)
        agree = via == closed
        verdict = "AGREE" if agree else "DISAGREE"
        text = f"{verdict} {closed}" if agree else f"{verdict}\n  closed form: {closed}\n  derivatives: {via}"
        out.emit(
            text,
            {"command": cmd, "verdict": verdict, "closed_form": closed.to_json(), "derivatives": via.to_json(), **closed.to_json()},
        )
        return OK if agree else DISAGREE
    elif cmd == "check-gp":
        rep = check_general_position(reg, p)
        text = "general position" if rep.ok else "\n".join(f"({c}) {d}" for c, d in rep.violations)
        out.emit(text, {"command": cmd, **rep.to_json()})
    elif cmd == "langlands":
        phi = FormalParam(p.segments)
        agree = langlands_agree(reg, phi)
        f = galois_ext(reg, phi)
        verdict = "AGREE" if agree else "DISAGREE"
        out.emit(f"{verdict} {f}", {"command": cmd, "verdict": verdict, **f.to_json()})
        return OK if agree else DISAGREE
    return OK


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_intermixed_args(argv)
    try:
        return _run(args, _Out(args.json, stdout))
    except LFactorError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return DOMAIN_ERROR
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
