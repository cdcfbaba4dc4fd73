"""Command-line surface with stable text and JSON output.

Exit codes: 0 for a positive result, 1 for a negative result, 2 for
usage or input errors.  Positions in all output (including the T-tail
start r of a certificate) are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, extend, oracle, thue_morse, transition, words

_AUDIT_CAP = 20
_ENUMERATE_LIST_CAP = 24


class _UsageError(Exception):
    pass


def _parse_word(text: str, d: int | None) -> tuple[str, int]:
    try:
        eff = words.validate_word(text, d)
    except ValueError as exc:
        raise _UsageError(str(exc))
    return text, eff


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_check(args) -> int:
    w, _ = _parse_word(args.word, args.alphabet)
    witness = words.find_cube(w)
    if witness is None:
        _emit(args, {"word": w, "cube_free": True, "witness": None}, ["cube-free"])
        return 0
    root = witness.root(w)
    payload = {
        "word": w,
        "cube_free": False,
        "witness": {"position": witness.position, "period": witness.period, "root": root},
    }
    _emit(args, payload, [f"cube at {witness.position} period {witness.period} root {root}"])
    return 1


def _cmd_extendable(args) -> int:
    w, d = _parse_word(args.word, args.alphabet)
    if not words.is_cube_free(w):
        raise _UsageError(f"{w!r} is not cube-free")
    decide = extend.is_right_extendable if args.side == "right" else extend.is_left_extendable
    verdict = decide(w, d, assume_context_bound=args.assume_context_bound)
    if verdict.extendable:
        if verdict.heuristic:
            payload = {"word": w, "side": args.side, "extendable": True, "heuristic": True}
            _emit(args, payload, [f"yes ({args.side}-extendable, heuristic: no certificate)"])
            return 0
        cert = verdict.certificate
        assert cert is not None
        base = w if args.side == "right" else words.reverse(w)
        payload = {
            "word": w,
            "side": args.side,
            "extendable": True,
            "Y": cert.Y,
            "r": cert.r,
            "seam": cert.seam,
            "tm_aligned": cert.tm_aligned,
            "verified_prefix": cert.verified_prefix(base),
        }
        _emit(
            args,
            payload,
            [f"yes ({args.side}-extendable)", json.dumps({"Y": cert.Y, "r": cert.r}, sort_keys=True)],
        )
        return 0
    payload = {
        "word": w,
        "side": args.side,
        "extendable": False,
        "exhausted_at": verdict.max_context_length,
    }
    _emit(
        args,
        payload,
        ["no", json.dumps({"exhausted_at": verdict.max_context_length}, sort_keys=True)],
    )
    return 1


def _cmd_extend(args) -> int:
    w, d = _parse_word(args.word, args.alphabet)
    if not words.is_cube_free(w):
        raise _UsageError(f"{w!r} is not cube-free")
    try:
        cert = extend.algorithm2(w, d)
    except extend.NotExtendableError as exc:
        payload = {"word": w, "extendable": False, "exhausted_at": exc.max_context_length}
        _emit(args, payload, ["not right-extendable",
                              json.dumps({"exhausted_at": exc.max_context_length}, sort_keys=True)])
        return 1
    payload = {
        "word": w,
        "Y": cert.Y,
        "r": cert.r,
        "seam": cert.seam,
        "tm_aligned": cert.tm_aligned,
        "verified_prefix": cert.verified_prefix(w),
    }
    _emit(args, payload, [json.dumps(payload, sort_keys=True)])
    return 0


def _cmd_transition(args) -> int:
    d = args.alphabet
    u, du = _parse_word(args.u, d)
    v, dv = _parse_word(args.v, d)
    eff = d if d is not None else max(du, dv)
    if not words.is_cube_free(u):
        raise _UsageError(f"{u!r} is not cube-free")
    if not words.is_cube_free(v):
        raise _UsageError(f"{v!r} is not cube-free")
    result = transition.transition_exists(u, v, eff)
    if result.exists:
        assert result.witness is not None
        assert words.is_cube_free(u + result.witness + v)
        payload = {
            "u": u,
            "v": v,
            "exists": True,
            "witness": result.witness,
            "method": result.method.value,
        }
        _emit(args, payload, [result.witness, f"verified cube-free ({result.method.value})"])
        return 0
    payload = {"u": u, "v": v, "exists": False, "witness": None, "method": result.method.value}
    _emit(args, payload, ["none", "context tree exhausted without the required suffix/prefix"])
    return 1


def _cmd_markers(args) -> int:
    w, _ = _parse_word(args.word, 2)
    marks = analysis.scan_markers(w)
    payload: dict = {
        "word": w,
        "markers": [{"kind": m.kind, "position": m.position} for m in marks],
        "factorization": None,
    }
    lines = [" ".join(f"{m.kind}@{m.position}" for m in marks) if marks else "(none)"]
    if words.is_cube_free(w) and marks and marks[-1].end == len(w):
        fact = analysis.factorize(w)
        payload["factorization"] = list(fact.segments)
        lines.append("|".join(fact.segments))
    _emit(args, payload, lines)
    return 0


def _cmd_tm(args) -> int:
    chosen = [opt for opt in (args.prefix, args.factor, args.range) if opt is not None]
    if len(chosen) != 1:
        raise _UsageError("exactly one of --prefix, --factor, --range is required")
    if args.prefix is not None:
        if args.prefix < 0:
            raise _UsageError("prefix length must be non-negative")
        out = thue_morse.tm_prefix(args.prefix)
        _emit(args, {"prefix": out}, [out])
        return 0
    if args.factor is not None:
        w, d = _parse_word(args.factor, None)
        if d > 2:
            raise _UsageError("factor queries are over the binary alphabet")
        ok = thue_morse.is_tm_factor(w)
        _emit(args, {"factor": w, "is_factor": ok}, ["factor" if ok else "not-a-factor"])
        return 0 if ok else 1
    i, j = args.range
    try:
        out = thue_morse.tm_range(i, j)
    except ValueError as exc:
        raise _UsageError(str(exc))
    _emit(args, {"range": [i, j], "word": out}, [out])
    return 0


def _cmd_enumerate(args) -> int:
    if args.d < 2 or args.d > 26 or args.n < 0:
        raise _UsageError("need an alphabet size in 2..26 and a non-negative length")
    if args.list and args.n > _ENUMERATE_LIST_CAP:
        raise _UsageError(f"--list is capped at length {_ENUMERATE_LIST_CAP}")
    try:
        result = oracle.enumerate_cube_free(args.d, args.n, collect=args.list)
    except ValueError as exc:
        raise _UsageError(str(exc))
    payload: dict = {"d": args.d, "n": args.n, "count": result.count}
    lines = [str(result.count)]
    if args.list:
        payload["words"] = result.words
        lines.extend(result.words or [])
    _emit(args, payload, lines)
    return 0


def _cmd_audit(args) -> int:
    if not 1 <= args.max_n <= _AUDIT_CAP:
        raise _UsageError(f"max_n is capped at {_AUDIT_CAP}")
    chains = oracle.greedy_chain_search(args.max_n)
    best: dict[int, int] = {}
    violations = []
    for u, w, k in chains:
        audited = extend.chain_length_audit(u, w)
        if audited != k:
            violations.append({"word": u, "context": w, "greedy": k, "audited": audited})
        n = len(u)
        best[n] = max(best.get(n, 0), audited)
        if audited > extend.log_bound(n):
            violations.append({"word": u, "context": w, "k": audited, "bound": extend.log_bound(n)})
    rows = [
        {"n": n, "max_k": best[n], "bound": round(extend.log_bound(n), 2)}
        for n in sorted(best)
    ]
    payload = {"max_n": args.max_n, "rows": rows, "violations": violations}
    lines = [f"n={row['n']:2d}  max_k={row['max_k']:2d}  bound={row['bound']:.2f}" for row in rows]
    if violations:
        lines.append(f"VIOLATIONS: {violations}")
    _emit(args, payload, lines)
    return 1 if violations else 0


def _cmd_verify(args) -> int:
    raw = sys.stdin.read() if args.certificate == "-" else None
    if raw is None:
        try:
            with open(args.certificate, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError:
            raw = args.certificate  # allow the JSON inline
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"certificate is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise _UsageError("certificate JSON must be an object")
    try:
        if {"u", "v", "witness"} <= set(data):
            ok = words.is_cube_free(data["u"] + data["witness"] + data["v"])
            payload = {"valid": bool(ok), "kind": "transition", **data}
        elif {"word", "Y", "r"} <= set(data):
            base = data["word"]
            if data.get("side") == "left":
                base = words.reverse(base)
            # without provenance the structural seam check degenerates (an
            # empty suffix is uniform); the cube-freeness core still fully
            # validates the infinite claim
            seam = int(data.get("seam", len(base + data["Y"])))
            cert = extend.TailCertificate(
                data["Y"], int(data["r"]), seam, bool(data.get("tm_aligned", False))
            )
            ok = words.is_cube_free(base) and cert.verify(base)
            payload = {"valid": bool(ok), "kind": "tail", **data}
        else:
            raise _UsageError('certificate must carry {"word","Y","r"} or {"u","v","witness"}')
    except (TypeError, ValueError) as exc:
        raise _UsageError(f"malformed certificate: {exc}")
    _emit(args, payload, ["valid" if ok else "INVALID"])
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubefree",
        description="Cube-free words: detection, extension certificates, transition words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("check", _cmd_check, "detect cubes in a word")
    p.add_argument("word")
    p.add_argument("--alphabet", type=int, default=None)

    p = add("extendable", _cmd_extendable, "decide right/left extendability with a certificate")
    p.add_argument("side", choices=("right", "left"))
    p.add_argument("word")
    p.add_argument("--alphabet", type=int, default=None)
    p.add_argument(
        "--assume-context-bound",
        type=int,
        default=None,
        metavar="B",
        help="heuristic: treat any context of length B as a yes (no certificate)",
    )

    p = add("extend", _cmd_extend, "construct an explicit infinite right context (Y, r)")
    p.add_argument("word")
    p.add_argument("--alphabet", type=int, default=None)

    p = add("transition", _cmd_transition, "find w with u+w+v cube-free, or prove none exists")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--alphabet", type=int, default=None)

    p = add("markers", _cmd_markers, "marker occurrences and marker factorization")
    p.add_argument("word")

    p = add("tm", _cmd_tm, "query the Thue-Morse word")
    p.add_argument("--prefix", type=int, default=None, metavar="N")
    p.add_argument("--factor", type=str, default=None, metavar="WORD")
    p.add_argument("--range", type=int, nargs=2, default=None, metavar=("I", "J"))

    p = add("enumerate", _cmd_enumerate, "count cube-free words of a given length")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true")

    p = add("audit", _cmd_audit, "stress the period-chain length bound")
    p.add_argument("max_n", type=int)

    p = add("verify", _cmd_verify, "re-check a certificate or witness JSON (file, '-', or inline)")
    p.add_argument("certificate")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
