"""Command-line interface.

Commands: verify-paper, search, classify, decode, decompose, generate,
complexity, check-power.  Words travel as ASCII digit lines; input
sources are either files ("file:PATH", a bare path, or "-" for stdin,
first non-empty line) or generator specs composed right to left:

    fixpoint:<morphism>:<seed>:<length>
    image:<morphism>:<spec>
    complement:<spec>
    literal:<digits>

so "image:tau:fixpoint:theta:0:20000" is tau applied to a 20000-letter
prefix of theta's fixed point from 0.

Exit codes: 0 ok, 1 mismatch, 2 usage or parse error, 3 length guard
exceeded.  Timings go to stderr (plain mode) or into the JSON payload,
never into comparison results, so stdout is reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .morphisms import equal_on_letters, named
from .properness import DEFAULT_LENGTH_GUARD
from .repetitions import exponent, is_power_free
from .search import longest_avoiding, run_reference_table
from .structure import (CaseTag, ClassificationError, DecompositionError,
                        classify_by_length4, decompose, f_decode, g_decode,
                        generate_case_word, h_decode)
from .words import (AlphabetError, LengthLimitError, ParseError, Word,
                    complement, factor_complexity, parse_word)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class SourceError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    parameters: dict
    results: object
    elapsed_ms: float = 0.0
    status: str = "ok"

    def to_json(self) -> dict:
        return {"command": self.command, "parameters": self.parameters,
                "results": self.results, "elapsed_ms": round(self.elapsed_ms, 3),
                "status": self.status}


def _read_word_line(path: str) -> str:
    stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
    try:
        for line in stream:
            line = line.strip()
            if line:
                return line
    finally:
        if stream is not sys.stdin:
            stream.close()
    raise SourceError(f"no word found in {'stdin' if path == '-' else path}")


def _infer_word(text: str) -> Word:
    biggest = max((int(c) for c in text if c.isdigit()), default=0)
    return parse_word(text, max(2, biggest + 1))


def parse_source(spec: str) -> Word:
    """Resolve a word source spec (see module docstring) into a Word."""
    head, _, rest = spec.partition(":")
    if head == "fixpoint":
        try:
            name, seed, length = rest.split(":")
            return named(name).iterate_prefix(int(seed), int(length))
        except (ValueError, KeyError) as exc:
            raise SourceError(f"bad fixpoint spec {spec!r}: {exc}") from exc
    if head == "image":
        name, _, inner = rest.partition(":")
        if not inner:
            raise SourceError(f"image spec needs an inner source: {spec!r}")
        try:
            return named(name).apply(parse_source(inner))
        except KeyError as exc:
            raise SourceError(str(exc)) from exc
    if head == "complement":
        if not rest:
            raise SourceError("complement spec needs an inner source")
        return complement(parse_source(rest))
    if head == "literal":
        return _infer_word(rest)
    if head == "file":
        return _infer_word(_read_word_line(rest))
    return _infer_word(_read_word_line(spec))


def _with_alphabet(w: Word, alphabet_size: int, what: str) -> Word:
    if w.letters and max(w.letters) >= alphabet_size:
        raise SourceError(
            f"{what} needs a word over a {alphabet_size}-letter alphabet")
    return Word(w.letters, alphabet_size)


def _load_input(args, alphabet_size: int | None, what: str) -> Word:
    w = parse_source(args.input)
    if alphabet_size is not None:
        w = _with_alphabet(w, alphabet_size, what)
    if args.limit is not None and len(w) > args.limit:
        raise LengthLimitError(
            f"input of length {len(w)} exceeds --limit {args.limit}")
    return w


def _emit(args, report: RunReport, plain_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for line in plain_lines:
            print(line)
        print(f"elapsed: {report.elapsed_ms:.1f} ms", file=sys.stderr)


# ---------------------------------------------------------------- commands

def _cmd_verify_paper(args) -> int:
    t0 = time.perf_counter()
    rows = None
    if args.expected_table:
        with open(args.expected_table, "r", encoding="ascii") as fh:
            rows = [(tuple(fb), int(expected)) for fb, expected in json.load(fh)]
    checks = []
    for row in run_reference_table(rows, target=args.target):
        payload = row.to_json()
        payload["kind"] = "search"
        checks.append(payload)

    g, h, tau, theta = named("g"), named("h"), named("tau"), named("theta")
    sigma, sigma_inv = named("sigma"), named("sigma_inv")
    identities = [
        ("tau = g.sigma", equal_on_letters(tau, g.compose(sigma))),
        ("theta^2 = sigma_inv.h.sigma",
         equal_on_letters(theta.compose(theta),
                          sigma_inv.compose(h.compose(sigma)))),
    ]
    for name, ok in identities:
        checks.append({"kind": "identity", "name": name, "match": ok})

    def word2(text: str) -> Word:
        return parse_word(text, 2)

    def word3(text: str) -> Word:
        return parse_word(text, 3)

    threshold = Fraction(5, 2)
    power_checks = [
        ("000 is a 5/2+ power", word2("000"), None),
        ("g(2121) extended by 01", word2("01001001"),
         g.apply(word3("2121")) + word2("01")),
        ("g(10101) flanked by 1 and 0", word2("10011001100"),
         word2("1") + g.apply(word3("10101")) + word2("0")),
        ("g(10210210)", word2("0011010011010011"),
         g.apply(word3("10210210"))),
    ]
    for name, expected_word, construction in power_checks:
        built_ok = construction is None or construction == expected_word
        e = exponent(expected_word)
        checks.append({"kind": "power", "name": name,
                       "word": str(expected_word),
                       "exponent": f"{e.length}/{e.period}",
                       "match": built_ok and e > threshold})

    all_ok = all(c["match"] for c in checks)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.json:
        for c in checks:
            print(json.dumps(c))
        summary = RunReport("verify-paper", {"target": args.target},
                            {"checks": len(checks)}, elapsed,
                            "ok" if all_ok else "mismatch")
        print(json.dumps(summary.to_json()))
    else:
        for c in checks:
            if c["kind"] == "search":
                label = ",".join(c["forbidden"])
                print(f"search {{{label}}}: expected {c['expected']} "
                      f"computed {c['computed']} "
                      f"{'ok' if c['match'] else 'MISMATCH'}")
            elif c["kind"] == "identity":
                print(f"identity {c['name']}: "
                      f"{'ok' if c['match'] else 'MISMATCH'}")
            else:
                print(f"power {c['name']}: exponent {c['exponent']} "
                      f"{'ok' if c['match'] else 'MISMATCH'}")
        print(f"{len(checks)} checks, "
              f"{'all ok' if all_ok else 'MISMATCHES PRESENT'}")
        print(f"elapsed: {elapsed:.1f} ms", file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _cmd_search(args) -> int:
    t0 = time.perf_counter()
    forbidden = [s for s in args.forbidden.split(",") if s]
    outcome = longest_avoiding(forbidden, args.target)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("search",
                       {"forbidden": forbidden, "target": args.target},
                       outcome.to_json(), elapsed)
    _emit(args, report, [
        f"max_length: {outcome.max_length}",
        f"reached_target: {outcome.reached_target}",
        f"witness: {outcome.witness}",
        f"nodes: {outcome.nodes_explored}",
    ])
    return EXIT_OK


def _cmd_classify(args) -> int:
    t0 = time.perf_counter()
    w = _load_input(args, 2, "classify")
    cls = classify_by_length4(w)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("classify", {"length": len(w)},
                       {"class": cls.to_json()}, elapsed)
    if cls.is_definite:
        lines = [f"class: {cls.tag.value}"]
    elif cls.is_ambiguous:
        lines = ["class: ambiguous ("
                 + ", ".join(t.value for t in cls.compatible) + ")"]
    else:
        lines = ["class: inconsistent (offending factors: "
                 + ", ".join(str(w_) for w_ in cls.offenders) + ")"]
    _emit(args, report, lines)
    return EXIT_OK


_DECODERS = {"g": (g_decode, 2), "f": (f_decode, 3), "h": (h_decode, 3)}


def _cmd_decode(args) -> int:
    t0 = time.perf_counter()
    decoder, alphabet = _DECODERS[args.morphism]
    w = _load_input(args, alphabet, f"{args.morphism}-decode")
    result = decoder(w)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("decode",
                       {"morphism": args.morphism, "length": len(w)},
                       result.to_json(), elapsed)
    _emit(args, report, [
        f"preimage: {result.preimage}",
        f"dropped_prefix: {result.dropped_prefix}",
        f"truncated_suffix: {result.truncated_suffix}",
    ])
    return EXIT_OK


def _cmd_decompose(args) -> int:
    t0 = time.perf_counter()
    w = _load_input(args, 2, "decompose")
    cert = decompose(w, args.depth, min_level_length=args.min_level_length,
                     front_trim_bound=args.seed_trim)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("decompose",
                       {"depth": args.depth, "length": len(w)},
                       cert.to_json(), elapsed)
    lines = [f"class: {cert.factor_class.tag.value}",
             f"depth_achieved: {cert.depth_achieved}"]
    for idx, level in enumerate(cert.levels):
        def verdict(rep):
            if rep is None:
                return "-"
            state = "clean" if rep.clean else f"violation at {rep.violation.position}"
            return (f"{state} (checked {rep.checked_length} letters, "
                    f"trim {rep.trim})")
        lines.append(
            f"level {idx} [{level.morphism}]: preimage length "
            f"{len(level.decode.preimage)}, margins "
            f"{level.decode.dropped_prefix}/{level.decode.truncated_suffix}, "
            f"tail_trim {level.tail_trim}; proper: {verdict(level.proper)}; "
            f"antiproper: {verdict(level.antiproper)}")
    _emit(args, report, lines)
    return EXIT_OK


def _cmd_generate(args) -> int:
    t0 = time.perf_counter()
    w = generate_case_word(args.case, args.depth, args.length)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("generate",
                       {"case": args.case, "depth": args.depth,
                        "length": args.length},
                       {"word": str(w)}, elapsed)
    _emit(args, report, [str(w)])
    return EXIT_OK


def _cmd_complexity(args) -> int:
    t0 = time.perf_counter()
    if args.max_n < 1:
        raise SourceError("--max-n must be at least 1")
    w = _load_input(args, None, "complexity")
    if len(w) < args.safety * args.max_n:
        raise SourceError(
            f"word of length {len(w)} is too short for max_n {args.max_n}; "
            f"provide at least {args.safety * args.max_n} letters "
            f"(safety factor {args.safety})")
    rows = []
    all_match = True
    for n in range(1, args.max_n + 1):
        c = factor_complexity(w, n)
        row = {"n": n, "complexity": c}
        if args.expect:
            expected = 2 * n if args.expect == "2n" else 2 * n + 1
            row["expected"] = expected
            row["match"] = c == expected
            all_match &= row["match"]
        rows.append(row)
    elapsed = (time.perf_counter() - t0) * 1000
    status = "ok" if (not args.expect or all_match) else "mismatch"
    report = RunReport("complexity",
                       {"length": len(w), "max_n": args.max_n,
                        "expect": args.expect},
                       {"rows": rows}, elapsed, status)
    lines = []
    for row in rows:
        line = f"n={row['n']}: {row['complexity']}"
        if args.expect:
            line += (f" expected {row['expected']} "
                     f"{'ok' if row['match'] else 'MISMATCH'}")
        lines.append(line)
    _emit(args, report, lines)
    return EXIT_OK if status == "ok" else EXIT_MISMATCH


def _cmd_check_power(args) -> int:
    t0 = time.perf_counter()
    w = _load_input(args, None, "check-power")
    try:
        threshold = Fraction(args.threshold)
    except (ValueError, ZeroDivisionError) as exc:
        raise SourceError(f"bad threshold {args.threshold!r}: {exc}") from exc
    witness = is_power_free(w, threshold, args.strict)
    elapsed = (time.perf_counter() - t0) * 1000
    report = RunReport("check-power",
                       {"length": len(w), "threshold": str(threshold),
                        "strict": args.strict},
                       {"witness": None if witness is None else witness.to_json()},
                       elapsed)
    if witness is None:
        kind = f"{threshold}{'+' if args.strict else ''}"
        lines = [f"ok: no factor violates the {kind} bound"]
    else:
        lines = [f"witness: start={witness.start} length={witness.length} "
                 f"period={witness.period}"]
    _emit(args, report, lines)
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    common.add_argument("--limit", type=int, default=DEFAULT_LENGTH_GUARD,
                        help="input length guard in letters")
    common.add_argument("--seed-trim", type=int, default=64, dest="seed_trim",
                        help="front-trim bound for properness reports")

    parser = argparse.ArgumentParser(
        prog="rotewords",
        description="Power avoidance, morphisms, and structure of "
                    "low-complexity words")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="recompute the reference search table and "
                            "identity checks")
    p.add_argument("--target", type=int, default=200)
    p.add_argument("--expected-table", default=None,
                   help="JSON file overriding the expected rows (testing aid)")
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("search", parents=[common],
                       help="longest binary word avoiding 5/2+ powers and "
                            "the given factors")
    p.add_argument("--forbidden", required=True,
                   help="comma-separated binary factors")
    p.add_argument("--target", type=int, default=200)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", parents=[common],
                       help="length-4 factor classification of a binary word")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decode", parents=[common],
                       help="invert one morphism application")
    p.add_argument("--morphism", choices=sorted(_DECODERS), required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("decompose", parents=[common],
                       help="iterated decoding with properness certificates")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--min-level-length", type=int, default=10,
                   dest="min_level_length")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("generate", parents=[common],
                       help="construct a word of one of the four classes")
    p.add_argument("--case", choices=[t.value for t in CaseTag], required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("complexity", parents=[common],
                       help="factor complexity table of a word")
    p.add_argument("--input", required=True)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--expect", choices=["2n", "2n+1"], default=None)
    p.add_argument("--safety", type=int, default=100,
                   help="required input length as a multiple of max-n")
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("check-power", parents=[common],
                       help="scan all factors against an exponent threshold")
    p.add_argument("--input", required=True)
    p.add_argument("--threshold", required=True,
                   help="rational threshold such as 5/2")
    p.add_argument("--strict", action="store_true",
                   help="flag only exponents strictly above the threshold")
    p.set_defaults(func=_cmd_check_power)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LengthLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (SourceError, ParseError, AlphabetError, ClassificationError,
            DecompositionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
