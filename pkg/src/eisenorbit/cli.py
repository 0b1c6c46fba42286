"""Command-line front end.

Each invocation runs one subcommand and prints a single JSON document on
stdout; diagnostics go to stderr. Exit codes: 0 success, 1 property failure,
2 parse or usage error, 3 semantic precondition failed, 4 internal self-check.
"""

from __future__ import annotations

import argparse
import random
import re
import sys

from .decompose import classify_cell, decompose_left, decompose_right
from .gamma import (
    InternalConsistencyError,
    InvalidTupleError,
    check_conditions,
    gamma3_violations,
    in_gamma3,
    in_gamma_inf3,
    invariants,
    random_gamma3,
    same_orbit,
)
from .matrices import NotUnimodularError
from .represent import case_of, representative
from .serialize import (
    ParseError,
    decomposition_to_json,
    dumps,
    element_to_json,
    load_mat3,
    matrix_to_json,
    tuple_from_json,
    tuple_to_json,
)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_SELF_CHECK = 4

CONDITIONS = ("I1", "I2", "I3", "I4")


class CommandError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _emit(doc) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def _warn(message: str) -> None:
    sys.stderr.write(f"eisenorbit: {message}\n")


def _condition_map(t) -> dict:
    violated = set(check_conditions(t))
    return {c: c not in violated for c in CONDITIONS}


def cmd_invariants(args) -> int:
    A = load_mat3(args.file)
    problems = gamma3_violations(A)
    if problems:
        raise CommandError(EXIT_PRECONDITION, "matrix is not in Gamma(3): " + "; ".join(problems))
    t = invariants(A)
    conds = _condition_map(t)
    _emit({"tuple": tuple_to_json(t), "satisfied": [c for c in CONDITIONS if conds[c]]})
    return EXIT_OK


def cmd_decompose(args) -> int:
    A = load_mat3(args.file)
    if A.det() != 1:
        raise CommandError(EXIT_PRECONDITION, f"det = {A.det()}, expected 1")
    dec = decompose_left(A) if args.side == "left" else decompose_right(A)
    if dec.recompose() != A:
        raise InternalConsistencyError("decomposition does not recompose")
    doc = {"side": args.side}
    doc.update(decomposition_to_json(dec))
    doc["recomposes"] = True
    _emit(doc)
    return EXIT_OK


def cmd_represent(args) -> int:
    t = tuple_from_json(args.tuple)
    try:
        case = case_of(t)
    except InvalidTupleError as exc:
        raise CommandError(EXIT_PRECONDITION, "violated conditions: " + ", ".join(exc.violations))
    X, dec = representative(t)
    if invariants(X) != t:
        raise InternalConsistencyError("Inv(X) differs from the requested tuple")
    _emit(
        {
            "tuple": tuple_to_json(t),
            "case": case.value,
            "X": matrix_to_json(X),
            "decomposition": decomposition_to_json(dec),
            "invariants_match": True,
        }
    )
    return EXIT_OK


def _matrix_report(A) -> dict:
    det = A.det()
    report = {
        "det": element_to_json(det),
        "unimodular": det == 1,
        "in_gamma3": in_gamma3(A),
        "in_gamma_inf3": in_gamma_inf3(A),
    }
    if det == 1:
        report["cell"] = classify_cell(A).value
    if report["in_gamma3"]:
        t = invariants(A)
        report["tuple"] = tuple_to_json(t)
        report["conditions"] = _condition_map(t)
    else:
        report["violations"] = gamma3_violations(A)
    return report


def cmd_verify(args) -> int:
    if (args.file is None) == (args.tuple is None):
        raise ParseError("give exactly one of a matrix file or --tuple")
    if args.file is not None:
        doc = {"kind": "matrix"}
        doc.update(_matrix_report(load_mat3(args.file)))
    else:
        t = tuple_from_json(args.tuple)
        conds = _condition_map(t)
        doc = {"kind": "tuple", "tuple": tuple_to_json(t), "conditions": conds, "valid": all(conds.values())}
    _emit(doc)
    return EXIT_OK


ROUNDTRIP_PROPERTIES = (
    "conditions",
    "representative",
    "same_orbit",
    "decompose_right",
    "decompose_left",
)


def _roundtrip_sample(A) -> dict:
    """Outcome of each property on one matrix; True, or a short failure reason."""
    out = {}

    def run(name, check):
        try:
            ok = check()
        except Exception as exc:  # noqa: BLE001 - any exception is a counterexample
            out[name] = f"{type(exc).__name__}: {exc}"
            return
        out[name] = True if ok else "check returned false"

    t = invariants(A)
    run("conditions", lambda: not check_conditions(t))
    rep = {}

    def rep_check():
        X, dec = representative(t)
        rep["X"] = X
        return in_gamma3(X) and invariants(X) == t and dec.recompose() == X

    run("representative", rep_check)
    if "X" in rep:
        run("same_orbit", lambda: same_orbit(rep["X"], A))
    else:
        out["same_orbit"] = "no representative"
    run("decompose_right", lambda: decompose_right(A).recompose() == A)
    run("decompose_left", lambda: decompose_left(A).recompose() == A)
    return out


def cmd_roundtrip(args) -> int:
    rng = random.Random(args.seed)
    counts = {p: {"pass": 0, "fail": 0} for p in ROUNDTRIP_PROPERTIES}
    first = None
    for index in range(args.samples):
        A, word = random_gamma3(rng, max_length=args.length)
        results = _roundtrip_sample(A)
        for prop in ROUNDTRIP_PROPERTIES:
            outcome = results[prop]
            counts[prop]["pass" if outcome is True else "fail"] += 1
            if outcome is not True and first is None:
                first = {
                    "sample": index,
                    "seed": args.seed,
                    "property": prop,
                    "reason": outcome,
                    "word": [[i, j, element_to_json(t)] for i, j, t in word],
                    "matrix": matrix_to_json(A),
                }
    ok = first is None
    doc = {
        "samples": args.samples,
        "seed": args.seed,
        "length": args.length,
        "properties": counts,
        "all_pass": ok,
    }
    if not ok:
        doc["counterexample"] = first
        _warn(f"property {first['property']} failed on sample {first['sample']}")
    _emit(doc)
    return EXIT_OK if ok else EXIT_PROPERTY


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenorbit",
        description="Decompositions and Gamma_inf(3) orbit invariants over the Eisenstein integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("invariants", help="orbit invariants of a Gamma(3) matrix")
    p.add_argument("file", help="JSON file holding a 3x3 matrix of element strings")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", help="left or right cell decomposition")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("represent", help="orbit representative of an invariant tuple")
    p.add_argument("--tuple", nargs=6, required=True, metavar=("A1", "B1", "C1", "A2", "B2", "C2"))
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="report membership and condition predicates")
    p.add_argument("file", nargs="?")
    p.add_argument("--tuple", nargs=6, metavar=("A1", "B1", "C1", "A2", "B2", "C2"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roundtrip", help="randomized check of invariants, representatives and decompositions")
    p.add_argument("--samples", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=_non_negative_int, default=12, help="maximum word length")
    p.set_defaults(func=cmd_roundtrip)
    return parser


_NEGATIVE_ELEMENT = re.compile(r"^-[\dwω]")


def _protect_tuple_values(argv: list[str]) -> list[str]:
    # argparse reads "-3+6*w" as an option; a leading space keeps it positional
    # and the element parser ignores whitespace
    out = list(argv)
    for k, token in enumerate(argv):
        if token == "--tuple":
            for j in range(k + 1, min(k + 7, len(out))):
                if _NEGATIVE_ELEMENT.match(out[j]):
                    out[j] = " " + out[j]
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_protect_tuple_values(argv))
    try:
        return args.func(args)
    except ParseError as exc:
        _warn(f"parse error: {exc}")
        return EXIT_USAGE
    except CommandError as exc:
        _warn(str(exc))
        return exc.code
    except NotUnimodularError as exc:
        _warn(str(exc))
        return EXIT_PRECONDITION
    except InternalConsistencyError as exc:
        _warn(f"self-check failed: {exc}")
        return EXIT_SELF_CHECK


if __name__ == "__main__":
    sys.exit(main())
