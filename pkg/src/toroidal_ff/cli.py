"""Command line entry point: ``toroidal-ff <command> SPEC [options]``.

Exit codes: 0 success, 1 unreadable or invalid spec, 2 a theorem or
invariant check failed, 3 a numerical precision failure.
"""

import argparse
import json
import logging
import sys
import time

from .errors import ContractViolation, InvariantViolation, PrecisionError, ResourceLimitError
from .function_field import FunctionField
from .report import (analyze_payload, hecke_payload, render_text, toroidal_payload, twist_payload,
                     verify_payload, verify_text, zeros_payload)
from .spec_io import SpecError, bundled_names, bundled_spec_text, load_spec, loads_spec
from .verification import invariant_suite

EXIT_OK, EXIT_PARSE, EXIT_THEOREM, EXIT_PRECISION = 0, 1, 2, 3

log = logging.getLogger("toroidal_ff")


def _parse_complex(text):
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--timing", action="store_true", help="report wall-clock time on stderr")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="toroidal-ff",
                                description="L-functions, Hecke data and toroidal periods of curves over finite fields")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full summary of one curve")
    a.add_argument("spec")
    a.add_argument("--max-place-degree", type=int)
    a.add_argument("--include-sign-twists", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    v.add_argument("spec", nargs="?")
    v.add_argument("--bundled", action="store_true", help="run on every bundled curve")

    z = sub.add_parser("zeros", parents=[common], help="zeros of all L-polynomials and their pairing")
    z.add_argument("spec")
    z.add_argument("--include-sign-twists", action="store_true")

    h = sub.add_parser("hecke-table", parents=[common], help="Hecke eigenvalues place by place")
    h.add_argument("spec")
    h.add_argument("--max-place-degree", type=int, default=3)
    h.add_argument("--span", type=int, default=3, help="number of derivatives in the span")

    t = sub.add_parser("toroidal", parents=[common], help="toroidal certificates and residues")
    t.add_argument("spec")

    w = sub.add_parser("twist-search", parents=[common], help="search a non-vanishing quadratic twist")
    w.add_argument("spec")
    w.add_argument("--s", dest="s0", type=_parse_complex, default=complex(0.5, 1.0),
                   help="point s0, e.g. 0.5+1.2i")
    w.add_argument("--twist-search-degree", type=int, default=4)
    w.add_argument("--min-degree", type=int, default=1)
    w.add_argument("--no-unramified", action="store_true")
    return p


def _load(spec, check=True):
    if spec in bundled_names():
        return loads_spec(bundled_spec_text(spec), check=check, source=spec)
    return load_spec(spec, check=check)


def _emit(payload, args, text=None):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text if text is not None else render_text(payload))


def _run_verify(args):
    if args.bundled:
        targets = [(n, _load(n, check=False)) for n in bundled_names()]
    elif args.spec:
        targets = [(args.spec, _load(args.spec, check=False))]
    else:
        raise SpecError("verify needs SPEC or --bundled")
    results, ok = {}, True
    texts = []
    for name, curve in targets:
        checks = invariant_suite(FunctionField(curve) if curve.is_nonsingular() else _Singular(curve),
                                 tol=args.tolerance)
        results[name] = verify_payload(checks)
        ok &= results[name]["passed"]
        texts.append(f"== {name}\n" + verify_text(checks))
    _emit({"passed": ok, "curves": results}, args, "\n".join(texts))
    return EXIT_OK if ok else EXIT_THEOREM


class _Singular:
    """Stand-in field for a singular model: only the nonsingularity check runs."""

    def __init__(self, curve):
        self.curve = curve


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        if args.command == "verify":
            code = _run_verify(args)
        else:
            field = FunctionField(_load(args.spec))
            if args.command == "analyze":
                payload = analyze_payload(field, args.max_place_degree, args.include_sign_twists)
            elif args.command == "zeros":
                payload = zeros_payload(field, args.include_sign_twists)
            elif args.command == "hecke-table":
                payload = hecke_payload(field, args.max_place_degree, args.span)
            elif args.command == "toroidal":
                payload = toroidal_payload(field)
            else:
                payload = twist_payload(field, args.s0, args.twist_search_degree,
                                        include_unramified=not args.no_unramified,
                                        min_degree=args.min_degree)
            _emit(payload, args)
            code = EXIT_OK
    except PrecisionError as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        code = EXIT_PRECISION
    except InvariantViolation as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        code = EXIT_THEOREM
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
