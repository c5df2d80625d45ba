"""Command-line front end.

Exit status: 0 success, 1 usage or bad input, 2 computation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .cfengine import PeriodicCF, cf_expand, detect_period, isolate_real_roots
from .cubicfield import QrElement, class_representative, classify_cubic, elements_equivalent
from .families import family_from_word
from .highdeg import degree_obstruction, numeric_common_tails, sextic_constraints, sextic_family, verify_klein4, verify_sextic_action
from .lft import canonical_triple, format_word, order_in_pgl, parse_matrix, parse_word, standard_form
from .polycore import parse_polynomial
from .scan import ScanConfig, run_scan, write_records

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_IO = 0, 1, 2, 3
DEFAULT_DEPTH = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_depth() -> int:
    raw = os.environ.get("TAILFORGE_DEPTH")
    if raw is None or raw == "":
        return DEFAULT_DEPTH
    try:
        depth = int(raw)
    except ValueError:
        raise UsageError(f"TAILFORGE_DEPTH must be an integer, got {raw!r}") from None
    if depth < 0:
        raise UsageError("TAILFORGE_DEPTH must be nonnegative")
    return depth


def _range(text: str) -> tuple[int, int]:
    """'lo:hi', 'lo..hi' or a single integer."""
    for sep in (":", ".."):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                return int(lo), int(hi)
            except ValueError:
                break
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use lo:hi") from None
    return v, v


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def _yes(flag) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args):
    p = parse_polynomial(args.poly)
    depth = args.depth if args.depth is not None else default_depth()
    rep = classify_cubic(p, depth)
    lines = [f"poly: {p}"]
    if rep.disc_square_root is None:
        lines.append(f"discriminant: {rep.discriminant} (not a square)")
    else:
        lines.append(f"discriminant: {rep.discriminant} (square of {rep.disc_square_root})")
    lines.append(f"irreducible: {_yes(rep.irreducible)}")
    if rep.relating_matrix is not None:
        lines.append(f"matrix: {rep.relating_matrix}")
        lines.append(f"ad: {rep.ad_value}")
    lines.append(f"common tails: {_yes(rep.common_tails)}")
    for i, c in enumerate(rep.cf_prefixes):
        lines.append(f"root {i}: {c}")
    _emit(args, rep.to_dict(timing=True), "\n".join(lines))


def cmd_cf(args):
    p = parse_polynomial(args.poly)
    n = args.terms if args.terms is not None else default_depth()
    roots = isolate_real_roots(p)
    exps = [cf_expand(x, n, allow_rational=True) for x in roots]
    periods: list[PeriodicCF | None] = [None] * len(roots)
    if p.degree == 2 and len(roots) == 2:
        periods = [detect_period(x) for x in roots]
    payload = {"poly": list(p.coeffs), "roots": [list(e.terms) for e in exps]}
    if p.degree == 2 and len(roots) == 2:
        payload["periodic"] = [{"preperiod": list(q.preperiod), "period": list(q.period)} for q in periods]
    lines = []
    for i, (e, q) in enumerate(zip(exps, periods)):
        line = f"root {i} ({float(roots[i]):.12g}): {e}"
        if q is not None:
            line += f"  = {q}"
        lines.append(line)
    _emit(args, payload, "\n".join(lines) if lines else "no real roots")


def cmd_equiv(args):
    p = parse_polynomial(args.poly)
    e1, e2 = QrElement.parse(args.e1), QrElement.parse(args.e2)
    same = elements_equivalent(e1, e2, p)
    reps = [class_representative(e, p) for e in (e1, e2)]
    payload = {"equivalent": same, "representatives": [[str(m), str(v)] for m, v in reps]}
    text = "equivalent" if same else "not equivalent"
    text += "".join(f"\n  class of element {i + 1}: ({m})r + {v}" for i, (m, v) in enumerate(reps))
    _emit(args, payload, text)


def cmd_canon(args):
    m = parse_matrix(args.matrix)
    t = canonical_triple(m)
    payload = {"standard_form": list(standard_form(m).entries), "triple": list(t.key), "word": format_word(t.word)}
    text = f"triple (eps, y, eta) = {t.key}\nrow operations: {format_word(t.word) or '(none)'}"
    _emit(args, payload, text)


def cmd_order(args):
    k = order_in_pgl(parse_matrix(args.matrix))
    value = "inf" if k == float("inf") else k
    _emit(args, {"order": value}, str(value))


def cmd_family(args):
    fam = family_from_word(parse_word(args.word))
    payload = {"description": fam.description, "basis": [list(b) for b in fam.basis], "eigenvalue": str(fam.eigenvalue)}
    text = fam.description + "".join(f"\n  basis {fam.parameters[i]}: {list(b)}" for i, b in enumerate(fam.basis))
    _emit(args, payload, text)


def cmd_klein4(args):
    ok = verify_klein4(parse_polynomial(args.poly))
    _emit(args, {"klein4": ok}, "true" if ok else "false")


def cmd_sextic(args):
    p = sextic_family(args.a, args.c)
    ok = verify_sextic_action(p)
    cons = sextic_constraints()
    payload = {"poly": list(p.coeffs), "verified": ok, "family": cons.description, "relations": cons.relations}
    _emit(args, payload, f"{p}\nfamily: {cons.description}\naction check: {'pass' if ok else 'fail'}")


def cmd_obstruct(args):
    v = degree_obstruction(args.n)
    payload = {"degree": v.degree, "allowed": v.allowed, "factorization": v.factorization, "blocking_prime": v.blocking_prime}
    _emit(args, payload, str(v))


def cmd_tails(args):
    p = parse_polynomial(args.poly)
    t = numeric_common_tails(p, args.depth, args.window, args.min_match, workers=args.workers)
    lines = [f"{i}~{j}: " + (f"offsets ({m},{n}), {ln} terms" if ln else "no match") for i, j, m, n, ln in t.pairs]
    _emit(args, t.to_dict(), "\n".join(lines))


def cmd_scan(args):
    cfg = ScanConfig(
        args.a_range, args.b_range, args.c_range, args.d_range,
        require_irreducible=args.irreducible_only,
        prefix_depth=args.depth if args.depth is not None else default_depth(),
        workers=args.workers,
        emit_skipped=args.emit_skipped,
    )
    records = run_scan(cfg)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            summary = write_records(records, fh, args.format)
    else:
        summary = write_records(records, sys.stdout, args.format)
    summary.total = cfg.size
    print(json.dumps({"summary": summary.to_dict()}, separators=(",", ":")), file=sys.stderr)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tailforge", description="Common continued-fraction tails of polynomial roots.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "common-tails verdict for a cubic")
    sp.add_argument("poly")
    sp.add_argument("--depth", type=int, help="CF prefix length (default $TAILFORGE_DEPTH or 20)")

    sp = add("cf", cmd_cf, "continued fractions of the real roots")
    sp.add_argument("poly")
    sp.add_argument("--terms", type=int)

    sp = add("equiv", cmd_equiv, "are two elements s*r^2+t*r+u of a cubic field equivalent?")
    sp.add_argument("poly")
    sp.add_argument("e1", help="s,t,u")
    sp.add_argument("e2", help="s,t,u")

    sp = add("canon", cmd_canon, "canonical (eps, y, eta) triple of a matrix")
    sp.add_argument("matrix", help="[[a,b],[c,d]]")

    sp = add("order", cmd_order, "projective order of a matrix")
    sp.add_argument("matrix", help="[[a,b],[c,d]]")

    sp = add("family", cmd_family, "cubics whose roots are cycled by a word")
    sp.add_argument("--word", required=True, help='composition word, e.g. "n p-1 r"')

    sp = add("klein4", cmd_klein4, "negation/reciprocal closure of a quartic")
    sp.add_argument("poly")

    sp = add("sextic", cmd_sextic, "member of the sextic family")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)

    sp = add("obstruct", cmd_obstruct, "2^k 3^m degree test")
    sp.add_argument("n", type=int)

    sp = add("tails", cmd_tails, "pairwise numeric tail evidence for all real roots")
    sp.add_argument("poly")
    sp.add_argument("--depth", type=int, default=40)
    sp.add_argument("--window", type=int, default=15)
    sp.add_argument("--min-match", type=int, default=10)
    sp.add_argument("--workers", type=int, default=1)

    sp = add("scan", cmd_scan, "classify every cubic in a coefficient box")
    sp.add_argument("--a-range", type=_range, default=(1, 1))
    sp.add_argument("--b-range", type=_range, required=True)
    sp.add_argument("--c-range", type=_range, required=True)
    sp.add_argument("--d-range", type=_range, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--emit-skipped", action="store_true")
    sp.add_argument("--irreducible-only", action="store_true")
    return parser


RANGE_OPTIONS = ("--a-range", "--b-range", "--c-range", "--d-range")


def _glue_negative_ranges(argv):
    """argparse reads '-3:3' as a flag; rewrite '--d-range -3:3' as '--d-range=-3:3'."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in RANGE_OPTIONS and i + 1 < len(argv) and re.match(r"^-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_ranges(argv))
    except SystemExit as exc:
        # --help exits 0; usage errors exit EXIT_USAGE via _Parser.error
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except UsageError as exc:
        print(f"tailforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tailforge: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ArithmeticError, RecursionError) as exc:
        print(f"tailforge: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ValueError, TypeError) as exc:
        print(f"tailforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
