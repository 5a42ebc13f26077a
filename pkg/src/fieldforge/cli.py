"""Command-line interface.

Output is JSON lines (one object per line, keys sorted) unless ``--pretty``
asks for a human-readable rendering. Rationals and large integers are written
as decimal strings. Exit status: 0 success, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .covers.catalog import catalog, cover_to_json, get_cover
from .covers.model import CoverError, disc_shape_compute, format_partition, specialize
from .exact.poly import poly_disc
from .exact.quad import format_s_unit
from .exact.smooth import is_prime, primes_in_range
from .fermat.search import search
from .fermat.tables import embedded_tables, orbit_index
from .fermat.triples import AbcTriple, format_component, max_signature, s3_orbit, triple_of
from .frobenius.classes import pgl29_class
from .frobenius.core import FrobeniusError, element_order, partition
from .ramify import RamifyError, ord_triple, region, tame_class, tame_disc_exp, trinomial_disc_exp
from .ratexpr import RatExprError, format_rat, parse_rat
from .verify.checks import report, run_suite


class UsageError(Exception):
    pass


# argument parsing helpers


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text, allow_zero=True)
    except RatExprError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_expr(text: str) -> int:
    q = _rat(text)
    if q.denominator != 1:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return int(q)


def _prime(text: str) -> int:
    p = _int_expr(text)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{text!r} is not prime")
    return p


def _primes_list(text: str) -> list[int]:
    try:
        ps = [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated prime list, got {text!r}") from exc
    if not ps or not all(is_prime(p) for p in ps):
        raise argparse.ArgumentTypeError(f"expected a comma-separated prime list, got {text!r}")
    return ps


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    a, b = _int_expr(lo), _int_expr(hi)
    if a > b or b < 2:
        raise argparse.ArgumentTypeError(f"empty prime range {text!r}")
    return a, b


def _not_cusp(tau: Fraction) -> Fraction:
    if tau in (0, 1):
        raise UsageError(f"tau = {tau} is a cusp; pick tau outside {{0, 1}}")
    return tau


# output


class Out:
    def __init__(self, pretty: bool, stream=None):
        self.pretty = pretty
        self.stream = stream or sys.stdout

    def emit(self, obj: dict, text: str | None = None) -> None:
        if self.pretty and text is not None:
            print(text, file=self.stream)
        else:
            print(json.dumps(obj, sort_keys=True, ensure_ascii=False), file=self.stream)


def _triple_json(t: AbcTriple, index: dict[Fraction, int]) -> dict:
    return {
        "A": str(t.A),
        "B": str(t.B),
        "C": str(t.C),
        "tau": format_rat(t.tau),
        "signature": max_signature(t).to_json(),
        "orbit_id": index.get(t.tau),
    }


def _triple_text(t: AbcTriple) -> str:
    return "  ".join(format_component(v) for v in t)


# subcommands


def cmd_search(args, out: Out) -> int:
    S = [int(p) for p in args.s.split(",")]
    index = orbit_index()
    for t in search(S, args.bound, threads=args.threads):
        d = _triple_json(t, index)
        out.emit(d, f"{_triple_text(t):<48} tau = {d['tau']}  sig = {max_signature(t)}  orbit {d['orbit_id']}")
    return 0


def cmd_orbits(args, out: Out) -> int:
    if args.from_search:
        reps: dict[AbcTriple, None] = {}
        for t in search((2, 3), args.bound, threads=args.threads):
            reps.setdefault(s3_orbit(t).representative, None)
        records = sorted((s3_orbit(t) for t in reps), key=lambda r: r.representative.sort_key())
    else:
        records = list(embedded_tables())
    for i, rec in enumerate(records, 1):
        rep = rec.representative
        d = {
            "orbit_id": i,
            "representative": [str(v) for v in rep],
            "taus": [format_rat(tau) for tau in rec.taus()],
            "signature": rec.max_signature.to_json(),
            "size": len(rec.elements),
        }
        out.emit(d, f"{i:>4}  {_triple_text(rep):<48} {rec.max_signature}  ({len(rec.elements)} elements)")
    return 0


def cmd_classify(args, out: Out) -> int:
    tau = _not_cusp(args.tau)
    t = triple_of(tau)
    reg = region(tau, args.p)
    d = {
        "tau": format_rat(tau),
        "p": args.p,
        "triple": [str(v) for v in t],
        "ord_triple": list(ord_triple(tau, args.p)),
        "region": reg.to_json(),
    }
    out.emit(d, f"tau = {format_rat(tau)}  triple ({_triple_text(t)})  ords {tuple(d['ord_triple'])}  region {reg}")
    return 0


def cmd_specialize(args, out: Out) -> int:
    c = get_cover(args.cover)
    alg = specialize(c, args.tau, form=args.form)
    poly = alg.poly
    facs = poly.squarefree_decomposition()
    d = {
        "cover": c.name,
        "tau": format_rat(alg.tau),
        "form": alg.form,
        "degree": poly.degree,
        "coefficients": poly.to_json(),
        "separable": alg.separable,
        "squarefree_factorization": [{"factor": g.to_json(), "multiplicity": k} for g, k in facs],
    }
    if alg.separable:
        d["disc"] = format_rat(poly_disc(poly))
    text = [f"{c.name} at tau = {d['tau']} ({alg.form} form): {poly}"]
    if not alg.separable:
        text.append("  = " + " * ".join(f"({g})^{k}" if k > 1 else f"({g})" for g, k in facs))
    else:
        text.append(f"  disc = {format_s_unit(poly_disc(poly))}")
    out.emit(d, "\n".join(text))
    return 0


def cmd_ramify(args, out: Out) -> int:
    c = get_cover(args.cover)
    tau = _not_cusp(args.tau)
    reg = region(tau, args.p)
    d: dict = {"cover": c.name, "tau": format_rat(tau), "p": args.p, "region": reg.to_json()}
    if args.p in c.bad_set:
        d["tame_class"] = "wild"
        if c.name.startswith("trinomial:"):
            N, m = (int(v) for v in c.name.split(":")[1].split(","))
            d["exponent"] = trinomial_disc_exp(N, m, tau, args.p).to_json()
        else:
            d["exponent"] = {"value": "uncovered", "source": "none"}
    else:
        cls = tame_class(c, tau, args.p)
        d["tame_class"] = list(cls)
        d["exponent"] = {"value": tame_disc_exp(c, tau, args.p), "source": "tame"}
    cls_text = d["tame_class"] if d["tame_class"] == "wild" else format_partition(list(d["tame_class"]))
    out.emit(d, f"{c.name} tau = {d['tau']} p = {args.p}: region {reg}, class {cls_text}, ord_p d = {d['exponent']['value']}")
    return 0


def cmd_frobenius(args, out: Out) -> int:
    c = get_cover(args.cover)
    tau = _not_cusp(args.tau)
    poly = specialize(c, tau).poly
    lo, hi = args.primes
    for p in primes_in_range(lo, hi):
        try:
            part = partition(poly, p, seed=args.seed)
        except FrobeniusError:
            continue  # polynomial vanishes mod p
        d: dict = {"p": p, "partition": list(part.parts), "ramified": part.ramified}
        if part.lc_divisible:
            d["lc_divisible"] = True
        d["order"] = None if part.ramified else element_order(part)
        if c.name == "f10" and p >= 5 and not part.ramified:
            try:
                d["label"] = pgl29_class(tau, p, seed=args.seed).to_json()["label"]
            except FrobeniusError:
                pass
        label = f"  {d['label']}" if "label" in d else ""
        out.emit(d, f"p = {p:>6}: {part}  order {d['order']}{label}")
    return 0


def cmd_discshape(args, out: Out) -> int:
    c = get_cover(args.cover)
    got = disc_shape_compute(c)
    d = {"cover": c.name, "computed": got.to_json()}
    if c.disc_shape is not None:
        d["recorded"] = c.disc_shape.to_json()
        d["matches_recorded"] = got.same_as(c.disc_shape)
    g = got.canonical()
    tail = "" if c.disc_shape is None else ("  (matches recorded)" if d["matches_recorded"] else "  (DIFFERS from recorded)")
    out.emit(d, f"D_{c.name}(t) = {format_s_unit(g.delta)} t^{g.a} (t-1)^{g.b} ({g.c})^2{tail}")
    return 0


def cmd_catalog(args, out: Out) -> int:
    for c in catalog():
        d = cover_to_json(c)
        lam = " / ".join(format_partition(list(x)) for x in c.lambdas)
        out.emit(d, f"{c.name:<6} N = {c.degree:<3} {lam:<40} {c.monodromy_group:<14} genus {c.genus}  {c.field}")
    return 0


def cmd_verify(args, out: Out) -> int:
    results = run_suite(args.suite)
    rep = report(results)
    if out.pretty:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.check_id:<18} {r.detail}", file=out.stream)
    else:
        print(json.dumps(rep, sort_keys=True), file=out.stream)
    return 0 if rep["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's unset flag from overwriting one given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output instead of JSON lines")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for equal-degree factorization (default 0, or FIELDFORGE_SEED)")

    ap = argparse.ArgumentParser(prog="fieldforge", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", parents=[common], help="exhaustive bounded search for qualifying triples")
    p.add_argument("--s", default="2,3", help="comma-separated primes (default 2,3)")
    p.add_argument("--bound", type=_int_expr, required=True, help="bound on |A|, |B|, |C|, e.g. 10^6")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON lines (the default)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("orbits", parents=[common], help="list S3 orbits")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--from-tables", action="store_true", help="the embedded 101 orbits (default)")
    g.add_argument("--from-search", action="store_true", help="orbits found by a bounded search")
    p.add_argument("--bound", type=_int_expr, default=10**6)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("classify", parents=[common], help="p-adic region of tau")
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--p", type=_prime, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("specialize", parents=[common], help="specialize a cover at tau")
    p.add_argument("--cover", required=True)
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--form", choices=["canonical", "star"], default="canonical")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("ramify", parents=[common], help="predicted ramification at p")
    p.add_argument("--cover", required=True)
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--p", type=_prime, required=True)
    p.set_defaults(func=cmd_ramify)

    p = sub.add_parser("frobenius", parents=[common], help="factorization partitions over a prime range")
    p.add_argument("--cover", required=True)
    p.add_argument("--tau", type=_rat, required=True)
    p.add_argument("--primes", type=_prime_range, required=True, help="LO..HI")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("discshape", parents=[common], help="discriminant shape of a cover")
    p.add_argument("--cover", required=True)
    p.set_defaults(func=cmd_discshape)

    p = sub.add_parser("catalog", parents=[common], help="list the embedded covers")
    p.add_argument("--json", action="store_true", help="JSON lines (the default)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", parents=[common], help="run the exact verification suite")
    p.add_argument("--suite", default="all", help="'all' or a single check id")
    p.set_defaults(func=cmd_verify)
    return ap


_VALUE_FLAGS = ("--tau", "--bound", "--primes")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--tau -23^3`` into ``--tau=-23^3`` so argparse does not read it as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # the flags are shared Action objects, so fill defaults here rather than via set_defaults
    args.pretty = getattr(args, "pretty", False)
    args.seed = getattr(args, "seed", None)
    out = Out(args.pretty)
    try:
        return args.func(args, out)
    except (UsageError, RatExprError, RamifyError, CoverError, FrobeniusError, ValueError) as exc:
        print(f"fieldforge {args.command}: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"fieldforge {args.command}: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        sys.stderr.close()  # downstream closed the pipe, e.g. `| head`
        return 0


if __name__ == "__main__":
    sys.exit(main())
