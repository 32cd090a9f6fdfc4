"""Command-line interface: `geospec <command> ...` or `python -m geospec`."""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import betasym, dimension, interval, limsup, verify, words
from . import spectrum_integer as si
from . import spectrum_quadratic as sq
from .algebra import CertifiedReal, PisotQuadraticUnit, parse_alpha
from .surd import QuadraticSurd, parse_exact

OK, VERIFY_FAILED, USAGE_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text)


def _exact(text):
    try:
        return parse_exact(text) if "sqrt" in text else QuadraticSurd._coerce(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not an exact number: %r" % text)


def _digits(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("digits must be comma-separated integers: %r" % text)


def _binary(text):
    if not text or set(text) - {"0", "1"}:
        raise argparse.ArgumentTypeError("expected a nonempty word over 0 and 1: %r" % text)
    return text


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QuadraticSurd):
        return str(x)
    if isinstance(x, CertifiedReal):
        return x.to_json()
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------- commands
# Each returns (status, payload, rows, text); rows feed --csv.

def cmd_spectrum_integer(args):
    rows = si.enumerate_spectrum(args.base, args.count - 1)
    lim = si.spectrum_limit(args.base)
    table = [r.to_json() for r in rows]
    payload = {"base": args.base, "rows": table, "limit": lim.to_json()}
    text = ["k  value  approx  witness"]
    text += ["%d  %s  %.10f  %s" % (r.k, r.value, float(r.value), "(%s)^inf" % r.witness) for r in rows]
    text.append("limit ~ %.10f (radius %.1e)" % (float(lim.mid), float(lim.rad)))
    return OK, payload, table, text


def cmd_spectrum_quadratic(args):
    unit = PisotQuadraticUnit(args.b, args.sign)
    table = []
    for n, (p, q) in enumerate(sq.pq_spectrum(args.b, args.sign, args.count - 1)):
        w = sq.xn_witness(unit, None, n)
        table.append({"n": n, "p": p, "q": q, "value": str(Fraction(p, q)), "approx": p / q,
                      "nu": w.nu, "xi": str(w.xi), "limsup": str(w.limsup)})
    lim = sq.spectrum_limit(args.b, args.sign)
    payload = {"b": args.b, "sign": args.sign, "alpha": str(unit.alpha), "rows": table,
               "limit": str(lim), "limit_approx": float(lim)}
    text = ["alpha = %s" % unit.alpha, "n  p_n/q_n  approx  nu  xi"]
    text += ["%d  %s  %.10f  %s  %s" % (r["n"], r["value"], r["approx"], r["nu"], r["xi"]) for r in table]
    text.append("limit = %s ~ %.12f" % (lim, float(lim)))
    return OK, payload, table, text


def cmd_limsup(args):
    alpha = parse_alpha(args.alpha)
    xi = limsup.parse_real(args.xi)
    est = limsup.limsup_estimate(xi, alpha, args.iters, args.precision)
    payload = {"alpha": args.alpha, "xi": args.xi, **est.to_json()}
    text = ["running max of ||xi alpha^n||, n < %d: %s ~ %.12f at n = %d" % (
        args.iters, payload["running_max"] if est.certified else "ball", payload["running_max_approx"], est.argmax)]
    if est.exact is not None:
        text.append("exact limsup: %s ~ %.12f" % (est.exact, float(est.exact)))
    return OK, payload, [payload], text


def cmd_words(args):
    op = args.op
    if op == "christoffel":
        lo, up = words.christoffel(args.p, args.q), words.christoffel(args.p, args.q, upper=True)
        payload = {"p": args.p, "q": args.q, "lower": lo, "upper": up, "central": lo[1:-1]}
        return OK, payload, [payload], ["lower %s" % lo, "upper %s" % up]
    w = args.word
    if op == "balanced-check":
        bal = words.is_balanced(w)
        hits = words.forbidden_scan(w)
        wit = None if bal else words.balance_witness(w)
        payload = {"word": w, "balanced": bal, "witness": wit,
                   "forbidden": [{"start": s, "v": v, "template": t} for s, v, t in hits]}
        msg = ("balanced" if bal else "unbalanced") + "; " + (
            "no F-factor" if not hits else "F-factor at %d (v=%r)" % (hits[0][0], hits[0][1]))
        if wit is not None:
            msg += "; witness v=%r" % wit
        return OK, payload, [payload], [msg]
    if op == "forbidden-scan":
        hits = [{"start": s, "v": v, "template": t} for s, v, t in words.forbidden_scan(w)]
        text = ["%d  v=%r  %s" % (h["start"], h["v"], h["template"]) for h in hits] or ["no F-factor"]
        return OK, {"word": w, "hits": hits}, hits, text
    if op == "iota":
        r = words.iota(words.periodic(w)) if args.periodic else words.iota(w)
        payload = {"word": w, "periodic": args.periodic, "iota": r.value, "exact": r.exact,
                   "window": r.window, "note": r.note}
        return OK, payload, [payload], ["iota = %s" % r]
    if op == "phi":
        try:
            out, a = words.phi(words.periodic(w))
        except words.NotParsable as e:
            payload = {"word": w, "parsable": False, "reason": str(e)}
            return OK, payload, [payload], ["not parsable: %s" % e]
        period = "".join(out.right_period)
        payload = {"word": w, "parsable": True, "a": a, "period": period}
        return OK, payload, [payload], ["phi((%s)^Z) = (%s)^Z with a = %d" % (w, period, a)]
    raise UsageError("unknown words operation %r" % op)


def cmd_betasym(args):
    unit = PisotQuadraticUnit(args.b, args.sign)
    if args.op == "expand":
        if args.x is None:
            raise UsageError("betasym expand needs --x")
        e = betasym.encode(unit, args.x)
        payload = {"x": str(args.x), "preperiod": list(e.preperiod), "period": list(e.period)}
        return OK, payload, [payload], ["d(%s) = %s (%s)^inf" % (args.x, list(e.preperiod), list(e.period))]
    if args.op == "boundary":
        top, bottom = betasym.boundary_expansions(unit, None)
        star = betasym.upper_limit_expansion(unit)
        payload = {"d(1/2)": {"preperiod": list(top.preperiod), "period": list(top.period)},
                   "d(-1/2)": {"preperiod": list(bottom.preperiod), "period": list(bottom.period)},
                   "d*(1/2)": {"preperiod": list(star.preperiod), "period": list(star.period)}}
        text = ["%s = %s (%s)^inf" % (k, v["preperiod"], v["period"]) for k, v in payload.items()]
        return OK, payload, [], text
    if args.op == "admissible":
        if args.period is None:
            raise UsageError("betasym admissible needs --period")
        d = words.EPWord(args.pre or (), args.period)
        ok = betasym.is_admissible(unit, d)
        payload = {"preperiod": list(d.preperiod), "period": list(d.period), "admissible": ok}
        if ok:
            payload["value"] = str(betasym.decode(unit, d))
        return OK, payload, [payload], ["admissible" if ok else "not admissible"]
    raise UsageError("unknown betasym operation %r" % args.op)


def cmd_interval(args):
    case = interval.kappa_and_keys(args.b, args.sign)
    payload = {"b": args.b, "sign": args.sign, **case.to_json()}
    text = ["%s (%s split): %.6f <= %.6f %s" % (case.key, case.split, float(case.lhs), float(case.rhs),
                                                "holds" if case.holds else "FAILS"),
            "kappa = %s ~ %.6f" % (case.kappa, float(case.kappa))]
    if args.eta is not None:
        word, centre, others = interval.construct(args.b, args.sign, args.eta, args.window)
        payload.update({"eta": str(args.eta), "g": str(centre), "max_other": str(others),
                        "max_other_approx": float(others), "centre_ok": centre == args.eta,
                        "bounded": others <= args.eta,
                        "in_interval": case.kappa <= args.eta <= interval.HALF})
        if not payload["in_interval"]:
            text.append("note: eta lies outside [kappa, 1/2]; the bound on other shifts is not guaranteed")
        text.append("eta = %s: g(s) = %s, max over 0 < |k| <= %d: %.6f" % (
            args.eta, centre, args.window, float(others)))
    return OK, payload, [payload], text


def cmd_dim(args):
    kind, _, rest = args.case.partition(":")
    if kind == "int":
        a = int(rest)
        r = dimension.integer_bound(a, args.t, args.ell)
        payload = {"case": args.case, "t": str(args.t), "ell": r.parameter, **r.to_json()}
    elif kind == "quad":
        b, _, sign = rest.partition(":")
        r = dimension.quadratic_bound(int(b), args.t, sign or "plus")
        t0 = dimension.quadratic_t0(int(b), sign or "plus")
        payload = {"case": args.case, "t": str(args.t), "m": r.parameter, "t0": str(t0), **r.to_json()}
    else:
        raise UsageError("--case must be int:A or quad:B[:sign]")
    text = ["dim bound %.6f (parameter %d), below one: %s" % (float(r.value), r.parameter, r.below_one)]
    return OK, payload, [payload], text


def cmd_verify(args):
    try:
        results = verify.run(args.suite)
    except KeyError as e:
        raise UsageError(str(e))
    table = [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail,
              "seconds": round(r.seconds, 3)} for r in results]
    status = OK if all(r.passed for r in results) else VERIFY_FAILED
    return status, {"suite": args.suite, "results": table}, table, [r.line() for r in results]


# ---------------------------------------------------------------- parser

def build_parser():
    out = argparse.ArgumentParser(add_help=False)
    g = out.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="print JSON")
    g.add_argument("--csv", action="store_true", help="print the table as CSV")

    p = argparse.ArgumentParser(prog="geospec", description="Spectra of ||xi alpha^n|| and related tools.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="discrete spectrum tables")
    ssub = sp.add_subparsers(dest="kind", required=True)
    s = ssub.add_parser("integer", parents=[out])
    s.add_argument("--base", type=int, required=True)
    s.add_argument("--count", type=int, default=5)
    s.set_defaults(func=cmd_spectrum_integer)
    s = ssub.add_parser("quadratic", parents=[out])
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--sign", choices=["plus", "minus"], default="plus")
    s.add_argument("--count", type=int, default=5)
    s.set_defaults(func=cmd_spectrum_quadratic)

    s = sub.add_parser("limsup", parents=[out], help="running max of ||xi alpha^n||")
    s.add_argument("--alpha", required=True, help="int:A | quad:B:plus|minus | poly:c0,...,1")
    s.add_argument("--xi", required=True, help="p/q, (p+q*sqrt(D))/r or a decimal")
    s.add_argument("--iters", type=int, default=200)
    s.add_argument("--precision", type=int, default=None)
    s.set_defaults(func=cmd_limsup)

    wp = sub.add_parser("words", help="word combinatorics")
    wsub = wp.add_subparsers(dest="op", required=True)
    s = wsub.add_parser("christoffel", parents=[out])
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    for name in ("balanced-check", "forbidden-scan", "phi", "iota"):
        s = wsub.add_parser(name, parents=[out])
        s.add_argument("word", type=_binary)
        if name == "iota":
            s.add_argument("--periodic", action="store_true", help="treat the word as a period")
    wp.set_defaults(func=cmd_words)

    bp = sub.add_parser("betasym", help="symmetric beta-expansions")
    bsub = bp.add_subparsers(dest="op", required=True)
    for name in ("expand", "boundary", "admissible"):
        s = bsub.add_parser(name, parents=[out])
        s.add_argument("--b", type=int, required=True)
        s.add_argument("--sign", choices=["plus", "minus"], default="plus")
        if name == "expand":
            s.add_argument("--x", type=_exact)
        if name == "admissible":
            s.add_argument("--pre", type=_digits, default=())
            s.add_argument("--period", type=_digits)
    bp.set_defaults(func=cmd_betasym)

    s = sub.add_parser("interval", parents=[out], help="kappa, Key inequality and the construction")
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--sign", choices=["plus", "minus"], default="plus")
    s.add_argument("--eta", type=_exact)
    s.add_argument("--window", type=int, default=200)
    s.set_defaults(func=cmd_interval)

    s = sub.add_parser("dim", parents=[out], help="Hausdorff dimension upper bounds")
    s.add_argument("--case", required=True, help="int:A or quad:B[:plus|minus]")
    s.add_argument("--t", type=_rational, required=True)
    s.add_argument("--ell", type=int, default=None)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("verify", parents=[out], help="run acceptance suites")
    s.add_argument("suite", nargs="?", default="all")
    s.set_defaults(func=cmd_verify)
    return p


def _emit(args, status, payload, rows, text, stream):
    if getattr(args, "json", False):
        doc = {"status": ["ok", "verify-failed", "usage-error"][status], "payload": _jsonable(payload)}
        stream.write(json.dumps(doc, indent=2) + "\n")
    elif getattr(args, "csv", False):
        rows = [_jsonable(r) for r in rows]
        if rows:
            keys = list(rows[0])
            buf = io.StringIO()
            wr = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore")
            wr.writeheader()
            for r in rows:
                wr.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
            stream.write(buf.getvalue())
    else:
        stream.write("\n".join(text) + "\n")


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code else OK
    try:
        status, payload, rows, text = args.func(args)
    except (UsageError, ValueError, ZeroDivisionError) as e:
        sys.stderr.write("geospec: error: %s\n" % e)
        return USAGE_ERROR
    _emit(args, status, payload, rows, text, stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
