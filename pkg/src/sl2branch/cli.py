"""Command-line driver.

Subcommands:
  branch      render the truncated decomposition series of a representation
  tail        components of depth > 2r with their pattern descriptor
  intertwine  sufficient intertwining test for two representations
  packet      summed L-packet profile (two components per depth)
  verify      run the finite-group verification suites

Representations are described by a JSON document:

    {"field": {"p": 3, "f": 1},
     "rep": {"class": "depth_zero_sc",
             "sc0": {"vertex": 0, "sigma_kind": "special_plus"}},
     "truncate": {"max_depth": 4}}

Field elements are written as square-class strings like "eps*pi^-1";
ramified torus scalars give only the unit class ("1" or "eps"), the
valuation being forced by genericity.  Structured output re-parses as a
descriptor.

Exit codes: 0 ok, 1 failed assertion, 2 schema or usage error,
3 verification skipped for budget reasons.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import (
    FieldParams, KElem, K_ZERO, SquareClass, SQ_ONE, SQ_EPS, SQ_PI, SQ_EPS_PI,
)
from . import engine, grep, ktype, oracle, tori


class SchemaError(ValueError):
    pass


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_SCHEMA = 2
EXIT_SKIP = 3


# ---------------------------------------------------------------------------
# descriptor parsing
# ---------------------------------------------------------------------------

def parse_kelem(s: str) -> KElem:
    s = str(s).strip()
    if s == "0":
        return K_ZERO
    eps = False
    val = 0
    body = s
    if body.startswith("eps"):
        eps = True
        body = body[3:]
        if body.startswith("*"):
            body = body[1:]
    if body:
        if body == "pi":
            val = 1
        elif body.startswith("pi^"):
            try:
                val = int(body[3:])
            except ValueError:
                raise SchemaError("bad pi exponent in %r" % s)
        elif body == "1":
            val = 0
        else:
            raise SchemaError("cannot parse field element %r" % s)
    return KElem(val, eps)


def render_kelem(x: KElem) -> str:
    return str(x)


_SQ = {"1": SQ_ONE, "eps": SQ_EPS, "pi": SQ_PI, "eps*pi": SQ_EPS_PI}


def parse_square_class(s: str) -> SquareClass:
    try:
        return _SQ[str(s).strip()]
    except KeyError:
        raise SchemaError("unknown square class %r (use 1, eps, pi, eps*pi)" % s)


def _need(d: dict, key: str, where: str):
    if key not in d:
        raise SchemaError("missing key %r in %s" % (key, where))
    return d[key]


def _fraction(x, where: str) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError):
        raise SchemaError("bad rational %r in %s" % (x, where))


def parse_field(doc: dict) -> FieldParams:
    f = _need(doc, "field", "descriptor")
    return FieldParams(int(_need(f, "p", "field")), int(f.get("f", 1)))


def parse_rep(doc: dict, fp: FieldParams):
    rep = _need(doc, "rep", "descriptor")
    cls = _need(rep, "class", "rep")
    if cls == "principal_series":
        c = _need(rep, "chi", "rep")
        depth = int(_need(c, "depth", "rep.chi"))
        tau = c.get("sgn_tau")
        if tau is not None:
            sign = str(_need(c, "sign", "rep.chi")).strip()
            if sign not in ("+", "-"):
                raise SchemaError("constituent sign must be '+' or '-'")
            return grep.reducible_ps(parse_square_class(tau), 1 if sign == "+" else -1, fp)
        restriction = _need(c, "unit_restriction", "rep.chi")
        central = int(_need(c, "central", "rep.chi"))
        lam = parse_kelem(c["lambda"]) if "lambda" in c else None
        if depth > 0 and lam is None:
            raise SchemaError("missing key 'lambda' in rep.chi (needed for depth > 0)")
        chi = grep.CharKx(depth=depth, restriction=restriction, central=central,
                          label=c.get("label", "chi"), lam=lam)
        return grep.make_principal_series(chi)
    if cls == "depth_zero_sc":
        c = _need(rep, "sc0", "rep")
        vertex = int(_need(c, "vertex", "rep.sc0"))
        kind = _need(c, "sigma_kind", "rep.sc0")
        if kind == "generic":
            sigma = grep.FiniteCuspidal(kind=kind, central=int(_need(c, "central", "rep.sc0")),
                                        omega=c.get("omega", "omega"))
        elif kind in (grep.SPECIAL_PLUS, grep.SPECIAL_MINUS):
            sigma = grep.FiniteCuspidal(kind=kind, central=grep.special_central(fp))
            if "central" in c and int(c["central"]) != sigma.central:
                raise SchemaError("special cuspidal central value is %+d for q=%d"
                                  % (sigma.central, fp.q))
        else:
            raise SchemaError("unknown sigma_kind %r" % kind)
        return grep.make_depth_zero_sc(vertex, sigma)
    if cls == "positive_sc":
        c = _need(rep, "scp", "rep")
        g1 = parse_kelem(_need(c, "gamma1", "rep.scp"))
        g2 = parse_kelem(_need(c, "gamma2", "rep.scp"))
        T = tori.classify_torus(g1, g2, fp)
        r = _fraction(_need(c, "depth", "rep.scp"), "rep.scp")
        a_class = parse_kelem(_need(c, "a_class", "rep.scp"))
        if a_class.is_zero or a_class.val != 0:
            raise SchemaError("a_class must be a unit class ('1' or 'eps')")
        a_val = -(r + T.y) - g1.val
        if a_val.denominator != 1:
            raise SchemaError("depth %s incompatible with the torus" % r)
        a = KElem(int(a_val), a_class.eps)
        phi = grep.CharT(torus=T, depth=r, a_coeff=a,
                         central=int(_need(c, "central", "rep.scp")),
                         label=c.get("label", "phi"))
        return grep.make_positive_sc(T, phi)
    raise SchemaError("unknown representation class %r" % cls)


def load_descriptor(path: str):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read descriptor: %s" % e)
    except json.JSONDecodeError as e:
        raise SchemaError("descriptor is not valid JSON: %s" % e)
    if not isinstance(doc, dict):
        raise SchemaError("descriptor must be a JSON object")
    return doc


def descriptor_pieces(doc: dict, args):
    fp = parse_field(doc)
    if args.field:
        parts = args.field.split(",")
        fp = FieldParams(int(parts[0]), int(parts[1]) if len(parts) > 1 else 1)
    rep = parse_rep(doc, fp)
    if isinstance(rep, tuple):
        raise SchemaError("descriptor matches a reducible pair; pick a constituent "
                          "with rep.chi.sign")
    D = None
    if "truncate" in doc:
        D = _fraction(_need(doc["truncate"], "max_depth", "truncate"), "truncate")
    if args.max_depth is not None:
        D = _fraction(args.max_depth, "--max-depth")
    if D is None:
        raise SchemaError("missing key 'max_depth' in truncate")
    return fp, rep, D


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def describe_ktype(t, fp: FieldParams) -> tuple:
    """(name, parameter string) for table rendering."""
    if isinstance(t, ktype.Trivial):
        return "1", ""
    if isinstance(t, ktype.Steinberg):
        return "St", ""
    if isinstance(t, ktype.XiSgn):
        return "Xi^%s" % ("+" if t.sign > 0 else "-"), ""
    if isinstance(t, ktype.FinitePS):
        return "finite-PS", t.label
    if isinstance(t, ktype.CuspidalType):
        if t.kind == grep.GENERIC:
            return "cuspidal", "sigma(%s)" % t.omega
        return "cuspidal", "sigma_0^%s" % ("+" if t.kind == grep.SPECIAL_PLUS else "-")
    if isinstance(t, ktype.Shalika):
        return "S_%d" % t.d, "%s, %s" % (t.phi, t.x)
    if isinstance(t, ktype.PSLeading):
        return "PS-leading", "depth %d, %s" % (t.r, t.label)
    if isinstance(t, ktype.SCLeading):
        return "SC-leading", "depth %d, %s (%s)" % (t.r, t.label, t.rho_kind)
    return str(type(t).__name__), ""


def series_rows(s: engine.BranchingSeries, fp: FieldParams) -> list:
    rows = []
    for e in s.entries:
        name, params = describe_ktype(e.kt, fp)
        rows.append({"depth": str(e.depth), "ktype": name, "params": params,
                     "degree": ktype.degree(e.kt, fp)})
    return rows


def render_table(rows: list, columns: list, totals: dict | None = None) -> str:
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c)
              for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    lines.append("  ".join("-" * widths[c] for c in columns))
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns))
    if totals:
        lines.append("")
        for k, v in totals.items():
            lines.append("%s: %s" % (k, v))
    return "\n".join(lines)


def _emit(text: str, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_branch(args) -> int:
    doc = load_descriptor(args.descriptor)
    fp, rep, D = descriptor_pieces(doc, args)
    s = engine.branch(rep, D, fp)
    rows = series_rows(s, fp)
    per_depth = {}
    for row in rows:
        per_depth[row["depth"]] = per_depth.get(row["depth"], 0) + row["degree"]
    if args.format == "json":
        out = dict(doc)
        out["series"] = rows
        out["totals_per_depth"] = per_depth
        _emit(json.dumps(out, indent=2), args)
    else:
        totals = {"degree at depth %s" % d: v for d, v in sorted(per_depth.items())}
        totals["total degree"] = sum(per_depth.values())
        _emit(render_table(rows, ["depth", "ktype", "params", "degree"], totals), args)
    return EXIT_OK


def cmd_tail(args) -> int:
    doc = load_descriptor(args.descriptor)
    fp, rep, D = descriptor_pieces(doc, args)
    desc, tail = engine.tail_end(rep, D, fp)
    rows = series_rows(tail, fp)
    summary = {
        "pattern": desc.pattern,
        "central": "%+d" % desc.central,
        "start_depth": str(desc.start_depth),
    }
    if desc.parity is not None:
        summary["depth parity"] = desc.parity
    if desc.z is not None:
        summary["class z"] = str(desc.z)
    if desc.z_even is not None:
        summary["z(even)"] = str(desc.z_even)
        summary["z(odd)"] = str(desc.z_odd)
    if args.format == "json":
        out = dict(doc)
        out["tail"] = {"descriptor": summary, "series": rows}
        _emit(json.dumps(out, indent=2), args)
    else:
        head = "\n".join("%s: %s" % kv for kv in summary.items())
        _emit(head + "\n\n" + render_table(rows, ["depth", "ktype", "params", "degree"]), args)
    return EXIT_OK


def cmd_intertwine(args) -> int:
    doc_a = load_descriptor(args.descriptor)
    doc_b = load_descriptor(args.other)
    fp, rep_a, _ = descriptor_pieces(doc_a, args)
    fp_b, rep_b, _ = descriptor_pieces(doc_b, args)
    if (fp.p, fp.f) != (fp_b.p, fp_b.f):
        raise SchemaError("descriptors live over different fields")
    rule = engine.intertwine_rule(rep_a, rep_b, fp)
    if rule is not None:
        verdict, how = True, "rule (%s)" % rule
    else:
        verdict, _ = engine.tails_match(rep_a, rep_b, fp)
        how = "matching tails" if verdict else "no sufficient condition applies"
    if args.format == "json":
        _emit(json.dumps({"intertwine": verdict, "how": how}, indent=2), args)
    else:
        _emit("intertwine: %s (%s)" % (str(verdict).lower(), how), args)
    return EXIT_OK


def cmd_packet(args) -> int:
    doc = load_descriptor(args.descriptor)
    fp, rep, D = descriptor_pieces(doc, args)
    packet = grep.l_packet(rep, fp)
    report = engine.packet_profile(packet, D, fp)
    rows = [{"depth": str(d), "components": c} for d, c in report.counts.items()]
    if args.format == "json":
        out = dict(doc)
        out["packet"] = {"size": len(packet), "ok": report.ok,
                         "counts": {str(k): v for k, v in report.counts.items()}}
        _emit(json.dumps(out, indent=2), args)
    else:
        totals = {"packet size": len(packet),
                  "two components per depth above %s" % report.packet_depth:
                      "yes" if report.ok else "NO: %s" % (report.failures,)}
        _emit(render_table(rows, ["depth", "components"], totals), args)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    budget = args.budget if args.budget else oracle.DEFAULT_BUDGET
    try:
        reports = oracle.run_suite(args.suite, args.p, budget)
    except oracle.OracleError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_SCHEMA
    blocks = [r.to_text() for r in reports]
    _emit("\n\n".join(blocks), args)
    failed = [r for r in reports if not r.passed and not r.skipped]
    skipped = [r for r in reports if r.skipped]
    for r in failed:
        print("FAIL: %s" % r.name, file=sys.stderr)
    if failed:
        return EXIT_FAIL
    if skipped:
        for r in skipped:
            print("skipped (budget): %s" % r.name, file=sys.stderr)
        return EXIT_SKIP
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl2branch",
                                 description="branching rules for SL2 over a p-adic field")
    ap.add_argument("--format", choices=("table", "json"), default="table")
    ap.add_argument("--out", help="write output to a file")
    ap.add_argument("--field", help="override the descriptor field, as 'p,f'")
    ap.add_argument("--max-depth", help="override the truncation depth")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in (("branch", cmd_branch), ("tail", cmd_tail), ("packet", cmd_packet)):
        sp = sub.add_parser(name)
        sp.add_argument("descriptor")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("intertwine")
    sp.add_argument("descriptor")
    sp.add_argument("other")
    sp.set_defaults(func=cmd_intertwine)

    sp = sub.add_parser("verify")
    sp.add_argument("suite", choices=("shalika", "ps", "mackey", "all"))
    sp.add_argument("p", type=int)
    sp.add_argument("--budget", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, grep.RepError, tori.TorusError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_SCHEMA
    except engine.EngineError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
