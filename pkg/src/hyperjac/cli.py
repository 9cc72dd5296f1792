"""Command-line front end.

Every subcommand prints one JSON document (sorted keys) on stdout.  Exit
codes: 0 success, 1 a check failed, 2 bad usage or unparseable input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import algebra, cartier, chartab, permmod, zeta
from .algebra import Poly, parse_field

USAGE_ERROR = 2
CHECK_FAILED = 1


class UsageError(Exception):
    pass


def _dump(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _field_poly(args):
    try:
        F = parse_field(args.field)
        f = Poly.parse(F, args.poly)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    return F, f


def _curve(f: Poly) -> cartier.CurveModel:
    if f.degree < 3 or f.degree > cartier.MAX_DEGREE:
        raise UsageError(f"degree of f must lie in 3..{cartier.MAX_DEGREE}, got {f.degree}")
    if not algebra.is_separable(f):
        g = algebra.poly_gcd(f, f.derivative())
        raise UsageError(f"f is inseparable: gcd(f, f') = {g}")
    return cartier.CurveModel(f)


def _maybe_reduce(f, args, report):
    alpha = getattr(args, "alpha", None)
    if alpha is None:
        return f
    try:
        h1 = cartier.reduce_even_to_odd(f, f.spec.parse(alpha))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report["reduced_f"] = h1.to_list()
    return h1


def _zeta_section(c: cartier.CurveModel):
    try:
        counts = [zeta.count_points(c, k) for k in range(1, c.genus + 1)]
    except ValueError as exc:
        return None, {"skipped": str(exc)}
    L = zeta.l_polynomial(c, counts)
    slopes = zeta.newton_slopes(L, c.spec.p)
    return (L, slopes), {
        "counts": counts,
        "l_poly": list(L.coeffs),
        "slopes": [str(s) for s in slopes],
        "supersingular": all(2 * s == 1 for s in slopes),
    }


# -- subcommands ------------------------------------------------------------------

def cmd_cm(args):
    F, f = _field_poly(args)
    report = {"field": F.name, "f": f.to_list()}
    c = _curve(_maybe_reduce(f, args, report))
    m = cartier.cm_matrix(c)
    report.update(genus=c.genus, matrix=m.to_lists(),
                  twist=cartier.frobenius_twist(m).to_lists())
    if c.genus == 2:
        report["classification"] = cartier.classify_ss_g2(c).value
    _dump(report)
    return 0


def cmd_ss_test(args):
    F, f = _field_poly(args)
    report = {"field": F.name, "f": f.to_list()}
    c = _curve(_maybe_reduce(f, args, report))
    if c.genus != 2:
        raise UsageError(f"ss-test needs a genus-2 curve, got genus {c.genus}")
    m = cartier.cm_matrix(c)
    verdict = cartier.classify_ss_g2(c)
    report.update(matrix=m.to_lists(), twist=cartier.frobenius_twist(m).to_lists(),
                  classification=verdict.value)
    _, section = _zeta_section(c)
    if "skipped" not in section:
        section["agreement"] = section["supersingular"] == verdict.supersingular
    report["zeta"] = section
    _dump(report)
    return CHECK_FAILED if section.get("agreement") is False else 0


def cmd_zeta(args):
    F, f = _field_poly(args)
    c = _curve(f)
    result, section = _zeta_section(c)
    if result is None:
        raise UsageError(section["skipped"])
    report = {"field": F.name, "f": f.to_list(), "genus": c.genus, **section}
    if args.plot:
        from .plotting import plot_newton_polygon
        plot_newton_polygon(*result[:1], F.p, result[1], args.plot)
        report["figure"] = args.plot
    _dump(report)
    return 0


def cmd_disc(args):
    F, f = _field_poly(args)
    if f.degree < 2:
        raise UsageError("discriminant needs degree at least 2")
    d = algebra.discriminant(f)
    _dump({"field": F.name, "f": f.to_list(), "discriminant": str(d),
           "separable": algebra.is_separable(f), "is_square": algebra.is_square(d)})
    return 0


def cmd_galois_an(args):
    F, f = _field_poly(args)
    if f.degree < 2:
        raise UsageError("Galois test needs degree at least 2")
    if not algebra.is_separable(f):
        raise UsageError(f"f is inseparable: gcd(f, f') = {algebra.poly_gcd(f, f.derivative())}")
    d = algebra.discriminant(f)
    _dump({"field": F.name, "f": f.to_list(), "discriminant": str(d),
           "in_alternating": algebra.galois_in_alternating(f)})
    return 0


def cmd_morse(args):
    F, f = _field_poly(args)
    if f.degree < 2:
        raise UsageError("Morse test needs degree at least 2")
    dh = f.derivative()
    report = {"field": F.name, "f": f.to_list(), "morse": algebra.is_morse(f),
              "derivative": dh.to_list()}
    if dh.degree >= 1:
        report["resolvent"] = algebra.critical_value_resolvent(f).to_list()
    _dump(report)
    return 0


def _group_from_args(args):
    try:
        if args.group:
            return permmod.builtin_actions(args.group)
        if args.gens:
            gens = [permmod.parse_cycles(g) for g in args.gens]
            n = args.n or max(len(g) for g in gens)
            gens = [permmod.parse_cycles(g, n) for g in args.gens]
            return permmod.group_from_generators(n, gens)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError("give --group NAME or one or more --gens CYCLES")


def cmd_heart(args):
    G = _group_from_args(args)
    report = {"group": G.name or "custom", "n": G.n, "order": G.order,
              "two_transitive": G.n >= 2 and permmod.is_k_transitive(G, 2),
              "perfect": permmod.is_perfect(G), "solvable": permmod.is_solvable(G)}
    if G.n % 2:
        H = permmod.heart_module(G)
        dim, basis = permmod.end_ring_dim(H, G)
        report.update(heart_dim=H.dim, end_dim=dim, faithful=permmod.is_faithful(H, G))
        if args.basis:
            report["end_basis"] = [H.to_lists(b) for b in basis]
    else:
        report.update(heart_dim=None, end_dim=None,
                      note="heart is only built for an odd number of points")
    _dump(report)
    return 0


def _table_report(T: chartab.CharacterTable):
    G = T.group
    classes = [{"rep": list(G.elements[c.rep]), "size": c.size, "order": c.element_order}
               for c in T.classes]
    chars = []
    for chi in T.characters:
        chars.append({
            "degree": int(chi[0].to_fraction()),
            "values": [str(v) for v in chi],
            "frobenius_schur": chartab.frobenius_schur(chi, T),
            "rational": chartab.is_rational_character(chi),
            "faithful": chartab.is_faithful_character(chi, T),
        })
    return {"group": G.name, "order": G.order, "exponent": T.exponent,
            "classes": classes, "characters": chars, "degrees": T.degrees}


def cmd_chartab(args):
    builders = {"sl2": chartab.sl2, "psl2": chartab.psl2}
    if args.group not in builders:
        raise UsageError("chartab --group must be sl2 or psl2")
    if args.q not in (3, 5, 7):
        raise UsageError("chartab --q must be 3, 5 or 7")
    T = chartab.character_table(builders[args.group](args.q))
    _dump(_table_report(T))
    return 0


def cmd_lemma_sl2(args):
    try:
        decision = chartab.lemma_sl2_decision(args.q, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _dump(decision.to_dict())
    return 0


def cmd_scan(args):
    from .scan import ScanSummary, parse_template, scan_family
    try:
        F = parse_field(args.field)
        template = parse_template(F, args.template)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    summary = ScanSummary()
    records = [] if args.plot else None
    try:
        out = open(args.out, "w", newline="") if args.out else None
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        writer = None
        if out and args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(["field", "f", "classification", "counts", "l_poly",
                             "slopes", "agreement"])
        for rec in scan_family(F, template, summary):
            if records is not None:
                records.append(rec)
            if out is None:
                continue
            if writer:
                d = rec.to_dict()
                writer.writerow([d["field"], " ".join(d["f"]), d["classification"],
                                 " ".join(map(str, d["counts"])),
                                 " ".join(map(str, d["l_poly"])), " ".join(d["slopes"]),
                                 str(d["agreement"]).lower()])
            else:
                out.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    finally:
        if out:
            out.close()
    report = {"field": F.name, "template": args.template, "summary": summary.to_dict()}
    if args.out:
        report["out"] = args.out
    if args.plot:
        from .plotting import plot_scan
        plot_scan(records, summary, args.plot)
        report["figure"] = args.plot
    _dump(report)
    return CHECK_FAILED if summary.disagreements else 0


def cmd_verify_paper(args):
    from .verify import report
    rep = report()
    text = json.dumps(rep, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if rep["all_passed"] else CHECK_FAILED


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperjac",
        description="Supersingularity, discriminant, permutation-module and "
                    "character-table computations for hyperelliptic jacobians.")
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_cmd(name, fn, help_, alpha=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--field", required=True, help='"p", "p^k" or a prime power like "9"')
        p.add_argument("--poly", required=True, help='ascending coefficients, e.g. "1,0,0,1,0,1"')
        if alpha:
            p.add_argument("--alpha", help="root of an even-degree f; reduce to odd degree first")
        p.set_defaults(func=fn)
        return p

    curve_cmd("cm", cmd_cm, "Cartier-Manin matrix and its Frobenius twist", alpha=True)
    curve_cmd("ss-test", cmd_ss_test, "genus-2 classification with zeta cross-check", alpha=True)
    z = curve_cmd("zeta", cmd_zeta, "point counts, L-polynomial, Newton slopes")
    z.add_argument("--plot", help="write a Newton polygon figure to this path")
    curve_cmd("disc", cmd_disc, "discriminant and its squareness")
    curve_cmd("galois-an", cmd_galois_an, "is the Galois group inside A_n?")
    curve_cmd("morse", cmd_morse, "Morse polynomial test")

    h = sub.add_parser("heart", help="heart of a permutation module over F_2")
    h.add_argument("--group", help="A5, S7, C5, PSL2(5), PSL3(2), GL(2,F2), ...")
    h.add_argument("--gens", action="append", help='generator in cycle notation, repeatable')
    h.add_argument("--n", type=int, help="number of points for --gens")
    h.add_argument("--basis", action="store_true", help="include the End basis")
    h.set_defaults(func=cmd_heart)

    c = sub.add_parser("chartab", help="character table of SL2(F_q) or PSL2(F_q)")
    c.add_argument("--group", default="sl2", help="sl2 or psl2")
    c.add_argument("--q", type=int, required=True)
    c.set_defaults(func=cmd_chartab)

    lm = sub.add_parser("lemma-sl2", help="can M_g(H_p) be a summand of Q[SL2(F_q)]?")
    lm.add_argument("--q", type=int, required=True)
    lm.add_argument("--p", type=int, required=True)
    lm.set_defaults(func=cmd_lemma_sl2)

    s = sub.add_parser("scan", help="sweep a genus-2 family template")
    s.add_argument("--field", required=True)
    s.add_argument("--template", required=True, help='e.g. "*,*,*,*,0,1"; * ranges over F')
    s.add_argument("--out", help="record file (JSONL or CSV)")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--plot", help="write a summary figure to this path")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify-paper", help="run the full reproduction suite")
    v.add_argument("--out", help="also write the report to this path")
    v.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hyperjac {args.command}: error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
