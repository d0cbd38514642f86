"""Command-line interface.

Exit codes: 0 success, 1 methods disagree, 2 invalid input, 3 failed
precondition (e.g. the ideal is not shifted), 4 oracle size guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import equivariant, ideal as ideal_mod, koszul, nlambda, quotients, star
from .betti import BettiTable
from .document import load_document
from .errors import ShiftedBettiError
from .monomials import to_string
from .partitions import fmt, stats

METHODS = ("quotients", "formula", "oracle")


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_check(args) -> int:
    I = load_document(args.input).to_ideal()
    weak = ideal_mod.find_shift_violation(I)
    parts = [f"shifted: {'no' if weak else 'yes'}"]
    witness = weak
    payload = {"shifted": weak is None}
    if args.strong:
        strong = ideal_mod.find_shift_violation(I, strong=True)
        parts.append(f"strongly shifted: {'no' if strong else 'yes'}")
        payload["strongly_shifted"] = strong is None
        witness = witness or strong
    if witness is not None:
        parts.append(f"witness: {witness.describe()}")
        payload["witness"] = {"generator": list(witness.generator), "moved": list(witness.moved)}
    lines = [", ".join(parts)]
    if args.polymatroidal:
        res = ideal_mod.is_weakly_polymatroidal(I, args.degree_bound, extended=args.extended)
        line = f"weakly polymatroidal: {'yes' if res else 'no'}"
        payload["weakly_polymatroidal"] = res.ok
        if not res:
            line += f", witness: u={fmt(res.u)} v={fmt(res.v)} t={res.t}"
            payload["polymatroidal_witness"] = {"u": list(res.u), "v": list(res.v), "t": res.t}
        lines.append(line)
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_gens(args) -> int:
    I = load_document(args.input).to_ideal()
    gens = quotients.generator_order(I)
    text = "\n".join(f"{fmt(u)}  {to_string(u)}" for u in gens)
    _emit(args, text, {"n": I.n, "monomials": [list(u) for u in gens]})
    return 0


def cmd_quotients(args) -> int:
    I = load_document(args.input).to_ideal()
    records = quotients.quotient_records(I)
    rows = []
    for rec in records:
        colon = "-" if rec.position == 1 else "(" + ",".join(f"x{i}" for i in sorted(rec.colon_vars)) + ")"
        rows.append((str(rec.position), to_string(rec.u), colon, str(rec.max_u)))
    header = ("i", "u_i", "colon", "max")
    widths = [max(len(r[k]) for r in rows + [header]) for k in range(4)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    payload = {
        "rows": [
            {"i": rec.position, "u": list(rec.u), "colon": sorted(rec.colon_vars), "max": rec.max_u}
            for rec in records
        ]
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def _betti_by(method: str, doc, char: int, max_box: int) -> BettiTable:
    if method == "oracle":
        return koszul.betti_oracle(doc.oracle_source(), char=char, max_box=max_box)
    I = doc.to_ideal()
    if method == "quotients":
        return quotients.betti_from_quotients(I)
    return nlambda.betti_closed_form(I)


def _tables_report(args, tables: dict[str, BettiTable]) -> int:
    agree = len({tuple(t.items()) for t in tables.values()}) == 1
    if args.format == "json":
        payload = {name: t.to_json() for name, t in tables.items()}
        if len(tables) > 1:
            payload["agree"] = agree
        print(json.dumps(payload, sort_keys=True))
    else:
        blocks = []
        for name, t in tables.items():
            blocks.append(f"[{name}]\n{t.to_text()}" if len(tables) > 1 else t.to_text())
        if len(tables) > 1:
            blocks.append("methods agree" if agree else "METHODS DISAGREE")
        print("\n".join(blocks))
    return 0 if agree else 1


def cmd_betti(args) -> int:
    doc = load_document(args.input)
    methods = METHODS if args.method == "all" else (args.method,)
    tables = {m: _betti_by(m, doc, args.char, args.max_box) for m in methods}
    return _tables_report(args, tables)


def cmd_star(args) -> int:
    params = star.StarParams(args.n, args.c, args.m)
    I = star.star_ideal(params)
    lines: list[str] = []
    payload: dict = {"n": params.n, "c": params.c, "m": params.m}
    show_gens = not (args.betti or args.closed_form or args.regularity or args.defect)
    if show_gens:
        lines += [fmt(lam) for lam in I.generators]
        payload["partitions"] = [list(lam) for lam in I.generators]
    if args.betti:
        tables = {"quotients": quotients.betti_from_quotients(I), "formula": nlambda.betti_closed_form(I)}
        cor = star.star_betti_low_power_table(params)
        if cor is not None:
            tables["square-cube"] = cor
        if args.oracle:
            tables["oracle"] = koszul.betti_oracle(I, char=args.char, max_box=args.max_box)
        main = tables["quotients"]
        agree = len({tuple(t.items()) for t in tables.values()}) == 1
        lines.append(main.to_text())
        lines.append(f"checked by {', '.join(tables)}: {'agree' if agree else 'DISAGREE'}")
        payload["betti"] = main.to_json()
        payload["agree"] = agree
        payload["methods"] = list(tables)
        if not agree:
            _emit(args, "\n".join(lines), payload)
            return 1
    if args.closed_form:
        cf = {"strands": sorted(star.star_strand_degrees(params))}
        lines.append("strands: " + " ".join(str(j) for j in cf["strands"]))
        top = min(cf["strands"])
        if params.m <= params.c:
            cf["top_row"] = [star.star_top_row(params, i) for i in range(params.n)]
            lines.append(f"top row {top}: " + " ".join(map(str, _trim(cf["top_row"]))))
        if params.m >= 2:
            cf["bottom_row"] = [star.star_bottom_row(params, i) for i in range(params.n)]
            lines.append(
                f"bottom row {star.star_regularity(params)}: " + " ".join(map(str, _trim(cf["bottom_row"])))
            )
        cor = star.star_betti_low_power_table(params)
        if cor is not None:
            lines.append(cor.to_text())
            cf["table"] = cor.to_json()
        payload["closed_form"] = cf
    if args.regularity:
        reg = star.star_regularity(params)
        lines.append(f"regularity: {reg}")
        payload["regularity"] = reg
    if args.defect:
        dfc = star.third_symbolic_defect(params.n, params.c)
        lines.append(f"third symbolic defect: {dfc}")
        payload["third_symbolic_defect"] = dfc
    _emit(args, "\n".join(lines), payload)
    return 0


def _trim(values: list[int]) -> list[int]:
    while len(values) > 1 and values[-1] == 0:
        values = values[:-1]
    return values


def cmd_equivariant(args) -> int:
    I = load_document(args.input).to_ideal()
    table = equivariant.equivariant_table(I)
    payload = {
        "blocks": [
            {
                "i": i,
                "d": d,
                "summands": [
                    {"render": s.render(), "dimension": s.dimension, "p": s.p, "k": s.k, "l": s.l, "r": s.r}
                    for s in ss
                ],
            }
            for (i, d), ss in table.items()
        ]
    }
    _emit(args, equivariant.render_equivariant_table(table), payload)
    return 0


def cmd_filtration(args) -> int:
    I = load_document(args.input).to_ideal()
    order = nlambda.filtration(I)
    lines, rows = [], []
    for k, lam in enumerate(order, start=1):
        st = stats(lam)
        lines.append(f"{k}: {fmt(lam)}  degree={sum(lam)} p={st.p} r={st.r}")
        rows.append({"k": k, "partition": list(lam), "degree": sum(lam), "p": st.p, "r": st.r})
    _emit(args, "\n".join(lines), {"filtration": rows})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shifted-betti",
        description="Betti numbers of symmetric shifted monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_input=True):
        p = sub.add_parser(name, help=help_)
        if needs_input:
            p.add_argument("--input", "-i", required=True, help="JSON ideal document, '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "decide shifted / strongly shifted")
    p.add_argument("--strong", action="store_true", help="also test strong shiftedness")
    p.add_argument("--polymatroidal", action="store_true", help="also test the weakly polymatroidal condition")
    p.add_argument("--extended", action="store_true", help="polymatroidal pairs range over all of I in a degree window")
    p.add_argument("--degree-bound", type=int, default=None)

    add("gens", cmd_gens, "list minimal monomial generators in generator order")
    add("quotients", cmd_quotients, "colon variables and max(u) for every generator")

    p = add("betti", cmd_betti, "graded Betti table")
    p.add_argument("--method", choices=METHODS + ("all",), default="quotients")
    p.add_argument("--char", type=int, default=2, help="field characteristic for the oracle")
    p.add_argument("--max-box", type=int, default=koszul.DEFAULT_MAX_BOX)

    p = add("star", cmd_star, "symbolic powers of star configurations", needs_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--betti", action="store_true")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--regularity", action="store_true")
    p.add_argument("--defect", action="store_true")
    p.add_argument("--oracle", action="store_true", help="with --betti, add the brute-force oracle")
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--max-box", type=int, default=koszul.DEFAULT_MAX_BOX)

    add("equivariant", cmd_equivariant, "equivariant Betti table as module descriptors")
    add("filtration", cmd_filtration, "partition generators in filtration order")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ShiftedBettiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
