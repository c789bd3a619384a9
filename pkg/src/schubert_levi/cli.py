"""
Command-line front end.

    python -m schubert_levi heads --n 9 --d 3 --w 3,6,9
    python -m schubert_levi straighten --n 4 --d 2 "(1,4)(2,3)" --verify --seed 7
    python -m schubert_levi decompose --n 9 --d 3 --w 3,6,9 --degree 1 --format json

Exit codes: 0 success, 1 an internal check failed, 2 invalid input.
"""

import argparse
import csv
import io
import json
import random
import sys
from itertools import combinations

from .decomposition import (branching_of_rectangle, character_check, decompose_degree,
                            verify_psi_bijection)
from .grassmann import (SchubertContext, all_words, count_std_monomials, hasse_diagram,
                        stabilizer_set, standard_monomials)
from .heads import InvariantError, LeviContext, class_of, hasse_partition
from .sphericity import (CERTIFIED, scan, table_csv, table_json, table_text,
                         unsound_rows, verdict_with_evidence)
from .straightening import (evaluate_expansion, evaluate_monomial, format_expansion,
                            format_monomial, format_word, parse_monomial, random_matrix,
                            restrict_to_schubert, sample_point_on_schubert, straighten)
from .tableaux import render_tableau

PALETTE = ("#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
           "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f")


class Failure(Exception):
    """An internal check failed; maps to exit code 1."""


def int_list(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _context(args):
    if args.w is None:
        return SchubertContext.grassmannian(args.n, args.d)
    return SchubertContext(args.n, args.d, args.w)


def _levi(args, ctx=None):
    ctx = ctx or _context(args)
    if getattr(args, "r_q", None) is None:
        return LeviContext.stabilizer(ctx)
    return LeviContext(ctx, frozenset(args.r_q))


def _word(tau):
    return ",".join(map(str, tau))


def _emit_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dot_graph(levi, components=None):
    diagram = hasse_diagram(levi.ctx)
    color = {}
    if components is not None:
        for k, members in enumerate(components.values()):
            for tau in members:
                color[tau] = PALETTE[k % len(PALETTE)]
    heads = set(components) if components is not None else set()
    lines = [f'digraph "H_{_word(levi.w)}" {{', "  rankdir=BT;",
             '  node [shape=box, style=filled, fillcolor=white, fontname="Helvetica"];']
    for tau in diagram.nodes:
        attrs = [f'label="{_word(tau)}"']
        if tau in color:
            attrs.append(f'fillcolor="{color[tau]}"')
        if tau in heads:
            attrs.append('style="filled,bold"')
            attrs.append("penwidth=2.5")
        lines.append(f'  "{_word(tau)}" [{", ".join(attrs)}];')
    for lower, upper, label in diagram.edges:
        style = ", style=dashed" if label in levi.r_hat and components is not None else ""
        lines.append(f'  "{_word(lower)}" -> "{_word(upper)}" [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_heads(args):
    levi = _levi(args)
    components = hasse_partition(levi)
    if args.format == "dot":
        return _dot_graph(levi, components)
    rows = [(theta, class_of(theta, levi), len(members)) for theta, members in components.items()]
    if args.format == "json":
        return json.dumps({
            "N": levi.N, "d": levi.d, "w": list(levi.w),
            "r_q": sorted(levi.r_q),
            "blocks": [[b[0], b[-1]] for b in levi.blocks],
            "heads": [{"head": list(t), "class": list(c), "component_size": n,
                       "component": [list(x) for x in components[t]]} for t, c, n in rows],
        }, indent=2) + "\n"
    if args.format == "csv":
        return _emit_csv(["head", "class", "component_size"],
                         [(_word(t), _word(c), n) for t, c, n in rows])
    out = [f"w = ({_word(levi.w)}) in Gr({levi.d},{levi.N})",
           f"R_Q = {{{_word(sorted(levi.r_q))}}}",
           "blocks: " + " ".join(f"[{b[0]}-{b[-1]}]" for b in levi.blocks),
           f"heads ({len(rows)}):"]
    out += [f"  ({_word(t)})  class ({_word(c)})  component size {n}" for t, c, n in rows]
    return "\n".join(out) + "\n"


def cmd_hasse(args):
    levi = _levi(args)
    diagram = hasse_diagram(levi.ctx)
    if args.format == "dot":
        return _dot_graph(levi, hasse_partition(levi))
    if args.format == "json":
        return json.dumps({"nodes": [list(t) for t in diagram.nodes],
                           "edges": [{"lower": list(a), "upper": list(b), "label": m}
                                     for a, b, m in diagram.edges]}, indent=2) + "\n"
    if args.format == "csv":
        return _emit_csv(["lower", "upper", "label"],
                         [(_word(a), _word(b), m) for a, b, m in diagram.edges])
    out = [f"{len(diagram.nodes)} nodes, {len(diagram.edges)} edges"]
    out += [f"  ({_word(a)}) -> ({_word(b)})  s_{m}" for a, b, m in diagram.edges]
    return "\n".join(out) + "\n"


def cmd_straighten(args):
    monomial = parse_monomial(args.monomial)
    for tau in monomial:
        if len(tau) != args.d or any(not 1 <= x <= args.n for x in tau):
            raise ValueError(f"factor {tau} is not a {args.d}-subset of [1, {args.n}]")
    expansion = straighten(monomial, strategy=args.strategy)
    if args.w is not None:
        expansion = restrict_to_schubert(expansion, _context(args).w)
    out = [format_expansion(expansion)]
    if args.verify:
        rng = random.Random(args.seed)
        hits = 0
        for k in range(args.trials):
            if args.w is None:
                matrix = random_matrix(args.n, args.d, rng)
            else:
                # the restricted expansion only holds on X(w)
                matrix = sample_point_on_schubert(_context(args), rng.randrange(2**32))
            if evaluate_monomial(monomial, matrix) == evaluate_expansion(expansion, matrix):
                hits += 1
        out.append(f"oracle: {hits}/{args.trials} exact matches")
        if hits != args.trials:
            raise Failure("\n".join(out))
    return "\n".join(out) + "\n"


def cmd_std_monomials(args):
    ctx = _context(args)
    if args.action == "count":
        return f"{count_std_monomials(ctx, args.degree)}\n"
    monomials = list(standard_monomials(ctx, args.degree))
    if args.format == "json":
        return json.dumps([[list(t) for t in m] for m in monomials]) + "\n"
    if args.format == "csv":
        return _emit_csv(["monomial"], [(format_monomial(m),) for m in monomials])
    return "".join(format_monomial(m) + "\n" for m in monomials)


def _report_text(report, levi):
    out = [f"w = ({_word(report.w)}), R_Q = {{{_word(report.r_q)}}}, degree {report.degree}",
           f"block sizes {list(levi.sizes)}; constituents are duals of the listed modules", ""]
    for entry in report.entries:
        out.append("heads " + "".join(format_word(t) for t in entry.heads))
        out.append("  shapes " + "  ".join(str(s) for s in entry.shapes))
        out.append(f"  tensor dim {entry.tensor_dim}")
        for label, m in entry.constituents:
            out.append(f"    {m} x {label}")
    out.append("")
    out.append(f"total_dim {report.total_dim}")
    return "\n".join(out) + "\n"


def cmd_decompose(args):
    levi = _levi(args)
    report = decompose_degree(levi, args.degree)
    if args.format == "json":
        return report.to_json() + "\n"
    if args.format == "csv":
        rows = [("".join(format_word(t) for t in e.heads),
                 " ".join(str(s) for s in e.shapes), e.tensor_dim,
                 "; ".join(f"{m}x{label}" for label, m in e.constituents))
                for e in report.entries]
        return _emit_csv(["heads", "shapes", "tensor_dim", "constituents"], rows)
    out = _report_text(report, levi)
    if args.show_tableaux:
        from .tableaux import tableau_of_monomial, block_restriction
        for entry in report.entries:
            tab = tableau_of_monomial(entry.heads)
            out += "\nhead tableau " + "".join(format_word(t) for t in entry.heads) + "\n"
            for k in range(1, levi.block_count + 1):
                out += f"block {k}:\n{render_tableau(block_restriction(tab, levi, k))}\n"
    return out


def _levi_choices(ctx, all_rq):
    full = sorted(stabilizer_set(ctx))
    if not all_rq:
        return [frozenset(full)]
    return [frozenset(c) for k in range(len(full) + 1) for c in combinations(full, k)]


def cmd_dimcheck(args):
    words = all_words(args.d, args.n) if args.all_w else [_context(args).w]
    lines, failed = [], 0
    for w in words:
        ctx = SchubertContext(args.n, args.d, w)
        for r_q in _levi_choices(ctx, args.all_rq):
            levi = LeviContext(ctx, r_q)
            for r in range(1, args.max_degree + 1):
                expected = count_std_monomials(ctx, r)
                got = decompose_degree(levi, r, check=False).total_dim
                ok = got == expected
                if ok and args.psi:
                    ok = verify_psi_bijection(levi, r) and character_check(levi, r)
                failed += not ok
                lines.append(f"w=({_word(w)}) R_Q={{{_word(sorted(r_q))}}} r={r}: "
                             f"{got} vs {expected} {'pass' if ok else 'FAIL'}")
    lines.append("all pass" if not failed else f"{failed} failures")
    text = "\n".join(lines) + "\n"
    if failed:
        raise Failure(text)
    return text


def cmd_spherical(args):
    if args.scan:
        verdicts = scan(args.n, args.d, args.max_degree)
    else:
        verdicts = [verdict_with_evidence(_context(args), args.max_degree)]
    if args.format == "csv":
        text = table_csv(verdicts)
    elif args.format == "json":
        text = table_json(verdicts) + "\n"
    else:
        text = table_text(verdicts)
        text += ("empirical columns are bounded-degree evidence up to degree "
                 f"{args.max_degree}; only '{CERTIFIED}' is a proved statement\n")
        for v in verdicts:
            if v.empirical.first_violation is not None:
                r, label, m = v.empirical.first_violation
                text += f"w=({_word(v.w)}): degree {r} label {label} has multiplicity {m}\n"
    bad = unsound_rows(verdicts)
    if bad:
        raise Failure(text + "certified rows refuted: "
                      + " ".join(f"({_word(v.w)})" for v in bad) + "\n")
    return text


def cmd_branch(args):
    report = branching_of_rectangle(args.blocks, args.d, args.degree)
    if args.format == "json":
        return report.to_json() + "\n"
    ctx = SchubertContext.grassmannian(sum(args.blocks), args.d)
    return _report_text(report, LeviContext.from_block_sizes(ctx, tuple(args.blocks)))


def _add_context(p, w_required=False, rq=True):
    p.add_argument("--n", type=int, required=True, help="ambient dimension N")
    p.add_argument("--d", type=int, required=True, help="subspace dimension d")
    p.add_argument("--w", type=int_list, required=w_required,
                   help="Schubert word, e.g. 3,6,9 (default: the whole Grassmannian)")
    if rq:
        p.add_argument("--r-q", type=int_list, default=None,
                       help="subset of the stabilizer set; default the whole set")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schubert-levi",
        description="Levi-module decompositions of coordinate rings of Grassmannian "
                    "Schubert varieties.")
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default="text")
        return p

    _add_context(add("heads", cmd_heads, ["text", "json", "csv", "dot"],
                     "heads, classes and the Hasse partition"))
    _add_context(add("hasse", cmd_hasse, ["text", "json", "csv", "dot"],
                     "Hasse diagram of the lower interval"))

    p = add("straighten", cmd_straighten, ["text"], "straighten a Plucker monomial")
    _add_context(p, rq=False)
    p.add_argument("monomial", help='e.g. "(1,4)(2,3)"')
    p.add_argument("--strategy", choices=["leftmost", "rightmost"], default="leftmost")
    p.add_argument("--verify", action="store_true", help="check against exact minors")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)

    p = add("std-monomials", cmd_std_monomials, ["text", "json", "csv"],
            "list or count standard monomials")
    p.add_argument("action", choices=["list", "count"])
    _add_context(p, rq=False)
    p.add_argument("--degree", type=int, required=True)

    p = add("decompose", cmd_decompose, ["text", "json", "csv"], "decompose one degree")
    _add_context(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--show-tableaux", action="store_true")

    p = add("dimcheck", cmd_dimcheck, ["text"], "compare total dimension with standard monomials")
    _add_context(p, rq=False)
    p.add_argument("--all-w", action="store_true", help="every w in I(d, N)")
    p.add_argument("--all-rq", action="store_true", help="every subset of the stabilizer set")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--psi", action="store_true", help="also check the bijection and characters")

    p = add("spherical", cmd_spherical, ["text", "csv", "json"],
            "multiplicity-freeness verdicts")
    _add_context(p, rq=False)
    p.add_argument("--scan", action="store_true", help="every w in I(d, N)")
    p.add_argument("--max-degree", type=int, default=2)

    p = add("branch", cmd_branch, ["text", "json"], "branch W^(r^d) to a block Levi")
    p.add_argument("--blocks", type=int_list, required=True, help="block sizes, e.g. 2,2")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    return parser


def _write(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("degree", "max_degree", "trials"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name.replace('_', '-')} must be at least 1")
    try:
        text = args.func(args)
    except Failure as exc:
        _write(str(exc), args.output)
        return 1
    except InvariantError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    _write(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
