"""Command-line front end: one subcommand per computation, JSON/TSV output,
and a verify-all mode that replays every oracle sweep.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import frobenius, linkage, rootdata, sl2, spo21, verify
from .characters import factors_to_json, polyn_to_json
from .padic import Prime
from .rootdata import GroupShape


def _factors_out(factors: Counter, fmt: str) -> str:
    if fmt == "tsv":
        lines = ["hw\tmult"]
        lines += [f"{hw}\t{m}" for hw, m in sorted(factors.items(), reverse=True)]
        return "\n".join(lines)
    if fmt == "text":
        return " + ".join(
            f"L({hw})" if m == 1 else f"{m}*L({hw})"
            for hw, m in sorted(factors.items(), reverse=True)
        ) or "0"
    return json.dumps(factors_to_json(factors))


def _monomials_out(monos, fmt: str) -> str:
    names = [str(m) for m in monos]
    if fmt in ("tsv", "text"):
        return "\n".join(names)
    return json.dumps({"basis": names})


def _parse_flag(s: str, shape: GroupShape):
    flag = tuple(rootdata.parse_label(tok.strip()) for tok in s.split(","))
    rootdata.check_flag(flag, shape)
    return flag


def _parse_weight(s: str, shape: GroupShape) -> tuple[int, ...]:
    out = tuple(int(tok) for tok in s.split(","))
    if len(out) != shape.rank:
        raise ValueError(f"weight needs {shape.rank} coordinates, got {len(out)}")
    return out


def _parse_window(s: str) -> tuple[int, int]:
    lo, hi = s.split(":")
    return int(lo), int(hi)


def _parse_box(s: str) -> list[tuple[int, int]]:
    return [_parse_window(tok) for tok in s.split(",")]


def _shape(args) -> GroupShape:
    return GroupShape(args.n, args.m, args.type)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _halves(vec) -> list[str]:
    return [_frac_str(Fraction(c, 2)) for c in vec]


def _step_json(step: rootdata.ChainStep | None, flag) -> dict:
    if step is None:
        return {"flag": [rootdata.label_str(lb) for lb in flag], "move": None,
                "alpha": None, "levi": None}
    move = step.move.kind if step.move.pos is None else f"{step.move.kind}@{step.move.pos}"
    alpha = list(rootdata.natural(step.alpha)) if step.alpha is not None else None
    return {"flag": [rootdata.label_str(lb) for lb in step.flag_to], "move": move,
            "alpha": alpha, "levi": step.levi}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spolink",
        description="Exact decompositions, morphism tables, blocks, root data "
        "and linkage graphs for rank-one super modules and their thickenings.",
    )
    top.add_argument("--seed-irrelevant", action="store_true",
                     help="accepted for interface compatibility; nothing here is random")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--format", choices=("json", "tsv", "text"), default="json")
        return sp

    sp = add("decompose-sl2", help="constituents of the rank-one induced module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("decompose-spo21", help="constituents of the super induced module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)

    sp = add("decompose-grt", help="constituents of the thickened induced module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)

    sp = add("socle", help="socle monomial basis")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--side", choices=("minus", "plus"), default="minus")
    sp.add_argument("--grt", action="store_true")
    sp.add_argument("--r", type=int, default=1)

    sp = add("hom", help="Hom dimension between induced modules")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--grt", action="store_true")
    sp.add_argument("--r", type=int, default=1)

    sp = add("psi-table", help="morphism table on basis monomials")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--j", type=int)
    sp.add_argument("--grt", action="store_true")
    sp.add_argument("--r", type=int, default=1)

    sp = add("kernel", help="closed-form kernel basis of a morphism")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)

    sp = add("ker-im-coker", help="kernel/image/cokernel constituents")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--j", type=int)
    sp.add_argument("--grt", action="store_true")
    sp.add_argument("--r", type=int, default=1)

    sp = add("blocks", help="block ids over a weight window")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--window", type=str, required=True, metavar="LO:HI")

    sp = add("blocks-grt", help="thickening block ids over a weight window")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--window", type=str, required=True, metavar="LO:HI")

    for name in ("roots", "phiplus", "chain", "rho"):
        sp = add(name)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--type", choices=("odd", "even"), required=True)
        if name in ("phiplus", "rho"):
            sp.add_argument("--flag", type=str, default=None,
                            help="comma list like 1,-2,1bar (default: standard)")

    sp = add("lambda-bracket", help="flag-normalised weight")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--type", choices=("odd", "even"), required=True)
    sp.add_argument("--flag", type=str, required=True)
    sp.add_argument("--weight", type=str, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("char-z", help="product character of the thickened induced module")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--type", choices=("odd", "even"), required=True)
    sp.add_argument("--flag", type=str, default=None)
    sp.add_argument("--weight", type=str, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    for name in ("linkage-graph", "components"):
        sp = add(name)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--type", choices=("odd", "even"), required=True)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--rset", type=str, default="1,2")
        sp.add_argument("--box", type=str, required=True, metavar="LO:HI[,LO:HI...]")

    sp = add("verify-all", help="run every oracle-equivalence sweep")
    sp.add_argument("--quick", action="store_true", help="reduced sweep bounds")

    return top


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "json")
    out = sys.stdout

    if args.command == "verify-all":
        return 0 if verify.run_all(quick=args.quick) else 1

    p = Prime(args.p).p if hasattr(args, "p") and args.p is not None else None

    if args.command == "decompose-sl2":
        print(_factors_out(sl2.decompose_sl2(args.k, p), fmt), file=out)
    elif args.command == "decompose-spo21":
        print(_factors_out(spo21.comp_factors_h0(args.l, p), fmt), file=out)
    elif args.command == "decompose-grt":
        print(_factors_out(frobenius.comp_factors_r(args.l, args.r, p), fmt), file=out)
    elif args.command == "socle":
        if args.grt:
            monos = frobenius.socle_basis_r(args.l, args.r, p, args.side)
        else:
            monos = spo21.socle_basis(args.l, p, args.side)
        print(_monomials_out(monos, fmt), file=out)
    elif args.command == "hom":
        if args.grt:
            dim = frobenius.hom_r(args.k, args.l, args.r, p)
            parity = ("even" if args.l == args.k else "odd") if dim else None
        else:
            dim, parity = spo21.hom_dim(args.k, args.l, p)
        print(json.dumps({"dim": dim, "parity": parity}), file=out)
    elif args.command == "psi-table":
        if args.grt:
            tab = frobenius.psi_r_table(args.k, args.r, p)
        else:
            if args.j is None:
                raise ValueError("psi-table needs --j unless --grt is given")
            tab = spo21.psi_table(args.k, args.j, p)
        print(tab.to_tsv(), end="", file=out)
    elif args.command == "kernel":
        print(_monomials_out(spo21.kernel_basis(args.k, args.j, p), fmt), file=out)
    elif args.command == "ker-im-coker":
        if args.grt:
            ker, im, coker = frobenius.psi_r_ker_im_coker(args.k, args.r, p)
        else:
            if args.j is None:
                raise ValueError("ker-im-coker needs --j unless --grt is given")
            ker, im, coker = spo21.ker_im_coker_factors(args.k, args.j, p)
        print(json.dumps({
            "kernel": factors_to_json(ker),
            "image": factors_to_json(im),
            "cokernel": factors_to_json(coker),
        }), file=out)
    elif args.command in ("blocks", "blocks-grt"):
        lo, hi = _parse_window(args.window)
        fn = spo21.block_of if args.command == "blocks" else frobenius.block_of_r
        print("weight\tblock", file=out)
        for l in range(lo, hi + 1):
            print(f"{l}\t{fn(l, p)}", file=out)
    elif args.command == "roots":
        shape = _shape(args)
        print(json.dumps({"roots": [
            {"root": list(r.natural()), "parity": r.parity, "isotropic": r.isotropic}
            for r in rootdata.roots(shape)
        ]}), file=out)
    elif args.command == "phiplus":
        shape = _shape(args)
        flag = _parse_flag(args.flag, shape) if args.flag else rootdata.standard_flag(shape)
        pos = sorted(rootdata.phi_plus(flag, shape), key=lambda r: r.vec)
        print(json.dumps({"roots": [
            {"root": list(r.natural()), "parity": r.parity, "isotropic": r.isotropic}
            for r in pos
        ]}), file=out)
    elif args.command == "chain":
        shape = _shape(args)
        steps = rootdata.chain_of_borels(shape)
        entries = [_step_json(None, rootdata.standard_flag(shape))]
        entries += [_step_json(s, None) for s in steps]
        print(json.dumps(entries), file=out)
    elif args.command == "rho":
        shape = _shape(args)
        flag = _parse_flag(args.flag, shape) if args.flag else rootdata.standard_flag(shape)
        rho0, rho1, rho = rootdata.rho_parts(flag, shape)
        print(json.dumps({
            "rho0": _halves(rho0), "rho1": _halves(rho1), "rho": _halves(rho),
            "doubled": {"rho0": list(rho0), "rho1": list(rho1), "rho": list(rho)},
        }), file=out)
    elif args.command == "lambda-bracket":
        shape = _shape(args)
        flag = _parse_flag(args.flag, shape)
        lam = rootdata.doubled(_parse_weight(args.weight, shape))
        br = rootdata.lambda_bracket(lam, flag, shape, args.r, p)
        print(json.dumps({"weight": list(rootdata.natural(br))}), file=out)
    elif args.command == "char-z":
        shape = _shape(args)
        flag = _parse_flag(args.flag, shape) if args.flag else rootdata.standard_flag(shape)
        lam = rootdata.doubled(_parse_weight(args.weight, shape))
        ch = rootdata.ch_z_flag(lam, flag, shape, args.r, p)
        print(json.dumps(polyn_to_json(ch)), file=out)
    elif args.command in ("linkage-graph", "components"):
        shape = _shape(args)
        box = _parse_box(args.box)
        r_set = {int(tok) for tok in args.rset.split(",")}
        graph = linkage.build_graph(box, shape, r_set, p)
        if args.command == "linkage-graph":
            print(json.dumps({
                "nodes": [list(w) for w in graph.nodes],
                "edges": [
                    {"src": list(e.source), "dst": list(e.target), "kind": e.kind,
                     "alpha": list(e.alpha), "r": e.r}
                    for e in graph.edges
                ],
            }), file=out)
        else:
            print("component\tweight", file=out)
            for cid, comp in enumerate(linkage.components(graph)):
                for w in comp:
                    print(f"{cid}\t{','.join(map(str, w))}", file=out)
    else:  # pragma: no cover
        raise ValueError(f"unhandled command {args.command!r}")
    return 0


def main(argv=None) -> int:
    try:
        return run(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
