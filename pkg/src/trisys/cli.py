"""Command-line front end: construct, verify, and bound.

Exit codes: 0 success, 1 verification failure, 2 bad parameters,
3 construction/search failure (budget), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import gf3
from .bounds import bound_rcw, bound_thm1, bound_thm1prime, bound_thm2
from .composition import (
    SplitDecomposition,
    compose,
    compose_split,
    decompose,
    random_decomposition,
    random_latin,
    split_ag,
)
from .constructions import affine_geometry, small_sts
from .designs import (
    BlockDesign,
    StsInstance,
    p_rank,
    td_from_latin,
    verify_resolution,
    verify_sts,
    verify_td,
)
from .io import (
    DesignFileRecord,
    read_design,
    resolution_from_record,
    resolution_record,
    sts_record,
    write_design,
)
from .rankfix import force_exact_rank
from .resolution import SearchLimits, search_resolution

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_SEARCH_FAILED = 3
EXIT_IO = 4


def _write(path: str, rec: DesignFileRecord) -> None:
    try:
        write_design(path, rec)
    except OSError as exc:
        raise _IoFailure(str(exc)) from exc


class _IoFailure(Exception):
    pass


class _BadParams(Exception):
    pass


def _summary(s: StsInstance, resolution_attached: bool) -> str:
    res = "attached" if resolution_attached else "none"
    return (
        f"v={s.v} blocks={len(s.blocks)} rank3={p_rank(s.design, 3)} resolution={res}"
    )


def _cmd_construct(args) -> int:
    out = args.out
    if args.what == "ag":
        if args.k < 1:
            raise _BadParams("--k must be >= 1")
        ag = affine_geometry(args.k)
        out = out or f"ag-k{args.k}"
        _write(f"{out}.sts.jsonl", sts_record(ag.sts, k=args.k))
        _write(
            f"{out}.resolution.jsonl",
            resolution_record(ag.sts.design, ag.standard_resolution),
        )
        print(_summary(ag.sts, True))
    elif args.what == "sts":
        if args.T < 1 or args.T % 6 not in (1, 3):
            raise _BadParams("--T must be 1 or 3 (mod 6)")
        s = small_sts(args.T)
        out = out or f"sts-T{args.T}"
        _write(f"{out}.sts.jsonl", sts_record(s, t=args.T))
        print(_summary(s, False))
    elif args.what == "compose":
        if args.k < 1 or args.T < 1 or args.T % 6 not in (1, 3):
            raise _BadParams("--k must be >= 1 and --T admissible (1 or 3 mod 6)")
        t_split = args.t or 0
        if not 0 <= t_split <= args.k:
            raise _BadParams("--t must satisfy 0 <= t <= k")
        rng = random.Random(args.seed)
        if t_split == 0:
            dec = random_decomposition(args.k, args.T, rng)
            s = compose(dec)
        else:
            subs = tuple(
                compose(random_decomposition(t_split, args.T, rng))
                for _ in range(3 ** (args.k - t_split))
            )
            _, outer = split_ag(args.k, t_split)
            tds = {
                triple: td_from_latin(random_latin(args.T, rng)) for triple in outer
            }
            s = compose_split(
                SplitDecomposition(
                    k=args.k, t=t_split, T=args.T, sub_systems=subs, tds=tds
                )
            )
        out = out or (
            f"compose-k{args.k}-T{args.T}"
            + (f"-t{t_split}" if t_split else "")
            + f"-seed{args.seed}"
        )
        _write(f"{out}.sts.jsonl", sts_record(s, k=args.k, t=args.T, kind="decomposition"))
        print(_summary(s, False))
    elif args.what == "force-rank":
        rec = _read_checked(args.infile)
        if rec.kind != "decomposition" or rec.k is None:
            raise _BadParams("force-rank needs a decomposition file (with k)")
        s = StsInstance(BlockDesign(rec.v, rec.blocks))
        dec = decompose(s, rec.k)
        forced = force_exact_rank(dec)
        out = out or "forced"
        _write(f"{out}.sts.jsonl", sts_record(forced, k=rec.k))
        print(_summary(forced, False))
    elif args.what == "resolve":
        rec = _read_checked(args.infile)
        if rec.kind not in ("sts", "decomposition"):
            raise _BadParams("resolve needs an sts (or decomposition) file")
        s = StsInstance(BlockDesign(rec.v, rec.blocks))
        limits = SearchLimits(node_budget=args.node_budget, max_classes=args.max_classes)
        outcome = search_resolution(s.design, limits)
        if outcome.resolution is None:
            reason = "budget exceeded" if outcome.budget_exceeded else "no resolution exists"
            print(f"resolution search failed: {reason}", file=sys.stderr)
            return EXIT_SEARCH_FAILED
        out = out or "resolved"
        _write(f"{out}.resolution.jsonl", resolution_record(s.design, outcome.resolution))
        print(_summary(s, True))
    return EXIT_OK


def _read_checked(path: str) -> DesignFileRecord:
    try:
        return read_design(path)
    except OSError as exc:
        raise _IoFailure(str(exc)) from exc


def _cmd_verify(args) -> int:
    rec = _read_checked(args.file)
    checks: list[dict] = []
    ok = True

    def add(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        entry = {"check": name, "ok": passed}
        if detail:
            entry["detail"] = detail
        checks.append(entry)

    design = None
    try:
        if rec.kind in ("sts", "decomposition"):
            design = BlockDesign(rec.v, rec.blocks)
            rep = verify_sts(design)
            add("sts-axioms", rep.ok, "" if rep.ok else rep.violations[0])
        elif rec.kind == "td":
            design = BlockDesign(rec.v, rec.blocks)
            if rec.groups is None:
                add("td-axioms", False, "missing groups record")
            else:
                rep = verify_td(design, rec.groups)
                add("td-axioms", rep.ok, "" if rep.ok else rep.violations[0])
        elif rec.kind == "resolution":
            blocks = sorted(b for cls in rec.classes for b in cls)
            design = BlockDesign(rec.v, tuple(blocks))
            res = resolution_from_record(rec, design)
            rep = verify_resolution(design, res)
            add("resolution", rep.ok, "" if rep.ok else rep.violations[0])
    except ValueError as exc:
        # Malformed designs (duplicate or out-of-range blocks) are failed
        # checks with a named violation, not parameter errors.
        add("well-formed", False, str(exc))
        print(json.dumps({"ok": False, "checks": checks}, separators=(",", ":")))
        return EXIT_CHECK_FAILED

    if args.resolution:
        rrec = _read_checked(args.resolution)
        if rrec.kind != "resolution":
            add("resolution", False, "not a resolution file")
        else:
            try:
                res = resolution_from_record(rrec, design)
                rep = verify_resolution(design, res)
                add("resolution", rep.ok, "" if rep.ok else rep.violations[0])
            except ValueError as exc:
                add("resolution", False, str(exc))

    if args.orthogonal_to:
        try:
            v_str, k_str = args.orthogonal_to.split(",")
            v_target, k_target = int(v_str), int(k_str)
        except ValueError:
            raise _BadParams("--orthogonal-to expects v,k")
        if v_target != rec.v:
            add("orthogonal", False, f"file has v={rec.v}, expected {v_target}")
        else:
            code = gf3.row_space(gf3.generator_gvk(v_target, k_target))
            add("orthogonal", gf3.is_orthogonal(design, code))

    if args.rank:
        r = p_rank(design, args.rank)
        checks.append({"check": f"rank-{args.rank}", "ok": True, "value": r})

    print(json.dumps({"ok": ok, "checks": checks}, separators=(",", ":")))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_bound(args) -> int:
    if args.formula == "rcw":
        rep = bound_rcw(args.T)
    elif args.formula == "thm1":
        rep = bound_thm1(args.T, args.k, args.n1, args.n3)
    elif args.formula == "thm1prime":
        rep = bound_thm1prime(args.T, args.k, args.n1, args.n3)
    else:
        if args.n1hat is None:
            raise _BadParams("thm2 requires --n1hat")
        rep = bound_thm2(args.T, args.k, args.n1hat, args.n3)
    print(f"formula: {rep.formula_id}")
    for name, value in rep.inputs.items():
        print(f"{name}: {value}")
    print(f"numerator: {rep.numerator}")
    print(f"denominator: {rep.denominator}")
    print(f"floor: {rep.floor_value}")
    print(f"digits: {rep.decimal_digits}")
    note = "" if rep.hypothesis_ok else f" ({rep.hypothesis_note})"
    print(f"hypothesis: {'ok' if rep.hypothesis_ok else 'violated'}{note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisys",
        description="Construct, verify, and bound triple systems of prescribed 3-rank.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build designs and write design files")
    consub = con.add_subparsers(dest="what", required=True)
    p_ag = consub.add_parser("ag", help="affine triple system with its resolution")
    p_ag.add_argument("--k", type=int, required=True)
    p_ag.add_argument("--out")
    p_sts = consub.add_parser("sts", help="stock triple system of order T")
    p_sts.add_argument("--T", type=int, required=True)
    p_sts.add_argument("--out")
    p_comp = consub.add_parser("compose", help="grouped composition on 3^k * T points")
    p_comp.add_argument("--k", type=int, required=True)
    p_comp.add_argument("--T", type=int, required=True)
    p_comp.add_argument("--t", type=int, default=0, help="coarse split level")
    p_comp.add_argument("--seed", type=int, default=0)
    p_comp.add_argument("--out")
    p_force = consub.add_parser("force-rank", help="force 3-rank v-k-1 exactly")
    p_force.add_argument("--in", dest="infile", required=True)
    p_force.add_argument("--out")
    p_res = consub.add_parser("resolve", help="search a resolution by exact cover")
    p_res.add_argument("--in", dest="infile", required=True)
    p_res.add_argument("--out")
    p_res.add_argument("--node-budget", type=int, default=10**8)
    p_res.add_argument("--max-classes", type=int, default=10**6)

    ver = sub.add_parser("verify", help="check axioms, ranks, orthogonality")
    ver.add_argument("file")
    ver.add_argument("--resolution")
    ver.add_argument("--orthogonal-to", metavar="V,K")
    ver.add_argument("--rank", type=int, metavar="P")

    bnd = sub.add_parser("bound", help="evaluate a counting bound exactly")
    bnd.add_argument("formula", choices=["thm1", "thm2", "thm1prime", "rcw"])
    bnd.add_argument("--T", type=int, required=True)
    bnd.add_argument("--k", type=int, default=1)
    bnd.add_argument("--n1", type=int, default=1)
    bnd.add_argument("--n3", type=int, default=1)
    bnd.add_argument("--n1hat", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_bound(args)
    except _BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except _IoFailure as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
