"""Command-line interface.

Exit status 0 on success, 2 for flag errors and 3 for domain errors.  Errors
print one line ``error: <kind>: <reason>`` to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import channel as chm
from . import decoders, region, rm
from .errors import QmacError

EXIT_FLAGS = 2
EXIT_DOMAIN = 3


class _FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _FlagError(message)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(Path(out), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> str:
    ch = chm.make_channel(args.px, args.py, args.pz, args.pi)
    ind = chm.induced_channels(ch)
    return _dump_json({
        "p_i": ch.p_i, "p_x": ch.p_x, "p_y": ch.p_y, "p_z": ch.p_z,
        "entropy": chm.entropy4(ch),
        "hashing_bound": chm.hashing_bound(ch),
        "mi_sum": chm.mi_sum(ch),
        "mi_user1": chm.mi_single(ch, chm.Target.USER1),
        "mi_user2": chm.mi_single(ch, chm.Target.USER2),
        "mi_xor": chm.mi_single(ch, chm.Target.XOR),
        "wx_crossover": ind.wx_crossover,
        "wz_branches": list(ind.wz_branches),
    })


def cmd_code(args) -> str:
    k = rm.rm_dimension(args.r, args.m)
    n = 1 << args.m
    dual_r = args.m - args.r - 1
    return _dump_json({
        "n": n, "k": k, "rate": k / n,
        "dual_r": dual_r if dual_r >= 0 else None,
        "self_dual": dual_r == args.r,
    })


def cmd_css_check(args) -> str:
    for v in (args.rx, args.rz):
        if not 0 <= v <= args.m:
            raise QmacError(f"need 0 <= r <= m, got r={v}, m={args.m}")
    k_x = rm.rm_dimension(args.rx, args.m)
    k_z = rm.rm_dimension(args.rz, args.m)
    n = 1 << args.m
    logical = k_x + k_z - n
    return _dump_json({
        "valid": args.m <= args.rx + args.rz + 1,
        "logical_qubits": logical,
        "rate": logical / n,
    })


def _rows_csv(rows, mode: str) -> str:
    if mode == "joint":
        rows = [r.__class__(**{**r.__dict__, "successive": False}) for r in rows]
    elif mode == "successive":
        rows = [r.__class__(**{**r.__dict__, "joint": False}) for r in rows]
    return "\n".join(region.iter_rows_csv(rows)) + "\n"


def cmd_region(args) -> str:
    rp = region.RatePair(args.r1, args.r2)
    rows = region.sweep_grid(rp, args.pmax, args.step, args.delta)
    return _rows_csv(rows, args.mode)


def cmd_cross_section(args) -> str:
    rp = region.RatePair(args.r1, args.r2)
    return _rows_csv(region.cross_section(rp, args.pmax, args.step, args.delta), "both")


def cmd_simulate(args) -> str:
    if args.trials < 1:
        raise _FlagError("argument --trials: must be positive")
    c1 = rm.build_rm(args.r1, args.m)
    c2 = rm.build_rm(args.r2, args.m)
    ch = chm.make_channel(args.px, args.py, args.pz)
    report = decoders.monte_carlo(c1, c2, ch, args.decoder, args.trials, args.seed)
    return _dump_json(report.to_dict())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rmqmac", description="RM codes on Pauli-channel Q-MACs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", help="channel quantities")
    s.add_argument("--px", type=float, required=True)
    s.add_argument("--py", type=float, required=True)
    s.add_argument("--pz", type=float, required=True)
    s.add_argument("--pi", type=float, default=None)
    s.set_defaults(func=cmd_info, out=None)

    s = sub.add_parser("code", help="RM(r, m) parameters")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_code, out=None)

    s = sub.add_parser("css-check", help="CSS validity of an RM pair")
    s.add_argument("--rx", type=int, required=True)
    s.add_argument("--rz", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_css_check, out=None)

    for name, func in (("region", cmd_region), ("cross-section", cmd_cross_section)):
        s = sub.add_parser(name)
        s.add_argument("--r1", type=float, required=True)
        s.add_argument("--r2", type=float, required=True)
        s.add_argument("--pmax", type=float, default=0.05)
        s.add_argument("--step", type=float, default=0.0025)
        s.add_argument("--delta", type=float, default=0.0)
        if name == "region":
            s.add_argument("--mode", choices=("joint", "successive", "both"), default="both")
        s.add_argument("--out", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("simulate", help="Monte Carlo block error rate")
    s.add_argument("--r1", type=int, required=True)
    s.add_argument("--r2", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--px", type=float, required=True)
    s.add_argument("--py", type=float, required=True)
    s.add_argument("--pz", type=float, required=True)
    s.add_argument("--decoder", choices=decoders.DECODER_IDS, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_simulate)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _emit(args.func(args), args.out)
    except _FlagError as exc:
        print(f"error: flags: {' '.join(str(exc).split())}", file=sys.stderr)
        return EXIT_FLAGS
    except QmacError as exc:
        print(f"error: domain: {type(exc).__name__}: {' '.join(str(exc).split())}",
              file=sys.stderr)
        return EXIT_DOMAIN
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
