"""Command-line surface: queries, sweeps, exports, interactive play.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
With --json, commands emit one envelope object with the stable fields
command/inputs/results/report (play is interactive and ignores --json).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import export as export_mod
from . import engine, families, game, josephus, play, verify
from .game import DomainError, GameError, Position


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weighted-nim",
        description="Two-pile weighted Nim: Grundy values, closed-form families, "
        "Josephus cross-checks, verification sweeps, and interactive play.",
    )
    parser.add_argument("--json", action="store_true", help="emit a structured JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_xy(p: argparse.ArgumentParser) -> None:
        p.add_argument("x", type=int, help="pile-1 stones (weight +1)")
        p.add_argument("y", type=int, help="pile-2 stones (weight -2)")

    add_xy(sub.add_parser("grundy", help="oracle and closed-form Grundy values"))
    add_xy(sub.add_parser("classify", help="family slot containing the position"))
    add_xy(sub.add_parser("moves", help="list the legal moves"))
    add_xy(sub.add_parser("best-move", help="deterministic perfect-play move"))

    p = sub.add_parser("sets", help="enumerate the positions with Grundy value s in a box")
    p.add_argument("s", type=int)
    p.add_argument("--xmax", type=int, default=20)
    p.add_argument("--ymax", type=int, default=20)

    p = sub.add_parser("josephus", help="elimination order for circle size v")
    p.add_argument("v", type=int)

    p = sub.add_parser("fs", help="F_s(v) by simulation, closed form, and recursion")
    p.add_argument("s", type=int)
    p.add_argument("v", type=int)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--xmax", type=int, default=128)
    p.add_argument("--ymax", type=int, default=128)
    p.add_argument("--vmax", type=int, default=1024)
    p.add_argument("--smax", type=int, default=12)

    p = sub.add_parser("export", help="write a Grundy table as CSV plus figures")
    p.add_argument("--xmax", type=int, default=64)
    p.add_argument("--ymax", type=int, default=64)
    p.add_argument("--out", default="grundy_table.csv", help="CSV output path")
    p.add_argument("--no-figures", dest="figures", action="store_false",
                   help="skip the PNG renderings")

    p = sub.add_parser("play", help="interactive session against the engine")
    add_xy(p)
    p.add_argument("--engine-first", action="store_true", help="the engine moves first")
    p.add_argument("--hints", action="store_true", help="show Grundy value and winning moves")
    p.add_argument("--transcript", help="write the session transcript to this JSON file")

    return parser


def _emit(args, inputs: dict, results: dict, report=None, text: str = "") -> None:
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "results": results,
            "report": report,
        }
        print(json.dumps(envelope, indent=2))
    elif text:
        print(text)


def _cmd_grundy(args) -> int:
    p = Position(args.x, args.y)
    oracle = engine.grundy(p)
    closed = families.grundy_closed(p)
    _emit(args, {"x": args.x, "y": args.y}, {"oracle": oracle, "closed": closed},
          text=f"oracle={oracle} closed={closed}")
    return 0


def _cmd_classify(args) -> int:
    c = families.classify((args.x, args.y))
    results = {"s": c.s, "family": c.family.value}
    results["n" if c.family is families.Family.N else "k"] = c.param1
    results["m" if c.family is families.Family.N else "j"] = c.param2
    _emit(args, {"x": args.x, "y": args.y}, results, text=str(c))
    return 0


def _cmd_moves(args) -> int:
    p = Position(args.x, args.y)
    moves = game.legal_moves(p)
    lines = [play.describe_position(game.as_position(p))]
    lines.extend(str(m) for m in moves)
    if not moves:
        lines.append("no legal moves")
    _emit(
        args,
        {"x": args.x, "y": args.y},
        {
            "w": game.total_weight(p),
            "bound": game.removal_bound(p),
            "moves": [str(m) for m in moves],
        },
        text="\n".join(lines),
    )
    return 0


def _cmd_best_move(args) -> int:
    p = Position(args.x, args.y)
    m = engine.best_move(p)
    winning = engine.grundy(game.apply_move(p, m)) == 0
    _emit(
        args,
        {"x": args.x, "y": args.y},
        {"move": str(m), "pile": int(m.pile), "count": m.count, "winning": winning},
        text=f"move={m} winning={str(winning).lower()}",
    )
    return 0


def _cmd_sets(args) -> int:
    positions = families.enumerate_class(args.s, args.xmax, args.ymax)
    _emit(
        args,
        {"s": args.s, "xmax": args.xmax, "ymax": args.ymax},
        {"count": len(positions), "positions": [list(p) for p in positions]},
        text="\n".join(f"{p.x} {p.y}" for p in positions),
    )
    return 0


def _cmd_josephus(args) -> int:
    order = josephus.elimination_order(args.v)
    _emit(args, {"v": args.v}, {"order": list(order.e), "survivor": order.survivor},
          text=" ".join(str(e) for e in order.e))
    return 0


def _cmd_fs(args) -> int:
    sim = josephus.f_s_simulated(args.s, args.v)
    closed = josephus.f_s_closed(args.s, args.v)
    rec = josephus.f_s_recursive(args.s, args.v)
    _emit(args, {"s": args.s, "v": args.v},
          {"simulated": sim, "closed": closed, "recursive": rec},
          text=f"simulated={sim} closed={closed} recursive={rec}")
    return 0


def _cmd_verify(args) -> int:
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    bounds = {"xmax": args.xmax, "ymax": args.ymax, "vmax": args.vmax, "smax": args.smax}
    reports = [verify.SUITES[name](bounds) for name in names]
    ok = all(r.passed for r in reports)
    _emit(
        args,
        {"suite": args.suite, "xmax": args.xmax, "ymax": args.ymax,
         "vmax": args.vmax, "smax": args.smax},
        {"passed": ok},
        report=[r.to_dict() for r in reports],
        text="\n".join(r.format_text() for r in reports),
    )
    return 0 if ok else 1


def _cmd_export(args) -> int:
    info = export_mod.export_table(args.xmax, args.ymax, args.out, figures=args.figures)
    lines = [f"wrote {info['csv']} ({info['rows']} rows)"]
    lines.extend(f"wrote {path}" for path in info["figures"])
    _emit(args, {"xmax": args.xmax, "ymax": args.ymax, "out": args.out},
          info, text="\n".join(lines))
    return 0


def _cmd_play(args) -> int:
    config = play.PlayConfig(
        start=Position(args.x, args.y),
        engine_first=args.engine_first,
        hints=args.hints,
    )
    transcript = play.play_session(config, sys.stdin, sys.stdout)
    if args.transcript:
        transcript.write_json(args.transcript)
        print(f"transcript written to {args.transcript}")
    return 0


_HANDLERS = {
    "grundy": _cmd_grundy,
    "classify": _cmd_classify,
    "moves": _cmd_moves,
    "best-move": _cmd_best_move,
    "sets": _cmd_sets,
    "josephus": _cmd_josephus,
    "fs": _cmd_fs,
    "verify": _cmd_verify,
    "export": _cmd_export,
    "play": _cmd_play,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (DomainError, game.IllegalMove, game.NoMove) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GameError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
