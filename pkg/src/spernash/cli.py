"""Command-line front end.

Subcommands::

    spernash solve --game pd.json --epsilon 1e-4
    spernash sperner --dim 2 --mesh 4 --trials 50 --seed 1
    spernash fixedpoint --map contraction --dim 2 --epsilon 1e-6

Exit status is 0 on success, 1 when the tolerance was not reached and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings

import numpy as np

from . import __version__
from .exceptions import GameFileError, InvalidArgumentError, ToleranceNotReachedWarning
from .fixed_point import SEARCH_METHODS, approx_fixed_point, cauchy_diagnostic
from .gamefile import parse_game
from .solver import SOLVED, solve
from .sperner import enumerate_fully_labeled, path_follow, random_admissible_labeling

EXIT_OK, EXIT_NOT_REACHED, EXIT_USAGE = 0, 1, 2


def _num(x) -> str:
    return f"{float(x):.12g}"


def _maps(d: int):
    center = np.full(d + 1, 1.0 / (d + 1))
    return {
        "contraction": lambda p: (p + center) / 2,
        "identity": lambda p: p,
        # cyclic shift: the barycenter is the only fixed point and nothing contracts
        "rotation": lambda p: np.roll(p, 1),
    }


def _threads(err) -> int | None:
    raw = os.environ.get("NASH_THREADS")
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        err.write(f"spernash: warning: ignoring NASH_THREADS={raw!r}, expected a positive integer\n")
        return None
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float, default=1e-4)
    common.add_argument("--mesh", type=int, default=4)
    common.add_argument("--max-refine", type=int, default=20)
    common.add_argument("--search", choices=SEARCH_METHODS, default="auto")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="spernash", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="approximate Nash equilibrium of a game file")
    p.add_argument("--game", required=True, help="JSON game file")

    p = sub.add_parser("sperner", parents=[common], help="parity of fully labeled cells")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--trials", type=int, default=10)

    p = sub.add_parser("fixedpoint", parents=[common], help="fixed point of a built-in map")
    p.add_argument("--map", choices=("contraction", "identity", "rotation"), default="contraction")
    p.add_argument("--dim", type=int, default=2)
    return parser


def _emit(args, payload: dict, lines: list[str], out) -> None:
    if args.output == "json":
        # full precision so the numbers parse back bit for bit
        json.dump(payload, out)
        out.write("\n")
    else:
        out.write("\n".join(lines) + "\n")


def _trace_json(trace):
    return [{"mesh": m, "point": p.tolist(), "residual": r} for m, p, r in trace]


def cmd_solve(args, out) -> int:
    game = parse_game(args.game)
    res = solve(game, args.epsilon, args.mesh, args.max_refine, search=args.search,
                n_jobs=args.threads)
    payload = {
        "status": res.status,
        "strategies": game.strategy_names,
        "profile": [row.tolist() for row in res.profile],
        "regrets": res.regrets.tolist(),
        "psi_residual": res.psi_residual,
        "mesh": res.mesh,
        "refinements_used": res.refinements_used,
        "trace": _trace_json(res.trace),
        "cauchy": res.cauchy,
    }
    lines = [f"status: {res.status}"]
    for i, (names, row) in enumerate(zip(game.strategy_names, res.profile)):
        lines.append(f"player {i + 1}: " + " / ".join(f"{s}:{_num(x)}" for s, x in zip(names, row)))
    lines.append("regrets: " + " ".join(_num(r) for r in res.regrets))
    lines.append(f"psi residual: {_num(res.psi_residual)}")
    lines.append(f"mesh: {res.mesh} (refinements: {res.refinements_used})")
    _emit(args, payload, lines, out)
    return EXIT_OK if res.status == SOLVED else EXIT_NOT_REACHED


def cmd_sperner(args, out) -> int:
    if args.trials < 1:
        raise InvalidArgumentError("--trials must be positive")
    counts, lines, walked = [], [], True
    for t in range(args.trials):
        lt = random_admissible_labeling(args.dim, args.mesh, args.seed + t)
        full = enumerate_fully_labeled(lt)
        counts.append(len(full))
        if args.search == "path":
            walked &= path_follow(lt) in full
        lines.append(f"count={len(full)}")
    all_odd = all(c % 2 == 1 for c in counts)
    lines.append(f"all odd: {str(all_odd).lower()}")
    payload = {"dim": args.dim, "mesh": args.mesh, "seed": args.seed,
               "counts": counts, "all_odd": all_odd}
    if args.search == "path":
        lines.append(f"path agrees: {str(walked).lower()}")
        payload["path_agrees"] = walked
    _emit(args, payload, lines, out)
    return EXIT_OK if all_odd and walked else EXIT_NOT_REACHED


def cmd_fixedpoint(args, out) -> int:
    if args.dim < 1:
        raise InvalidArgumentError("--dim must be at least 1")
    f = _maps(args.dim)[args.map]
    res = approx_fixed_point(f, args.dim, args.epsilon, args.mesh, args.max_refine,
                             search=args.search, n_jobs=args.threads, warn=False)
    cauchy = cauchy_diagnostic(res.candidate_trace) if len(res.candidate_trace) > 1 else []
    payload = {
        "status": res.status,
        "point": res.point.tolist(),
        "residual": res.residual,
        "mesh": res.mesh,
        "refinements_used": res.refinements_used,
        "exact_hit": res.exact_hit,
        "trace": _trace_json(res.candidate_trace),
        "cauchy": cauchy,
    }
    lines = [
        f"status: {res.status}",
        "point: " + " ".join(_num(x) for x in res.point),
        f"residual: {_num(res.residual)}",
        f"mesh: {res.mesh} (refinements: {res.refinements_used})"
        + (" exact hit" if res.exact_hit else ""),
    ]
    if cauchy:
        lines.append("cauchy: " + " ".join(_num(c) for c in cauchy))
    _emit(args, payload, lines, out)
    return EXIT_OK if res.converged else EXIT_NOT_REACHED


COMMANDS = {"solve": cmd_solve, "sperner": cmd_sperner, "fixedpoint": cmd_fixedpoint}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=err, format="%(levelname)s %(name)s: %(message)s")
    args.threads = _threads(err)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ToleranceNotReachedWarning)
            code = COMMANDS[args.command](args, out)
    except (GameFileError, InvalidArgumentError) as exc:
        err.write(f"spernash: error: {exc}\n")
        return EXIT_USAGE
    if code == EXIT_NOT_REACHED:
        err.write("spernash: tolerance not reached; best candidate reported\n")
    return code


def main() -> None:
    sys.exit(run())
