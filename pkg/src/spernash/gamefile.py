"""JSON game files.

A file holds ``players`` (int), ``strategies`` (one list of names per
player) and ``payoffs``: a nested array indexed player-1-outermost by pure
strategies, each leaf a list with one payoff per player::

    {"players": 2,
     "strategies": [["X", "Y"], ["X", "Y"]],
     "payoffs": [[[2, 2], [0, 3]],
                 [[3, 0], [1, 1]]]}
"""

from __future__ import annotations

import json
import math
import numbers
from pathlib import Path

import numpy as np

from .exceptions import GameFileError, NonFinitePayoffError, ShapeMismatchError
from .game import Game


def _fmt(path) -> str:
    return "payoffs" + "".join(f"[{i}]" for i in path)


def _check_payoffs(node, counts, n, path=()):
    depth = len(path)
    if depth < len(counts):
        if not isinstance(node, list) or len(node) != counts[depth]:
            got = len(node) if isinstance(node, list) else type(node).__name__
            raise ShapeMismatchError(
                f"{_fmt(path)}: expected {counts[depth]} entries, got {got}")
        for j, child in enumerate(node):
            _check_payoffs(child, counts, n, path + (j,))
        return
    if not isinstance(node, list) or len(node) != n:
        got = len(node) if isinstance(node, list) else type(node).__name__
        raise ShapeMismatchError(f"{_fmt(path)}: expected {n} payoffs, got {got}")
    for i, value in enumerate(node):
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise GameFileError(f"{_fmt(path + (i,))}: payoff {value!r} is not a number")
        if not math.isfinite(value):
            raise NonFinitePayoffError(f"{_fmt(path + (i,))}: payoff {value!r} is not finite")


def game_from_dict(doc) -> Game:
    if not isinstance(doc, dict):
        raise GameFileError("game file must hold a JSON object")
    for key in ("players", "strategies", "payoffs"):
        if key not in doc:
            raise GameFileError(f"missing field {key!r}")
    n = doc["players"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise GameFileError(f"players: expected an integer >= 2, got {n!r}")
    strategies = doc["strategies"]
    if not isinstance(strategies, list) or len(strategies) != n:
        raise ShapeMismatchError(f"strategies: expected {n} lists of names")
    for i, names in enumerate(strategies):
        if not isinstance(names, list) or len(names) < 2:
            raise ShapeMismatchError(f"strategies[{i}]: expected at least two names")
        if not all(isinstance(s, str) for s in names):
            raise GameFileError(f"strategies[{i}]: names must be strings")
    counts = [len(names) for names in strategies]
    _check_payoffs(doc["payoffs"], counts, n)
    return Game(np.asarray(doc["payoffs"], dtype=float), strategies)


def loads_game(text: str, source: str = "<string>") -> Game:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return game_from_dict(doc)
    except GameFileError as exc:
        raise type(exc)(f"{source}: {exc}") from None


def parse_game(path) -> Game:
    """Read a game file; errors carry the file name and the offending field."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GameFileError(f"{path}: {exc.strerror or exc}") from None
    return loads_game(text, str(path))


def game_to_dict(g: Game) -> dict:
    return {
        "players": g.n_players,
        "strategies": g.strategy_names,
        "payoffs": g.payoffs.tolist(),
    }
