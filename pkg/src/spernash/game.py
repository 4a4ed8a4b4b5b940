"""Finite strategic games, expected payoffs and the improvement map."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .exceptions import InvalidArgumentError
from .validation import check_profile


class Game:
    """Finite ``n``-player game in normal form.

    Parameters
    ----------
    payoffs : array-like of shape (m_1, ..., m_n, n)
        ``payoffs[s_1, ..., s_n, i]`` is player ``i``'s payoff at the pure
        profile ``(s_1, ..., s_n)``.
    strategy_names : list of list of str, optional
        Names for output; defaults to ``s0, s1, ...`` per player.
    """

    def __init__(self, payoffs, strategy_names: Sequence[Sequence[str]] | None = None):
        payoffs = np.asarray(payoffs, dtype=float)
        n = payoffs.ndim - 1
        if n < 2 or payoffs.shape[-1] != n:
            raise InvalidArgumentError(
                f"payoff tensor of shape {payoffs.shape} is not (m_1, ..., m_n, n) with n >= 2")
        if min(payoffs.shape[:-1]) < 2:
            raise InvalidArgumentError("every player needs at least two strategies")
        if not np.all(np.isfinite(payoffs)):
            raise InvalidArgumentError("payoffs must be finite")
        self.payoffs = payoffs
        self.payoffs.setflags(write=False)
        # player i's payoffs with axis i first, so opponents contract from the back
        self._own_first = [np.moveaxis(payoffs[..., i], i, 0) for i in range(n)]
        if strategy_names is None:
            strategy_names = [[f"s{j}" for j in range(m)] for m in self.strategy_counts]
        names = [list(map(str, row)) for row in strategy_names]
        if [len(row) for row in names] != list(self.strategy_counts):
            raise InvalidArgumentError("strategy names do not match the payoff shape")
        self.strategy_names = names

    @classmethod
    def from_bimatrix(cls, a, b, strategy_names=None) -> "Game":
        """Two-player game from row and column payoff matrices."""
        return cls(np.stack([np.asarray(a, float), np.asarray(b, float)], axis=-1),
                   strategy_names)

    @property
    def n_players(self) -> int:
        return self.payoffs.ndim - 1

    @property
    def strategy_counts(self) -> tuple[int, ...]:
        return self.payoffs.shape[:-1]

    @property
    def dim(self) -> int:
        """Dimension of the profile space, ``sum(m_i - 1)``."""
        return sum(m - 1 for m in self.strategy_counts)

    def uniform_profile(self) -> list[np.ndarray]:
        return [np.full(m, 1.0 / m) for m in self.strategy_counts]

    def pure_profile(self, strategies: Sequence[int]) -> list[np.ndarray]:
        rows = []
        for m, j in zip(self.strategy_counts, strategies):
            row = np.zeros(m)
            row[j] = 1.0
            rows.append(row)
        return rows

    def __repr__(self):
        return f"Game(strategy_counts={self.strategy_counts})"


def _player(g: Game, i) -> int:
    if isinstance(i, bool) or not 0 <= i < g.n_players:
        raise InvalidArgumentError(f"player index {i!r} out of range 0..{g.n_players - 1}")
    return int(i)


def deviation_payoffs(g: Game, p, i: int) -> np.ndarray:
    """Payoff to player ``i`` of each pure strategy against ``p_{-i}``."""
    i = _player(g, i)
    rows = check_profile(p, g.strategy_counts)
    return _deviation_payoffs(g, rows, i)


def _deviation_payoffs(g: Game, rows, i: int) -> np.ndarray:
    t = g._own_first[i]
    for ax in range(g.n_players - 1, -1, -1):
        if ax != i:
            t = t @ rows[ax]
    return t


def pure_deviation_payoff(g: Game, p, i: int, j: int) -> float:
    dev = deviation_payoffs(g, p, i)
    if isinstance(j, bool) or not 0 <= j < dev.size:
        raise InvalidArgumentError(f"strategy index {j!r} out of range for player {i}")
    return float(dev[j])


def expected_payoff(g: Game, p, i: int) -> float:
    """Multilinear expectation of player ``i``'s payoff under ``p``."""
    i = _player(g, i)
    rows = check_profile(p, g.strategy_counts)
    return float(rows[i] @ _deviation_payoffs(g, rows, i))


def _gains(g: Game, rows) -> list[np.ndarray]:
    out = []
    for i in range(g.n_players):
        dev = _deviation_payoffs(g, rows, i)
        out.append(np.maximum(dev - rows[i] @ dev, 0.0))
    return out


def psi(g: Game, p) -> list[np.ndarray]:
    """Nash's improvement map.

    Each strategy's weight grows by its positive deviation gain and the
    row is renormalised; the denominator is at least 1.
    """
    return _psi(g, check_profile(p, g.strategy_counts))


def _psi(g: Game, rows) -> list[np.ndarray]:
    out = []
    for row, gain in zip(rows, _gains(g, rows)):
        v = row + gain
        out.append(v / v.sum())
    return out


def regret(g: Game, p) -> np.ndarray:
    """Largest positive gain from a unilateral pure deviation, per player."""
    rows = check_profile(p, g.strategy_counts)
    return np.array([gain.max() for gain in _gains(g, rows)])


def psi_residual(g: Game, p) -> float:
    rows = check_profile(p, g.strategy_counts)
    return max(float(np.max(np.abs(a - b))) for a, b in zip(psi(g, rows), rows))
