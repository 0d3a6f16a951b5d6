"""Per-sample scoring rules for probabilistic predictions.

All four rules are negatively oriented (0 = perfect, larger = worse) and act
on a single (probability vector, true class) pair:

- ``brier``: squared l2 distance between probabilities and the one-hot label.
- ``log_score``: negative log of the probability on the true class.
- ``rps``: mean squared difference between the cumulative distributions of
  prediction and label over the first K-1 classes; sensitive to class order.
- ``sa_rps``: squared-absolute variant of ``rps`` whose penalty grows
  quadratically with distance and which drops rps's preference for
  symmetric predictions.

Rule identifiers used everywhere (library, CLI, file outputs) are the
lowercase strings "brier", "log", "rps", "sa_rps".
"""

from dataclasses import dataclass

import numpy as np

from .data import EvalDataset, _cumulative_matrix, _label_cumulative_matrix
from .errors import UnknownRule

# Probability floor for the logarithmic score. File-ingested predictions can
# carry exact zeros; an infinite score would poison sorting and averaging.
LOG_EPS = 1e-12


@dataclass(frozen=True)
class ScoredSample:
    """A sample's score under one rule, with its label and hard prediction."""

    id: str
    label: int
    argmax: int
    score: float


def _brier_matrix(probs: np.ndarray, labels: np.ndarray) -> np.ndarray:
    n, k = probs.shape
    onehot = np.zeros((n, k))
    onehot[np.arange(n), labels] = 1.0
    return ((probs - onehot) ** 2).sum(axis=1)


def _log_matrix(probs: np.ndarray, labels: np.ndarray) -> np.ndarray:
    p_true = probs[np.arange(probs.shape[0]), labels]
    return 0.0 - np.log(np.maximum(p_true, LOG_EPS))  # 0.0- avoids -0.0 at p=1


def _cumulative_diffs(probs: np.ndarray, labels: np.ndarray) -> np.ndarray:
    k = probs.shape[1]
    cp = _cumulative_matrix(probs)
    cy = _label_cumulative_matrix(labels, k)
    # the K-th cumulative entries are both 1; only the first K-1 matter
    return cp[:, :-1] - cy[:, :-1]


def _rps_matrix(probs: np.ndarray, labels: np.ndarray) -> np.ndarray:
    d = _cumulative_diffs(probs, labels)
    return (d**2).sum(axis=1) / (probs.shape[1] - 1)


def _sa_rps_matrix(probs: np.ndarray, labels: np.ndarray) -> np.ndarray:
    d = _cumulative_diffs(probs, labels)
    return (np.abs(d).sum(axis=1) / (probs.shape[1] - 1)) ** 2


RULES = {
    "brier": _brier_matrix,
    "log": _log_matrix,
    "rps": _rps_matrix,
    "sa_rps": _sa_rps_matrix,
}


def _rule_fn(rule: str):
    try:
        return RULES[rule]
    except (KeyError, TypeError):
        raise UnknownRule(
            f"unknown rule {rule!r}; expected one of {', '.join(RULES)}"
        ) from None


def _as_pair(probs, label):
    p = np.asarray(probs, dtype=np.float64)[None, :]
    return p, np.array([label], dtype=np.int64)


def brier(probs, label: int) -> float:
    """Sum of squared differences between probabilities and the one-hot label.

    Range [0, 2]; insensitive to class order.
    """
    p, y = _as_pair(probs, label)
    return float(_brier_matrix(p, y)[0])


def log_score(probs, label: int) -> float:
    """-log of the probability assigned to the true class, floored at LOG_EPS.

    Depends only on ``probs[label]`` (a local rule).
    """
    p, y = _as_pair(probs, label)
    return float(_log_matrix(p, y)[0])


def rps(probs, label: int) -> float:
    """Ranked probability score.

    Mean over the first K-1 positions of the squared difference between the
    cumulative distributions of prediction and one-hot label. Range [0, 1];
    mass far from the true class costs more than mass nearby. Equals half
    the Brier score when K = 2.
    """
    p, y = _as_pair(probs, label)
    return float(_rps_matrix(p, y)[0])


def sa_rps(probs, label: int, bounded: bool = True) -> float:
    """Squared-absolute ranked probability score.

    The mean absolute cumulative difference, squared:

        ( sum_i |P_i - Y_i| / (K - 1) )^2

    which stays in [0, 1] and penalizes a one-hot prediction at distance d
    by exactly (d / (K-1))^2 -- quadratic in distance, with no preference
    for symmetric probability placement.

    ``bounded=False`` moves the 1/(K-1) normalization outside the square,
    giving range [0, K-1] instead; kept for comparison.
    """
    p, y = _as_pair(probs, label)
    if bounded:
        return float(_sa_rps_matrix(p, y)[0])
    d = _cumulative_diffs(p, y)
    return float(np.abs(d).sum() ** 2 / (p.shape[1] - 1))


def score_dataset(ds: EvalDataset, rule: str) -> list[ScoredSample]:
    """Score every sample under ``rule``, preserving dataset order."""
    scores = _rule_fn(rule)(ds.probs, ds.labels)
    argmax = np.argmax(ds.probs, axis=1)
    return [
        ScoredSample(ds.ids[i], int(ds.labels[i]), int(argmax[i]), float(scores[i]))
        for i in range(len(ds))
    ]
