"""Why ordinal problems need distance-sensitive scoring rules.

A walkthrough of the four per-sample rules on a 3-class grading problem
(think none / mild / severe). Lower is always better.
"""

import numpy as np

from ordeval import brier, log_score, rps, sa_rps

RULES = [("brier", brier), ("log", log_score), ("rps", rps), ("sa_rps", sa_rps)]


def show(title, predictions, label):
    print(f"\n{title}  (true class = {label})")
    print(f"{'prediction':<24}" + "".join(f"{name:>10}" for name, _ in RULES))
    for p in predictions:
        row = f"{str(p):<24}"
        for _, fn in RULES:
            row += f"{fn(p, label):>10.4f}"
        print(row)


# --- 1. Brier and log cannot see *where* the probability mass went --------
#
# Both predictions below put 25% on the true class and 75% elsewhere. For a
# grading problem they are not equally wrong: the second one bets on the
# farthest class, which an argmax would turn into the worst possible
# decision. Brier and log give them identical penalties; the cumulative
# rules do not.
show(
    "Same mass on the truth, different placement",
    [[0.25, 0.75, 0.0], [0.25, 0.0, 0.75]],
    label=0,
)

# --- 2. Penalty growth with distance --------------------------------------
#
# One-hot predictions at increasing distance from the true class. rps grows
# linearly with distance, sa_rps quadratically (matching how quadratic-
# weighted kappa and quadratic cost matrices treat far mistakes). Brier and
# log saturate immediately: every wrong one-hot looks the same to them.
show(
    "Confidently wrong at distance 0, 1, 2",
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    label=0,
)

# --- 3. rps quietly prefers symmetric predictions -------------------------
#
# With the middle class true, the first prediction spreads mass evenly
# around the truth; the second is more confident on the truth but lopsided.
# rps prefers the symmetric one (0.09 < 0.1025) even though the asymmetric
# prediction assigns more probability to the correct class. sa_rps, which
# accumulates absolute cumulative differences before squaring, reverses
# that preference (0.0625 < 0.09).
show(
    "Symmetric spread vs confident-but-lopsided",
    [[0.30, 0.40, 0.30], [0.45, 0.50, 0.05]],
    label=1,
)

# --- 4. A quick properness check -------------------------------------------
#
# A proper rule cannot be gamed: if the true class is drawn from q, the
# expected score is minimized by reporting q itself. Scan a coarse simplex
# grid and confirm hedging or exaggerating never helps.
q = np.array([0.5, 0.3, 0.2])
grid = np.array(
    [[a, b, 20 - a - b] for a in range(21) for b in range(21 - a)]
) / 20.0
for name, fn in (("brier", brier), ("rps", rps)):
    expected = [sum(q[y] * fn(p, y) for y in range(3)) for p in grid]
    best = grid[int(np.argmin(expected))]
    print(f"\nexpected {name} under q={q.tolist()} is minimized at p={best.tolist()}")
