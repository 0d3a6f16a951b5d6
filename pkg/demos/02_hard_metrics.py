"""Hard-prediction metrics: confusion counts, QWK, expected cost, ECE.

Builds small datasets by hand to show what each aggregate metric rewards
and how the cost-matrix choice changes the verdict.
"""

import numpy as np

from ordeval import CostMatrix, confusion, ece, expected_cost, metric_report, qwk
from ordeval.data import EvalDataset, validate_dataset


def dataset(probs, labels):
    probs = np.asarray(probs, dtype=float)
    ids = tuple(f"d{i}" for i in range(len(labels)))
    return validate_dataset(
        EvalDataset(probs.shape[1], ids, np.asarray(labels), probs)
    )


# --- 1. Two graders of the same 3-class problem ---------------------------
#
# Grader A makes only adjacent mistakes; grader B makes the same *number*
# of mistakes but jumps across the whole scale. Accuracy ties; the
# distance-aware metrics do not.
labels = [0, 0, 0, 1, 1, 1, 2, 2, 2]
adjacent = [0, 0, 1, 1, 1, 2, 2, 2, 2]   # wrong by one step
far = [0, 0, 2, 1, 1, 1, 0, 2, 2]        # wrong by two steps

def one_hots(preds, k=3):
    p = np.zeros((len(preds), k))
    p[np.arange(len(preds)), preds] = 1.0
    return p

for name, preds in (("adjacent-error grader", adjacent), ("far-error grader", far)):
    ds = dataset(one_hots(preds), labels)
    cm = confusion(ds)
    print(f"\n{name}")
    print("confusion (rows = truth):")
    print(cm)
    print(f"qwk = {qwk(cm):.4f}")
    for label_, cost in (
        ("linear cost", CostMatrix.linear(3)),
        ("quadratic cost", CostMatrix.quadratic(3)),
        ("0/1 cost", CostMatrix.zero_one(3)),
    ):
        print(f"expected {label_}: {expected_cost(cm, cost):.4f}")

# --- 2. Calibration: confidence has to be earned ---------------------------
#
# A predictor that always says "60% class 0" on a population that is class 0
# sixty percent of the time is useless but perfectly calibrated: ECE 0. The
# same predictor claiming 99% while being right 70% of the time is
# overconfident by 0.29.
calibrated = dataset([[0.6, 0.4]] * 10, [0] * 6 + [1] * 4)
overconfident = dataset([[0.99, 0.01]] * 10, [0] * 7 + [1] * 3)
print(f"\ncalibrated constant predictor:   ece = {ece(calibrated):.4f}")
print(f"overconfident constant predictor: ece = {ece(overconfident):.4f}")

# --- 3. The one-call summary ------------------------------------------------
report = metric_report(dataset(one_hots(adjacent), labels))
print(
    f"\nmetric_report: accuracy={report.accuracy:.3f} qwk={report.qwk:.3f} "
    f"ec={report.expected_cost:.3f} ece={report.ece:.3f} n={report.n}"
)
