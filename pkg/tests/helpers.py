"""Shared test helpers."""

import numpy as np

from ordeval import EvalDataset, validate_dataset


def make_dataset(probs, labels, ids=None, k=None, validate=True):
    probs = np.asarray(probs, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    if k is None:
        k = probs.shape[1]
    if ids is None:
        ids = tuple(f"x{i}" for i in range(len(labels)))
    ds = EvalDataset(k, tuple(ids), labels, probs)
    return validate_dataset(ds) if validate else ds


def random_prob_matrix(rng, n, k):
    """Random strictly-positive probability rows (Dirichlet-like)."""
    raw = -np.log(rng.random((n, k)) + 1e-300)
    return raw / raw.sum(axis=1, keepdims=True)
