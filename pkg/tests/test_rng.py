import numpy as np

from ordeval import _rng

from reference import ref_stream


def test_stream_matches_pure_python_reference():
    for seed in (0, 1, 42, 2**63, 0xFFFFFFFFFFFFFFFF, 123456789):
        got = _rng.stream(seed, 16)
        want = ref_stream(seed, 16)
        assert [int(v) for v in got] == want


def test_stream_slices_are_consistent():
    whole = _rng.stream(7, 20)
    tail = _rng.stream(7, 12, start=8)
    assert np.array_equal(whole[8:], tail)


def test_substream_column_matches_stream():
    seeds = _rng.substream_seeds(99, 5)
    for col in (0, 1, 4):
        got = _rng.substream_column(seeds, col)
        want = [int(_rng.stream(int(s), 1, start=col)[0]) for s in seeds]
        assert [int(v) for v in got] == want


def test_uniform01_range():
    u = _rng.uniform01(_rng.stream(3, 10000))
    assert np.all(u >= 0.0) and np.all(u < 1.0)
    assert 0.45 < u.mean() < 0.55


def test_integers_mod_range():
    v = _rng.integers_mod(_rng.stream(5, 10000), 7)
    assert v.min() >= 0 and v.max() <= 6
    assert len(np.unique(v)) == 7


def test_resample_indices_deterministic_and_in_range():
    a = _rng.resample_indices(42, 3, 500)
    b = _rng.resample_indices(42, 3, 500)
    assert np.array_equal(a, b)
    assert a.min() >= 0 and a.max() < 500
    c = _rng.resample_indices(42, 4, 500)
    assert not np.array_equal(a, c)


def test_permutation_is_permutation():
    for seed in (1, 2, 3, 99):
        p = _rng.permutation(seed, 8)
        assert sorted(p.tolist()) == list(range(8))
    assert np.array_equal(_rng.permutation(5, 6), _rng.permutation(5, 6))
