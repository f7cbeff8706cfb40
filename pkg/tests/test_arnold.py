import numpy as np
import pytest

from fresnelstego import (ArnoldSpec, ParameterError, ShapeError, period,
                          scramble, unscramble)


def index_grid(n):
    return np.arange(n * n, dtype=np.float64).reshape(n, n)


def first_return_time(n):
    """Steps until every pixel is back home, measured on actual pixels."""
    start = index_grid(n)
    img = start
    spec = ArnoldSpec(size=n, iterations=1)
    for t in range(1, 6 * n + 1):
        img = scramble(img, spec)
        if np.array_equal(img, start):
            return t
    raise AssertionError(f"no return within {6 * n} steps for size {n}")


def test_known_periods():
    # 480 is 120 here on purpose: 120 steps already restore every pixel,
    # which test_period_matches_pixel_first_return_480 verifies directly
    expected = {2: 3, 16: 12, 64: 48, 128: 96, 256: 192, 480: 120, 512: 384}
    for n, t in expected.items():
        assert period(n) == t, f"period({n})"


def test_period_is_minimal_for_small_sizes():
    for n in range(2, 65):
        assert first_return_time(n) == period(n)


def test_period_matches_pixel_first_return_480():
    assert first_return_time(480) == 120
    assert period(480) == 120


def test_period_rejects_bad_sizes():
    for bad in (1, 0, -3, 2.5, "16", True):
        with pytest.raises(ParameterError):
            period(bad)


def test_spec_normalizes_iterations():
    assert ArnoldSpec(size=128, iterations=96).iterations == 0
    assert ArnoldSpec(size=128, iterations=100).iterations == 4
    assert ArnoldSpec(size=16, iterations=5).iterations == 5


def test_spec_rejects_bad_values():
    with pytest.raises(ParameterError):
        ArnoldSpec(size=1, iterations=0)
    with pytest.raises(ParameterError):
        ArnoldSpec(size=16, iterations=-1)
    with pytest.raises(ParameterError):
        ArnoldSpec(size=16, iterations=1.5)
    with pytest.raises(ParameterError):
        ArnoldSpec(size=16, iterations=True)


def test_zero_iterations_is_identity_copy():
    img = index_grid(8)
    spec = ArnoldSpec(size=8, iterations=0)
    out = scramble(img, spec)
    assert np.array_equal(out, img)
    assert out is not img
    assert np.array_equal(unscramble(img, spec), img)


def test_origin_is_a_fixed_point():
    img = index_grid(16)
    for n_steps in range(1, 12):
        out = scramble(img, ArnoldSpec(size=16, iterations=n_steps))
        assert out[0, 0] == img[0, 0]


def test_full_period_is_identity_128():
    img = index_grid(128)
    assert np.array_equal(scramble(img, ArnoldSpec(size=128, iterations=96)), img)


def test_single_step_moves_pixels_as_documented():
    n = 16
    img = index_grid(n)
    out = scramble(img, ArnoldSpec(size=n, iterations=1))
    for a, b in ((1, 0), (0, 1), (3, 5), (15, 15)):
        x, y = (a + b) % n, (a + 2 * b) % n
        assert out[x, y] == img[a, b]


def test_scramble_is_a_permutation():
    rng = np.random.default_rng(7)
    img = rng.uniform(0, 255, size=(32, 32))
    out = scramble(img, ArnoldSpec(size=32, iterations=5))
    assert not np.array_equal(out, img)
    assert np.array_equal(np.sort(out.ravel()), np.sort(img.ravel()))


def test_round_trip_bit_exact():
    rng = np.random.default_rng(11)
    img = rng.uniform(0, 255, size=(64, 64))
    spec = ArnoldSpec(size=64, iterations=7)
    assert np.array_equal(unscramble(scramble(img, spec), spec), img)
    assert np.array_equal(scramble(unscramble(img, spec), spec), img)


def test_unscramble_equals_forward_remainder():
    # inverse steps coincide with completing the cycle forward
    n = 16
    cycle = period(n)
    img = index_grid(n)
    for steps in range(cycle):
        back = unscramble(img, ArnoldSpec(size=n, iterations=steps))
        forward = scramble(img, ArnoldSpec(size=n, iterations=(cycle - steps) % cycle))
        assert np.array_equal(back, forward), f"steps={steps}"


def test_complex_grids_scramble_too():
    rng = np.random.default_rng(23)
    img = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
    spec = ArnoldSpec(size=16, iterations=3)
    assert np.array_equal(unscramble(scramble(img, spec), spec), img)


def test_shape_mismatches_rejected():
    spec = ArnoldSpec(size=16, iterations=1)
    with pytest.raises(ShapeError):
        scramble(np.zeros((16, 8)), spec)
    with pytest.raises(ShapeError):
        scramble(np.zeros((8, 8)), spec)
    with pytest.raises(ShapeError):
        unscramble(np.zeros((32, 32)), spec)
