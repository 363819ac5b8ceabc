"""
Tests for the asymptotic predictions and the constants behind them.
"""

import math

import pytest

from dlogmap.asymptotics import (
    BINARY_MAX_TAIL_OFFSET,
    EULER_GAMMA,
    HARMONIC_EXACT_LIMIT,
    MAX_TAIL_COEFFICIENT,
    ConvergenceError,
    binary_graph_count_asymptotic,
    golomb_dickman,
    harmonic_number,
    max_cycle_coefficient,
    predict,
    predict_binary,
    predict_permutation,
    predict_random,
)
from dlogmap.series import binary_graph_series


def test_golomb_dickman():
    assert abs(golomb_dickman(1e-7) - 0.62432965) <= 1e-7
    assert abs(golomb_dickman() - 0.6243299885435508) <= 1e-9


def test_golomb_dickman_tolerance_halving():
    coarse = golomb_dickman(1e-8)
    fine = golomb_dickman(5e-9)
    assert abs(coarse - fine) <= 1e-8


def test_golomb_dickman_rejects_tiny_tolerance():
    with pytest.raises(ValueError):
        golomb_dickman(1e-11)


def test_convergence_error_is_runtime_error():
    assert issubclass(ConvergenceError, RuntimeError)


def test_derived_constants():
    assert abs(max_cycle_coefficient() - 0.78248) <= 5e-5
    assert abs(MAX_TAIL_COEFFICIENT - 1.73746) <= 5e-5
    assert abs(BINARY_MAX_TAIL_OFFSET - (-1.61371)) <= 5e-5
    assert abs(EULER_GAMMA - 0.57721566) <= 1e-8


def test_harmonic_number():
    assert harmonic_number(1) == 1
    assert harmonic_number(2) == 1.5
    assert abs(harmonic_number(10) - 7381 / 2520) <= 1e-14
    assert abs(harmonic_number(100042) - 12.0906) <= 5e-5
    with pytest.raises(ValueError):
        harmonic_number(0)


def test_harmonic_number_crossover():
    n = HARMONIC_EXACT_LIMIT
    direct = harmonic_number(n)
    expanded = harmonic_number(n + 1)
    assert abs(expanded - direct - 1 / (n + 1)) <= 1e-12


def test_predict_random():
    prediction = predict_random(100042)
    assert abs(prediction.components - 6.3919) <= 5e-4
    assert abs(prediction.avg_tail - 198.21) <= 5e-3
    assert prediction.avg_cycle == prediction.avg_tail
    assert abs(predict_random(106260).image_nodes - 67169.5) <= 1.0
    assert abs(prediction.tail_nodes + prediction.cyclic_nodes - 100042) <= 1e-9


def test_predict_permutation():
    prediction = predict_permutation(100042)
    assert abs(prediction.components - 12.0906) <= 5e-5
    assert prediction.avg_cycle == 50021.5
    assert abs(prediction.max_cycle - 62459.1) <= 0.2
    assert prediction.avg_tail == 0 and prediction.max_tail == 0
    assert prediction.image_nodes == 100042


def test_predict_binary():
    prediction = predict_binary(100042)
    assert abs(prediction.cyclic_nodes - 395.42) <= 5e-3
    assert abs(prediction.max_tail - 547.92) <= 0.02
    assert prediction.image_nodes == 50021
    assert prediction.components == predict_random(100042).components


@pytest.mark.parametrize("n", [2, 10, 2026, 100042])
def test_binary_terminal_and_image_split_n(n):
    prediction = predict_binary(n)
    assert prediction.terminal_nodes == prediction.image_nodes == n / 2
    assert prediction.terminal_nodes + prediction.image_nodes == n


@pytest.mark.parametrize("n", [0, 1, 3, 100043])
def test_predict_binary_rejects_odd_or_tiny(n):
    with pytest.raises(ValueError):
        predict_binary(n)


def test_predict_dispatch():
    assert predict("binary", 100) == predict_binary(100)
    assert predict("permutation", 10).model == "permutation"
    with pytest.raises(ValueError):
        predict("uniform", 10)
    with pytest.raises(ValueError):
        predict_random(0)


def test_prediction_as_dict():
    data = predict_random(50).as_dict()
    assert data["model"] == "random"
    assert data["n"] == 50
    assert data["components"] == predict_random(50).get("components")


def test_binary_count_asymptotic_refinement():
    n = 40
    exact = float(binary_graph_series(n)[n])
    first = binary_graph_count_asymptotic(n)
    refined = binary_graph_count_asymptotic(n, refined=True)
    assert abs(refined - exact) < abs(first - exact)
    assert abs(refined - exact) / exact < 1e-3
    with pytest.raises(ValueError):
        binary_graph_count_asymptotic(41)


def test_max_tail_offset_relation():
    # binary max-tail prediction is the random one shifted by the constant offset
    n = 1000
    shift = predict_binary(n).max_tail - predict_random(n).max_tail
    assert math.isclose(shift, BINARY_MAX_TAIL_OFFSET)
