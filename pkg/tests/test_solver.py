import math

import pytest

from hlag.core import Hypergraph
from hlag.errors import UnsupportedSizeError
from hlag.families import complete, k53minus2, matching, star, star_lambda
from hlag.solver import (
    SolverConfig,
    densify,
    evaluate,
    gradient,
    kkt_report,
    kkt_residual,
    maximize,
    uncovered_reduce,
)

# support-enum exact value, frozen from an independent pre-build optimizer
K53MINUS2_VALUE = 0.06727599372434985


def test_evaluate_single_edge():
    G = complete(4, 4)
    assert evaluate(G, [0.25, 0.25, 0.25, 0.25]) == pytest.approx(1 / 256, abs=1e-15)
    assert evaluate(G, [1.0, 0.0, 0.0, 0.0]) == 0.0


def test_evaluate_star_at_known_optimum():
    n = 8
    x = [0.25] + [0.75 / 7] * 7
    assert evaluate(star(n, 4), x) == pytest.approx(float(star_lambda(n)), abs=1e-12)


def test_gradient_single_edge():
    g = gradient(complete(4, 4), [0.25] * 4)
    assert list(g) == pytest.approx([1 / 64] * 4, abs=1e-15)


def test_euler_identity():
    G = k53minus2()
    x = [0.3, 0.25, 0.2, 0.15, 0.1]
    lhs = math.fsum(xi * gi for xi, gi in zip(x, gradient(G, x)))
    assert lhs == pytest.approx(G.r * evaluate(G, x), abs=1e-14)


def test_lambda_complete_7_4():
    res = maximize(complete(7, 4))
    assert res.value == pytest.approx(5 / 343, abs=1e-9)
    assert res.kkt_residual <= 1e-8
    assert len(res.support) == 7


def test_lambda_complete_4_3():
    res = maximize(complete(4, 3))
    assert res.value == pytest.approx(1 / 16, abs=1e-9)


@pytest.mark.parametrize("n", range(4, 15))
def test_lambda_star_sweep(n):
    res = maximize(star(n, 4))
    assert res.value == pytest.approx(float(star_lambda(n)), abs=1e-9)
    # optimum puts 1/4 on the center
    assert res.weighting[0] == pytest.approx(0.25, abs=1e-6)


def test_lambda_k53minus2_frozen_oracle():
    res = maximize(k53minus2())
    assert res.value == pytest.approx(K53MINUS2_VALUE, abs=1e-8)
    assert res.value <= 0.0673
    assert res.kkt_residual <= 1e-8


def test_methods_agree_on_k53minus2():
    exact = maximize(k53minus2(), SolverConfig(method="support-enum"))
    ascent = maximize(k53minus2(), SolverConfig(method="multistart-ascent"))
    assert exact.method == "support-enum"
    assert ascent.method == "multistart-ascent"
    assert abs(exact.value - ascent.value) <= 1e-8


def test_lambda_matching_support_is_one_edge():
    res = maximize(matching(2, 4))
    assert res.value == pytest.approx(1 / 256, abs=1e-12)
    assert len(res.support) == 4
    assert set(res.support) in ({1, 2, 3, 4}, {5, 6, 7, 8})


def test_weighting_is_simplex_point():
    res = maximize(star(9, 4))
    assert all(w >= 0 for w in res.weighting)
    assert math.fsum(res.weighting) == pytest.approx(1.0, abs=1e-12)


def test_kkt_residual_at_optimum_and_off_optimum():
    G = complete(7, 4)
    res = maximize(G)
    assert kkt_residual(G, res.weighting) <= 1e-8
    skew = [0.4] + [0.1] * 6
    assert kkt_residual(G, skew) > 1e-4


def test_kkt_report_structure():
    G = matching(2, 4)
    res = maximize(G)
    rep = kkt_report(G, res.weighting)
    assert rep.residual <= 1e-8
    assert isinstance(rep.uncovered_support_pairs, tuple)


def test_densify_drops_zero_weight_vertices():
    # a complete 7-graph plus an isolated vertex: the optimum ignores vertex 8
    G = Hypergraph(4, 8, complete(7, 4).edges)
    H, res = densify(G)
    assert H.n == 7
    assert res.value == pytest.approx(5 / 343, abs=1e-9)
    assert len(res.support) == 7


def test_densify_fixed_point_on_dense_graph():
    H, res = densify(star(8, 4))
    assert H == star(8, 4)
    assert res.value == pytest.approx(float(star_lambda(8)), abs=1e-9)


def test_uncovered_reduce_matching():
    R = uncovered_reduce(matching(2, 4))
    assert R.n == 4
    assert R.edge_list() == [(1, 2, 3, 4)]
    assert maximize(R).value == pytest.approx(1 / 256, abs=1e-12)


def test_uncovered_reduce_noop_when_pairs_covered():
    G = star(7, 4)
    assert uncovered_reduce(G) == G


def test_support_enum_guard():
    with pytest.raises(UnsupportedSizeError):
        maximize(complete(13, 4), SolverConfig(method="support-enum"))
    # raising the guard explicitly permits the size (not executed at 13 for
    # time; 9 > the auto cut of 8 exercises the guard plumbing)
    res = maximize(complete(9, 4), SolverConfig(method="support-enum"))
    assert res.method == "support-enum"


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("HLAG_GUARD_N", "4")
    with pytest.raises(UnsupportedSizeError):
        maximize(complete(5, 4), SolverConfig(method="support-enum"))


def test_seeded_runs_identical():
    a = maximize(k53minus2(), SolverConfig(method="multistart-ascent", seed=11))
    b = maximize(k53minus2(), SolverConfig(method="multistart-ascent", seed=11))
    assert a == b


def test_empty_graph_value_zero():
    res = maximize(Hypergraph(4, 5, frozenset()))
    assert res.value == 0.0
