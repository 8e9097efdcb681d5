import math
import random

import numpy as np
import pytest
from scipy.optimize import linprog

import eassim


def test_membership_spot_values():
    assert eassim.membership(40.0, "gas", 40.0, 8.0) == 1.0
    assert eassim.membership(48.0, "gas", 40.0, 8.0) == pytest.approx(math.exp(-0.5), rel=1e-12)
    assert eassim.membership(56.0, "gas", 40.0, 8.0) == pytest.approx(math.exp(-2.0), rel=1e-12)
    with pytest.raises(eassim.ConfigError):
        eassim.membership(40.0, "gas", 40.0, 0.0)


def test_marginal_factors_normalize():
    rng = random.Random(3)
    lmp = [rng.uniform(-20.0, 200.0) for _ in range(200)]
    stats = [("coal", 21.0, 4.0), ("gas", 34.0, 7.0), ("oil", 75.0, 14.0)]
    weights = eassim.marginal_factors(lmp, stats)
    assert set(weights) == {"coal", "gas", "oil"}
    for t in range(len(lmp)):
        total = sum(weights[f][t] for f in weights)
        assert total == pytest.approx(1.0, abs=1e-12)


def test_emission_cost_quarter_mix():
    weights = {f: [0.25] for f in ("coal", "gas", "nuclear", "hydro")}
    factors = {"coal": 962.97, "gas": 395.53, "nuclear": 0.0, "hydro": 0.0}
    assert eassim.emission_cost(weights, factors) == pytest.approx([339.625], rel=1e-12)


def test_inner_allocation_matches_scipy():
    rng = random.Random(11)
    for _ in range(10):
        T = rng.randrange(1, 10)
        sigma = [rng.uniform(0.0, 10.0) for _ in range(T)]
        gamma = rng.uniform(0.0, T)
        z = eassim.inner_budget_allocation(sigma, gamma)
        res = linprog(
            c=[-s for s in sigma],
            A_ub=[[1.0] * T],
            b_ub=[gamma],
            bounds=[(0.0, 1.0)] * T,
            method="highs",
        )
        assert res.status == 0
        assert sum(s * v for s, v in zip(sigma, z)) == pytest.approx(-res.fun, abs=1e-9)


def test_solve_day_two_slot_arbitrage():
    x, kg, relaxed = eassim.solve_day(
        load_kw=[100.0, 100.0],
        sigma_kw=[],
        cost_kg_per_mwh=[10.0, 5.0],
        capacity_kw=1000.0,
        margin_kw=0.0,
        battery_kwh=2.0,
        rate_kw=1.0 / 12.0,
        boundary_soc_kwh=1.0,
        slot_minutes=720,
    )
    assert x == pytest.approx([-1.0, 1.0], abs=1e-9)
    assert kg == pytest.approx(-0.005, abs=1e-9)
    assert relaxed == 0


def test_solve_day_matches_scipy():
    rng = random.Random(7)
    T = 4
    h = 6.0  # 360-minute slots
    load = [rng.uniform(5.0, 20.0) for _ in range(T)]
    cost = [rng.uniform(100.0, 900.0) for _ in range(T)]
    cap, margin, B, rate, b0 = 60.0, 0.6, 8.0, 8.0, 4.0
    x, kg, _ = eassim.solve_day(
        load_kw=load,
        sigma_kw=[],
        cost_kg_per_mwh=cost,
        capacity_kw=cap,
        margin_kw=margin,
        battery_kwh=B,
        rate_kw=rate,
        boundary_soc_kwh=b0,
        slot_minutes=360,
    )

    rate_kwh = rate * h
    lo = [max(-rate_kwh, -max(load[t], 0.0) * h) for t in range(T)]
    hi = [min(rate_kwh, max((cap - margin - load[t]) * h, 0.0)) for t in range(T)]
    cum = np.tril(np.ones((T, T)))  # running state of charge above the start value
    res = linprog(
        c=[c / 1000.0 for c in cost],
        A_ub=np.vstack([cum, -cum]),
        b_ub=np.concatenate([np.full(T, B - b0), np.full(T, b0)]),
        A_eq=[np.ones(T)],
        b_eq=[0.0],
        bounds=list(zip(lo, hi)),
        method="highs",
    )
    assert res.status == 0
    assert kg == pytest.approx(res.fun, abs=1e-8)
    assert sum(x) == pytest.approx(0.0, abs=1e-9)


def test_project_feasible_and_daily_savings():
    x, soc, adjustments = eassim.project_feasible(
        planned_x_kwh=[-5.0, 5.0],
        actual_load_kw=[4.0, 50.0],
        start_soc_kwh=5.0,
        capacity_kw=100.0,
        margin_kw=1.0,
        battery_kwh=10.0,
        rate_kw=10.0,
        slot_hours=1.0,
    )
    assert x == pytest.approx([-4.0, 5.0])  # only the first slot needs clamping
    assert soc[0] == 5.0 and soc[-1] == pytest.approx(6.0)
    assert adjustments == 1

    # neutral day: savings equal the negated emission delta
    assert eassim.daily_savings([-100.0, 100.0], [962.97, 0.0], 5.0, 5.0) == pytest.approx(
        96.297, rel=1e-12
    )


def test_mape_exclusion():
    percent, included, excluded = eassim.mape([100.0, 0.0, 200.0], [90.0, 50.0, 220.0])
    assert percent == pytest.approx(10.0, rel=1e-12)
    assert (included, excluded) == (2, 1)


def test_forecaster_round_trip():
    slots = 24
    days = 60
    history = [
        100.0 + 30.0 * math.sin(2.0 * math.pi * (t % slots) / slots)
        for t in range(days * slots)
    ]
    dow = [d % 7 for d in range(days)]
    model = eassim.fit_forecaster(
        history, [], dow, p1=2, p2=1, p3=0, ridge=1e-6, slots_per_day=slots
    )
    assert len(model.coefficients) == 2 + 1 + 7 + 2
    pred = eassim.predict_day(model, history, [], days % 7, slots)
    actual = history[-slots:]
    percent, _, _ = eassim.mape(actual, pred)
    assert percent < 1.0


def test_size_storage():
    assert eassim.size_storage([10.0, 50.0, 30.0], 0.5) == 25.0
