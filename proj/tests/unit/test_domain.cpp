#include "doctest.h"

#include <cmath>

#include "eass/domain.hpp"
#include "eass/rng.hpp"

using namespace eass;

namespace {

MarginalFactorSeries uniform_factors(std::vector<std::string> fuels, double weight,
                                     std::size_t slots) {
    MarginalFactorSeries f;
    f.fuels = std::move(fuels);
    f.weights.assign(f.fuels.size(), std::vector<double>(slots, weight));
    return f;
}

const std::vector<FuelType> kFuels = {
    {"coal", 962.97}, {"gas", 395.53}, {"oil", 933.94}, {"nuclear", 0.0}, {"hydro", 0.0}};

}  // namespace

TEST_CASE("emission cost: equal quarter mix of coal/gas/nuclear/hydro") {
    const auto f = uniform_factors({"coal", "gas", "nuclear", "hydro"}, 0.25, 3);
    const auto c = emission_cost_series(f, kFuels);
    REQUIRE(c.size() == 3);
    // (962.97 + 395.53) / 4; the value follows from the factor table
    for (double v : c) CHECK(v == doctest::Approx(339.625).epsilon(1e-12));
}

TEST_CASE("emission cost: single-fuel mixes") {
    CHECK(emission_cost_series(uniform_factors({"gas"}, 1.0, 2), kFuels)[0] ==
          doctest::Approx(395.53));
    CHECK(emission_cost_series(uniform_factors({"nuclear"}, 1.0, 2), kFuels)[0] == 0.0);
}

TEST_CASE("emission cost: unknown fuel is a configuration error") {
    CHECK_THROWS_AS(emission_cost_series(uniform_factors({"fusion"}, 1.0, 1), kFuels),
                    ConfigError);
}

TEST_CASE("emission cost is linear in the weights") {
    Rng rng(7, "cost-linearity");
    const std::size_t T = 16;
    for (int rep = 0; rep < 20; ++rep) {
        MarginalFactorSeries a = uniform_factors({"coal", "gas", "oil"}, 0.0, T);
        MarginalFactorSeries b = a;
        for (std::size_t t = 0; t < T; ++t) {
            double wa[3], wb[3], sa = 0, sb = 0;
            for (int f = 0; f < 3; ++f) {
                wa[f] = rng.uniform(0.01, 1.0);
                wb[f] = rng.uniform(0.01, 1.0);
                sa += wa[f];
                sb += wb[f];
            }
            for (int f = 0; f < 3; ++f) {
                a.weights[std::size_t(f)][t] = wa[f] / sa;
                b.weights[std::size_t(f)][t] = wb[f] / sb;
            }
        }
        const double alpha = rng.uniform(0.0, 1.0);
        MarginalFactorSeries mix = a;
        for (std::size_t f = 0; f < 3; ++f)
            for (std::size_t t = 0; t < T; ++t)
                mix.weights[f][t] = alpha * a.weights[f][t] + (1 - alpha) * b.weights[f][t];
        const auto ca = emission_cost_series(a, kFuels);
        const auto cb = emission_cost_series(b, kFuels);
        const auto cm = emission_cost_series(mix, kFuels);
        for (std::size_t t = 0; t < T; ++t)
            CHECK(cm[t] == doctest::Approx(alpha * ca[t] + (1 - alpha) * cb[t]).epsilon(1e-12));
    }
}

TEST_CASE("schedule emission delta") {
    CHECK(schedule_emission_delta(std::vector<double>{0, 0, 0}, {10, 20, 30}) == 0.0);
    CHECK(schedule_emission_delta(std::vector<double>{-100}, {962.97}) ==
          doctest::Approx(-96.297).epsilon(1e-12));
    // charge 100 kWh for free, discharge 100 kWh at the coal rate
    CHECK(schedule_emission_delta(std::vector<double>{100, -100}, {0.0, 962.97}) ==
          doctest::Approx(-96.297).epsilon(1e-12));
    CHECK_THROWS_AS((schedule_emission_delta(std::vector<double>{1.0}, {1.0, 2.0})), ConfigError);
}

TEST_CASE("schedule emission delta: concatenated days sum") {
    Rng rng(3, "delta-concat");
    std::vector<double> x1(8), x2(8), c1(8), c2(8);
    for (int t = 0; t < 8; ++t) {
        x1[std::size_t(t)] = rng.uniform(-5, 5);
        x2[std::size_t(t)] = rng.uniform(-5, 5);
        c1[std::size_t(t)] = rng.uniform(100, 900);
        c2[std::size_t(t)] = rng.uniform(100, 900);
    }
    std::vector<double> x = x1, c = c1;
    x.insert(x.end(), x2.begin(), x2.end());
    c.insert(c.end(), c2.begin(), c2.end());
    CHECK(schedule_emission_delta(x, c) ==
          doctest::Approx(schedule_emission_delta(x1, c1) + schedule_emission_delta(x2, c2))
              .epsilon(1e-12));
}

TEST_CASE("aggregate delta matches the summed per-transformer schedules") {
    const std::vector<std::vector<double>> xs = {{1, -2, 3}, {-4, 5, -6}};
    const std::vector<double> c = {500, 400, 300};
    CHECK(schedule_emission_delta(xs, c) ==
          doctest::Approx(schedule_emission_delta(std::vector<double>{-3, 3, -3}, c)));
}

TEST_CASE("storage sizing from the load peak") {
    const LoadSeries load{"tx", {10, 50, 30}};
    CHECK(size_storage(load, 1.0) == 50.0);
    CHECK(size_storage(load, 0.5) == 25.0);
    CHECK(size_storage(load, 0.0) == 0.0);
    CHECK_THROWS_AS((size_storage(LoadSeries{"tx", {}}, 1.0)), ConfigError);
}

TEST_CASE("state of charge derives from decisions by forward accumulation") {
    Schedule s{{1.5, -0.5, 2.0, -3.0}, 4.0};
    const auto soc = s.soc_series();
    REQUIRE(soc.size() == 5);
    CHECK(soc[0] == 4.0);
    double acc = 4.0;
    for (std::size_t t = 0; t < s.x_kwh.size(); ++t) {
        acc = acc + s.x_kwh[t]; // same order as the implementation: bit-equal
        CHECK(soc[t + 1] == acc);
    }
}

TEST_CASE("validate_schedule: clean schedule has no violations") {
    const Transformer tr{"t", 100.0, 1.0};
    const StorageUnit st{10.0, 10.0, 5.0};
    Schedule s{{2.0, -2.0, 0.0}, 5.0};
    const std::vector<double> load = {50, 50, 50};
    CHECK(validate_schedule(s, load, tr, st, 5.0, 1.0).empty());
}

TEST_CASE("validate_schedule: discharge beyond the observed load") {
    const Transformer tr{"t", 100.0, 1.0};
    const StorageUnit st{10.0, 10.0, 5.0};
    Schedule s{{-5.0, 5.0}, 5.0};
    const auto v = validate_schedule(s, {4.0, 50.0}, tr, st, 5.0, 1.0);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == ViolationKind::DischargeExceedsLoad);
    CHECK(v[0].slot == 0);
    CHECK(v[0].amount_kwh == doctest::Approx(1.0));
}

TEST_CASE("validate_schedule: charging when the load already fills the capacity") {
    const Transformer tr{"t", 100.0, 1.0};
    const StorageUnit st{10.0, 10.0, 5.0};
    Schedule s{{2.0, -2.0}, 5.0};
    const auto v = validate_schedule(s, {100.0, 50.0}, tr, st, 5.0, 1.0);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == ViolationKind::OverloadMargin);
}

TEST_CASE("validate_schedule: boundary state of charge is optional") {
    const Transformer tr{"t", 100.0, 1.0};
    const StorageUnit st{10.0, 10.0, 5.0};
    Schedule drift{{2.0, 1.0}, 5.0}; // ends at 8, not the boundary 5
    CHECK(validate_schedule(drift, {50, 50}, tr, st, std::nullopt, 1.0).empty());
    const auto v = validate_schedule(drift, {50, 50}, tr, st, 5.0, 1.0);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::BoundarySoc);
}

TEST_CASE("validate_schedule: rate and state-of-charge bounds") {
    const Transformer tr{"t", 100.0, 1.0};
    const StorageUnit st{10.0, 3.0, 5.0};
    Schedule fast{{4.0, -4.0}, 5.0};
    auto v = validate_schedule(fast, {50, 50}, tr, st, 5.0, 1.0);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == ViolationKind::RateLimit);

    const StorageUnit small{3.0, 10.0, 1.5};
    Schedule over{{3.0, -3.0}, 1.5};
    v = validate_schedule(over, {50, 50}, tr, small, 1.5, 1.0);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == ViolationKind::SocAboveCapacity);
}

TEST_CASE("negative load samples clamp to zero") {
    std::vector<double> v = {1.0, -2.0, 0.0, -0.5, 3.0};
    CHECK(clamp_negative_loads(v) == 2);
    CHECK(v == std::vector<double>{1.0, 0.0, 0.0, 0.0, 3.0});
}

TEST_CASE("time grid consistency") {
    CHECK_NOTHROW(TimeGrid{288, 5, 1}.validate());
    CHECK_NOTHROW(TimeGrid{24, 60, 365}.validate());
    CHECK_THROWS_AS((TimeGrid{288, 6, 1}.validate()), ConfigError);
    CHECK_THROWS_AS((TimeGrid{0, 5, 1}.validate()), ConfigError);
}
