#include "eass/carbon.hpp"

#include <algorithm>
#include <cmath>

namespace eass {

double membership(double price, const FuelPriceStats& stats) {
    stats.validate();
    const double z = (price - stats.mean_cost) / stats.std_cost;
    return std::exp(-0.5 * z * z);
}

MarginalFactorSeries marginal_factors(const LmpSeries& lmp,
                                      const std::vector<FuelPriceStats>& stats) {
    if (stats.empty()) throw ConfigError("marginal_factors: no fuels");
    if (lmp.values.empty()) throw ConfigError("marginal_factors: empty LMP series");
    for (const auto& s : stats) s.validate();

    MarginalFactorSeries out;
    out.fuels.reserve(stats.size());
    for (const auto& s : stats) out.fuels.push_back(s.fuel);
    out.weights.assign(stats.size(), std::vector<double>(lmp.values.size(), 0.0));

    std::vector<double> m(stats.size());
    for (std::size_t t = 0; t < lmp.values.size(); ++t) {
        const double p = lmp.values[t];
        if (!std::isfinite(p)) throw ConfigError("marginal_factors: non-finite LMP value");
        double sum = 0.0;
        for (std::size_t f = 0; f < stats.size(); ++f) {
            m[f] = membership(p, stats[f]);
            sum += m[f];
        }
        if (sum > 0.0) {
            for (std::size_t f = 0; f < stats.size(); ++f) out.weights[f][t] = m[f] / sum;
        } else {
            // All memberships underflowed; the normalized ratio limits to an
            // indicator of the fuel with the smallest standardized distance.
            std::size_t best = 0;
            double best_z = std::abs(p - stats[0].mean_cost) / stats[0].std_cost;
            for (std::size_t f = 1; f < stats.size(); ++f) {
                const double z = std::abs(p - stats[f].mean_cost) / stats[f].std_cost;
                if (z < best_z) {
                    best_z = z;
                    best = f;
                }
            }
            out.weights[best][t] = 1.0;
        }
    }
    return out;
}

std::vector<double> expand_to_slots(const std::vector<double>& hourly, const TimeGrid& grid) {
    grid.validate();
    if (grid.slots_per_day % 24 != 0)
        throw ConfigError("expand_to_slots: slots_per_day must be a multiple of 24");
    const std::size_t factor = std::size_t(grid.slots_per_day / 24);
    const std::size_t slots = std::size_t(grid.total_slots());
    if (hourly.size() * factor != slots)
        throw ConfigError("expand_to_slots: hourly length does not match the grid");
    std::vector<double> out(slots);
    for (std::size_t h = 0; h < hourly.size(); ++h)
        std::fill_n(out.begin() + long(h * factor), factor, hourly[h]);
    return out;
}

const std::vector<FuelPriceStats>& FuelStatsTable::for_month(const std::string& month) const {
    if (months.empty()) throw ConfigError("fuel stats table is empty");
    // last row whose month key is <= the requested month
    std::size_t pick = 0;
    bool found = false;
    for (std::size_t i = 0; i < months.size(); ++i) {
        if (months[i] <= month) {
            pick = i;
            found = true;
        }
    }
    if (!found) pick = 0;
    return stats[pick];
}

}  // namespace eass
