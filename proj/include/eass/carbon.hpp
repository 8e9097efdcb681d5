#pragma once

#include <string>
#include <vector>

#include "eass/domain.hpp"

namespace eass {

// Monthly price statistics of one fuel, in $/MWh. nu is a standard deviation.
struct FuelPriceStats {
    std::string fuel;
    double mean_cost = 0.0; // mu_f
    double std_cost = 0.0;  // nu_f, > 0

    void validate() const {
        if (std_cost <= 0) throw ConfigError("fuel price std must be positive: " + fuel);
    }
};

// Locational marginal prices, $/MWh, one per slot (or per hour before expansion).
struct LmpSeries {
    std::vector<double> values;
};

// Gaussian membership of price p under the fuel's price statistics; in (0, 1].
double membership(double price, const FuelPriceStats& stats);

// lambda_f(t) = M_f(t) / sum_f M_f(t). Weights are strictly positive and sum
// to 1 per slot. When every membership underflows to zero, the whole weight
// goes to the fuel with minimal |p - mu_f| / nu_f.
MarginalFactorSeries marginal_factors(const LmpSeries& lmp,
                                      const std::vector<FuelPriceStats>& stats);

// Piecewise-constant hold of an hourly series onto the slot grid of one or
// more days. hourly.size() * (slots_per_day / 24) must equal the slot count.
std::vector<double> expand_to_slots(const std::vector<double>& hourly, const TimeGrid& grid);

// Stats rows keyed by month ("YYYY-MM"); the month boundary selects the row.
struct FuelStatsTable {
    // parallel arrays sorted by month key
    std::vector<std::string> months;
    std::vector<std::vector<FuelPriceStats>> stats;

    const std::vector<FuelPriceStats>& for_month(const std::string& month) const;
};

}  // namespace eass
