#pragma once

#include <cstddef>
#include <vector>

#include "eass/domain.hpp"

namespace eass {

// Lag structure of the autoregressive forecaster: p1 recent slots, p2 same-slot
// daily lags, p3 same-slot weekly lags.
struct LagSpec {
    int p1 = 12;
    int p2 = 3;
    int p3 = 2;

    void validate() const {
        if (p1 < 0 || p2 < 0 || p3 < 0) throw ConfigError("lag counts must be nonnegative");
        if (p1 + p2 + p3 < 1) throw ConfigError("at least one lag is required");
    }

    int feature_count() const { return p1 + p2 + p3 + 7 + 2; } // + dow one-hot + temp + intercept

    // earliest slot index with a full lag window
    int min_history_slots(int slots_per_day) const {
        int need = p1;
        need = std::max(need, p2 * slots_per_day);
        need = std::max(need, p3 * 7 * slots_per_day);
        return need;
    }
};

// Exogenous inputs aligned with the absolute slot index of the load history.
// temperature may be empty (treated as zero); day_of_week is one entry per day.
struct ExogenousFeatures {
    std::vector<double> temperature;
    std::vector<int> day_of_week;
};

struct ForecastModel {
    LagSpec lags;
    double ridge = 1e-3;
    std::vector<double> coefficients; // layout matches build_features
};

struct ForecastResult {
    std::vector<double> mean_kw;      // clamped at 0
    std::vector<double> deviation_kw; // sigma_i(t) >= 0
};

// Feature vector at `target_slot`:
//   [recent lags x p1, daily lags x p2, weekly lags x p3,
//    day-of-week one-hot x 7, temperature, 1]
// Throws when the history is too short for the lag window.
std::vector<double> build_features(const std::vector<double>& history, std::size_t target_slot,
                                   const LagSpec& spec, const ExogenousFeatures& exog,
                                   int slots_per_day);

// Ridge-regularized least squares over the lag features (intercept
// unpenalized). Deterministic; throws on a singular system when ridge == 0.
ForecastModel fit(const std::vector<double>& history, const ExogenousFeatures& exog,
                  const LagSpec& spec, double ridge, int slots_per_day);

// Recursive one-step-ahead forecast of the next day. Predictions feed back as
// recent-lag inputs; daily/weekly lags always read true history. The exogenous
// arguments cover just the predicted day. Output is clamped at 0.
std::vector<double> predict_day(const ForecastModel& model, const std::vector<double>& history,
                                const std::vector<double>& day_temperature, int day_of_week,
                                int slots_per_day);

// sigma(t) = multiplier * population std of same-slot residuals over the
// trailing `window_days` days. residual_days holds one array per day.
std::vector<double> estimate_deviation(const std::vector<std::vector<double>>& residual_days,
                                       int window_days, double multiplier);

struct MapeResult {
    double percent = 0.0;
    std::size_t included = 0;
    std::size_t excluded = 0; // slots with actual == 0, skipped
};

MapeResult mape(const std::vector<double>& actual, const std::vector<double>& forecast);

}  // namespace eass
