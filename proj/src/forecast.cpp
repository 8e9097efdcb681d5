#include "eass/forecast.hpp"

#include <algorithm>
#include <cmath>

namespace eass {

namespace {

// Cholesky solve of a symmetric positive (semi-)definite system, fixed
// elimination order. Returns false when a pivot collapses.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int k = 0; k < n; ++k) {
        double d = a[std::size_t(k) * n + k];
        for (int j = 0; j < k; ++j) {
            const double l = a[std::size_t(k) * n + j];
            d -= l * l;
        }
        if (d <= 1e-300) return false;
        d = std::sqrt(d);
        a[std::size_t(k) * n + k] = d;
        for (int i = k + 1; i < n; ++i) {
            double v = a[std::size_t(i) * n + k];
            for (int j = 0; j < k; ++j)
                v -= a[std::size_t(i) * n + j] * a[std::size_t(k) * n + j];
            a[std::size_t(i) * n + k] = v / d;
        }
    }
    for (int i = 0; i < n; ++i) { // L y = b
        double v = b[std::size_t(i)];
        for (int j = 0; j < i; ++j) v -= a[std::size_t(i) * n + j] * b[std::size_t(j)];
        b[std::size_t(i)] = v / a[std::size_t(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) { // L^T x = y
        double v = b[std::size_t(i)];
        for (int j = i + 1; j < n; ++j) v -= a[std::size_t(j) * n + i] * b[std::size_t(j)];
        b[std::size_t(i)] = v / a[std::size_t(i) * n + i];
    }
    return true;
}

int day_of_slot(std::size_t slot, int slots_per_day) { return int(slot / std::size_t(slots_per_day)); }

void fill_features(std::vector<double>& feat, const std::vector<double>& history,
                   std::size_t target_slot, const LagSpec& spec,
                   const std::vector<double>& temperature, int dow, int slots_per_day) {
    int k = 0;
    for (int j = 1; j <= spec.p1; ++j) feat[std::size_t(k++)] = history[target_slot - std::size_t(j)];
    for (int j = 1; j <= spec.p2; ++j)
        feat[std::size_t(k++)] = history[target_slot - std::size_t(j * slots_per_day)];
    for (int j = 1; j <= spec.p3; ++j)
        feat[std::size_t(k++)] = history[target_slot - std::size_t(j * 7 * slots_per_day)];
    for (int d = 0; d < 7; ++d) feat[std::size_t(k++)] = (d == dow) ? 1.0 : 0.0;
    feat[std::size_t(k++)] = target_slot < temperature.size() ? temperature[target_slot] : 0.0;
    feat[std::size_t(k++)] = 1.0;
}

}  // namespace

std::vector<double> build_features(const std::vector<double>& history, std::size_t target_slot,
                                   const LagSpec& spec, const ExogenousFeatures& exog,
                                   int slots_per_day) {
    spec.validate();
    const int need = spec.min_history_slots(slots_per_day);
    if (target_slot < std::size_t(need) || target_slot > history.size())
        throw ConfigError("build_features: insufficient history for the lag window");
    const int day = day_of_slot(target_slot, slots_per_day);
    const int dow = day < int(exog.day_of_week.size()) ? exog.day_of_week[std::size_t(day)] : 0;
    std::vector<double> feat(std::size_t(spec.feature_count()));
    fill_features(feat, history, target_slot, spec, exog.temperature, dow, slots_per_day);
    return feat;
}

ForecastModel fit(const std::vector<double>& history, const ExogenousFeatures& exog,
                  const LagSpec& spec, double ridge, int slots_per_day) {
    spec.validate();
    if (ridge < 0) throw ConfigError("fit: ridge must be nonnegative");
    if (spec.p3 >= 1 && history.size() < std::size_t(56 * slots_per_day))
        throw ConfigError("fit: weekly lags require at least 8 weeks of history");
    const std::size_t t0 = std::size_t(spec.min_history_slots(slots_per_day));
    if (t0 >= history.size()) throw ConfigError("fit: insufficient history for the lag window");

    const int k = spec.feature_count();
    std::vector<double> xtx(std::size_t(k) * k, 0.0), xty(std::size_t(k), 0.0);
    std::vector<double> feat(std::size_t(k), 0.0);
    for (std::size_t t = t0; t < history.size(); ++t) {
        const int day = day_of_slot(t, slots_per_day);
        const int dow = day < int(exog.day_of_week.size()) ? exog.day_of_week[std::size_t(day)] : 0;
        fill_features(feat, history, t, spec, exog.temperature, dow, slots_per_day);
        const double y = history[t];
        for (int i = 0; i < k; ++i) {
            const double fi = feat[std::size_t(i)];
            if (fi == 0.0) continue;
            xty[std::size_t(i)] += fi * y;
            for (int j = 0; j <= i; ++j)
                xtx[std::size_t(i) * k + j] += fi * feat[std::size_t(j)];
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            xtx[std::size_t(i) * k + j] = xtx[std::size_t(j) * k + i];
    for (int i = 0; i < k - 1; ++i) // intercept (last column) unpenalized
        xtx[std::size_t(i) * k + i] += ridge;

    if (!cholesky_solve(xtx, xty, k))
        throw ConfigError("fit: singular design matrix (use ridge > 0)");

    ForecastModel model;
    model.lags = spec;
    model.ridge = ridge;
    model.coefficients = std::move(xty);
    return model;
}

std::vector<double> predict_day(const ForecastModel& model, const std::vector<double>& history,
                                const std::vector<double>& day_temperature, int day_of_week,
                                int slots_per_day) {
    const LagSpec& spec = model.lags;
    spec.validate();
    if (int(model.coefficients.size()) != spec.feature_count())
        throw ConfigError("predict_day: coefficient count mismatch");
    if (history.size() < std::size_t(spec.min_history_slots(slots_per_day)))
        throw ConfigError("predict_day: insufficient history for the lag window");

    std::vector<double> extended = history;
    extended.reserve(history.size() + std::size_t(slots_per_day));
    std::vector<double> feat(std::size_t(spec.feature_count()));
    std::vector<double> out;
    out.reserve(std::size_t(slots_per_day));

    for (int s = 0; s < slots_per_day; ++s) {
        const std::size_t t = extended.size();
        const double temp = s < int(day_temperature.size()) ? day_temperature[std::size_t(s)] : 0.0;
        int k = 0;
        for (int j = 1; j <= spec.p1; ++j) feat[std::size_t(k++)] = extended[t - std::size_t(j)];
        for (int j = 1; j <= spec.p2; ++j)
            feat[std::size_t(k++)] = extended[t - std::size_t(j * slots_per_day)];
        for (int j = 1; j <= spec.p3; ++j)
            feat[std::size_t(k++)] = extended[t - std::size_t(j * 7 * slots_per_day)];
        for (int d = 0; d < 7; ++d) feat[std::size_t(k++)] = (d == day_of_week) ? 1.0 : 0.0;
        feat[std::size_t(k++)] = temp;
        feat[std::size_t(k++)] = 1.0;

        double pred = 0.0;
        for (std::size_t i = 0; i < feat.size(); ++i) pred += feat[i] * model.coefficients[i];
        pred = std::max(pred, 0.0);
        extended.push_back(pred);
        out.push_back(pred);
    }
    return out;
}

std::vector<double> estimate_deviation(const std::vector<std::vector<double>>& residual_days,
                                       int window_days, double multiplier) {
    if (window_days < 7) throw ConfigError("estimate_deviation: window must span at least 7 days");
    if (int(residual_days.size()) < 7)
        throw ConfigError("estimate_deviation: need at least 7 validation days");
    const int days = std::min<int>(window_days, int(residual_days.size()));
    const std::size_t first = residual_days.size() - std::size_t(days);
    const std::size_t slots = residual_days.front().size();
    for (const auto& d : residual_days)
        if (d.size() != slots) throw ConfigError("estimate_deviation: ragged residual arrays");

    std::vector<double> sigma(slots, 0.0);
    for (std::size_t s = 0; s < slots; ++s) {
        double mean = 0.0;
        for (std::size_t d = first; d < residual_days.size(); ++d) mean += residual_days[d][s];
        mean /= days;
        double var = 0.0;
        for (std::size_t d = first; d < residual_days.size(); ++d) {
            const double e = residual_days[d][s] - mean;
            var += e * e;
        }
        var /= days; // population variance
        sigma[s] = multiplier * std::sqrt(std::max(var, 0.0));
    }
    return sigma;
}

MapeResult mape(const std::vector<double>& actual, const std::vector<double>& forecast) {
    if (actual.size() != forecast.size()) throw ConfigError("mape: length mismatch");
    MapeResult r;
    double sum = 0.0;
    for (std::size_t t = 0; t < actual.size(); ++t) {
        if (actual[t] == 0.0) {
            ++r.excluded;
            continue;
        }
        sum += std::abs(actual[t] - forecast[t]) / std::abs(actual[t]);
        ++r.included;
    }
    if (r.included == 0) throw ConfigError("mape: every slot has zero actual load");
    r.percent = 100.0 * sum / double(r.included);
    return r;
}

}  // namespace eass
