#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eass/carbon.hpp"
#include "eass/domain.hpp"
#include "eass/eass_lp.hpp"
#include "eass/forecast.hpp"
#include "eass/sim.hpp"
#include "eass/synth.hpp"

namespace py = pybind11;
using namespace eass;

namespace {

// single-transformer day schedule; returns (x_kwh, objective_kg, relaxed_slots)
py::tuple solve_day(const std::vector<double>& load_kw, const std::vector<double>& sigma_kw,
                    const std::vector<double>& cost_kg_per_mwh, double capacity_kw,
                    double margin_kw, double battery_kwh, double rate_kw, double boundary_soc_kwh,
                    double gamma, bool robust, int slot_minutes) {
    const int T = int(load_kw.size());
    EassInstance inst;
    inst.grid = {1440 / slot_minutes, slot_minutes, 1};
    if (inst.grid.total_slots() != T)
        throw ConfigError("solve_day: load length does not match slot_minutes");
    inst.transformers = {{"tx", capacity_kw, margin_kw}};
    inst.storage = {{battery_kwh, rate_kw, boundary_soc_kwh}};
    inst.load_kw = {load_kw};
    inst.sigma_kw = {sigma_kw.empty() ? std::vector<double>(std::size_t(T), 0.0) : sigma_kw};
    inst.cost_kg_per_mwh = cost_kg_per_mwh;
    inst.boundary_soc_kwh = {boundary_soc_kwh};
    inst.gamma = gamma;
    const EassSolution sol = solve_eass(inst, robust);
    if (sol.status != SolveStatus::Optimal) throw ConfigError("solve_day: " + sol.message);
    return py::make_tuple(sol.x_kwh[0], sol.objective_kg, int(sol.relaxed_slots.size()));
}

py::dict factors_dict(const std::vector<double>& lmp,
                      const std::vector<std::tuple<std::string, double, double>>& stats) {
    std::vector<FuelPriceStats> s;
    for (const auto& [name, mu, nu] : stats) s.push_back({name, mu, nu});
    const MarginalFactorSeries mf = marginal_factors(LmpSeries{lmp}, s);
    py::dict out;
    for (std::size_t f = 0; f < mf.fuels.size(); ++f)
        out[py::str(mf.fuels[f])] = mf.weights[f];
    return out;
}

}  // namespace

PYBIND11_MODULE(eassim, m) {
    m.doc() = "emission-aware storage scheduling: carbon estimation, forecasting, "
              "robust day-ahead optimization";

    py::register_exception<ConfigError>(m, "ConfigError");

    m.def("membership",
          [](double price, const std::string& fuel, double mu, double nu) {
              return membership(price, FuelPriceStats{fuel, mu, nu});
          },
          py::arg("price"), py::arg("fuel"), py::arg("mu"), py::arg("nu"),
          "Gaussian membership of a price under one fuel's statistics, in (0, 1].");

    m.def("marginal_factors", &factors_dict, py::arg("lmp"), py::arg("stats"),
          "Per-fuel marginal factors from an LMP series; stats is a list of "
          "(fuel, mu, nu). Returns {fuel: [weight per slot]}.");

    m.def("emission_cost",
          [](const py::dict& weights, const py::dict& factors) {
              MarginalFactorSeries mf;
              std::vector<FuelType> fuels;
              for (auto item : weights) {
                  mf.fuels.push_back(item.first.cast<std::string>());
                  mf.weights.push_back(item.second.cast<std::vector<double>>());
              }
              for (auto item : factors)
                  fuels.push_back({item.first.cast<std::string>(), item.second.cast<double>()});
              return emission_cost_series(mf, fuels);
          },
          py::arg("weights"), py::arg("factors"),
          "c(t) in kg/MWh from {fuel: weights} and {fuel: emission factor}.");

    m.def("inner_budget_allocation", &inner_budget_allocation, py::arg("sigma"), py::arg("gamma"),
          "Closed-form maximizer of sum sigma*z subject to sum z <= gamma, z in [0,1].");

    m.def("solve_day", &solve_day, py::arg("load_kw"), py::arg("sigma_kw"),
          py::arg("cost_kg_per_mwh"), py::arg("capacity_kw"), py::arg("margin_kw"),
          py::arg("battery_kwh"), py::arg("rate_kw"), py::arg("boundary_soc_kwh"),
          py::arg("gamma") = 0.0, py::arg("robust") = false, py::arg("slot_minutes") = 5,
          "One-day schedule for a single transformer. Returns (x_kwh, kg_delta, "
          "relaxed_slot_count); negative kg_delta means emissions were reduced.");

    m.def("project_feasible",
          [](const std::vector<double>& planned, const std::vector<double>& actual_kw,
             double soc0, double capacity_kw, double margin_kw, double battery_kwh,
             double rate_kw, double slot_hours) {
              const Projection p =
                  project_feasible(planned, actual_kw, soc0, {"tx", capacity_kw, margin_kw},
                                   {battery_kwh, rate_kw, 0.0}, slot_hours);
              return py::make_tuple(p.x_kwh, p.soc_kwh, p.adjustments);
          },
          py::arg("planned_x_kwh"), py::arg("actual_load_kw"), py::arg("start_soc_kwh"),
          py::arg("capacity_kw"), py::arg("margin_kw"), py::arg("battery_kwh"),
          py::arg("rate_kw"), py::arg("slot_hours"),
          "Clamp a planned schedule onto real-time feasibility. Returns "
          "(x_kwh, soc_kwh, adjustment_count).");

    m.def("daily_savings", &daily_savings, py::arg("realized_x_kwh"), py::arg("cost_kg_per_mwh"),
          py::arg("soc_start_kwh"), py::arg("soc_end_kwh"),
          "Emissions avoided (kg); residual stored energy valued at the day's mean cost.");

    m.def("mape",
          [](const std::vector<double>& actual, const std::vector<double>& forecast) {
              const MapeResult r = mape(actual, forecast);
              return py::make_tuple(r.percent, r.included, r.excluded);
          },
          py::arg("actual"), py::arg("forecast"),
          "Mean absolute percentage error; zero-actual slots are excluded. "
          "Returns (percent, included, excluded).");

    py::class_<ForecastModel>(m, "ForecastModel")
        .def_readonly("coefficients", &ForecastModel::coefficients)
        .def_readonly("ridge", &ForecastModel::ridge);

    m.def("fit_forecaster",
          [](const std::vector<double>& history, const std::vector<double>& temperature,
             const std::vector<int>& day_of_week, int p1, int p2, int p3, double ridge,
             int slots_per_day) {
              return fit(history, {temperature, day_of_week}, {p1, p2, p3}, ridge, slots_per_day);
          },
          py::arg("history"), py::arg("temperature"), py::arg("day_of_week"), py::arg("p1") = 12,
          py::arg("p2") = 3, py::arg("p3") = 2, py::arg("ridge") = 1e-3,
          py::arg("slots_per_day") = 288,
          "Ridge-regularized autoregressive fit over recent/daily/weekly lags.");

    m.def("predict_day", &predict_day, py::arg("model"), py::arg("history"),
          py::arg("day_temperature"), py::arg("day_of_week"), py::arg("slots_per_day") = 288,
          "Recursive one-day-ahead forecast, clamped at zero.");

    m.def("size_storage",
          [](const std::vector<double>& load_kw, double hours) {
              return size_storage(LoadSeries{"tx", load_kw}, hours);
          },
          py::arg("load_kw"), py::arg("hours"),
          "Battery capacity (kWh) sustaining the series peak for `hours`.");
}
