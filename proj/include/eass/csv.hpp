#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eass/carbon.hpp"
#include "eass/domain.hpp"

namespace eass {

// Proleptic Gregorian calendar helpers (Howard Hinnant's civil-days algorithm).
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);
int weekday_from_days(std::int64_t days); // 0 = Monday ... 6 = Sunday

struct Date {
    int year = 2021;
    int month = 1;
    int day = 1;
};
Date parse_date(const std::string& iso); // "YYYY-MM-DD"

// "YYYY-MM-DDTHH:MM:SS" for the given slot offset from midnight of `start`.
std::string slot_timestamp(const Date& start, std::int64_t minutes_from_start);
std::string month_key(const Date& start, int day_index); // "YYYY-MM"

// Load CSV: header `timestamp,transformer_id,kw`, rows sorted by
// (transformer_id, timestamp). Reading clamps negative samples to zero and
// reports the count through `clamped` when non-null.
void write_load_csv(const std::string& path, const Date& start, const TimeGrid& grid,
                    const std::vector<std::string>& transformer_ids,
                    const std::vector<std::vector<double>>& load_kw);
std::vector<LoadSeries> read_load_csv(const std::string& path, std::size_t* clamped = nullptr);

// Hourly LMP CSV: header `timestamp,lmp_usd_per_mwh`.
void write_lmp_csv(const std::string& path, const Date& start, const std::vector<double>& hourly);
std::vector<double> read_lmp_csv(const std::string& path);

// Per-slot temperature CSV: header `timestamp,temp_c`.
void write_temperature_csv(const std::string& path, const Date& start, const TimeGrid& grid,
                           const std::vector<double>& temp_c);
std::vector<double> read_temperature_csv(const std::string& path);

// Monthly fuel price statistics CSV: header `month,fuel,mu,nu`.
void write_fuel_stats_csv(const std::string& path, const FuelStatsTable& table);
FuelStatsTable read_fuel_stats_csv(const std::string& path);

// Emission factor table CSV: header `fuel,emission_factor_kg_per_mwh`.
void write_fuel_table_csv(const std::string& path, const std::vector<FuelType>& fuels);
std::vector<FuelType> read_fuel_table_csv(const std::string& path);

}  // namespace eass
