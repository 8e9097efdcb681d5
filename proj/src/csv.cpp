#include "eass/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eass {

std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = unsigned(y - era * 400);
    const unsigned doy = (153u * unsigned(m + (m > 2 ? -3 : 9)) + 2u) / 5u + unsigned(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + std::int64_t(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = unsigned(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = std::int64_t(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = int(doy - (153 * mp + 2) / 5 + 1);
    month = int(mp < 10 ? mp + 3 : mp - 9);
    year = int(y + (month <= 2));
}

int weekday_from_days(std::int64_t days) {
    // day 0 (1970-01-01) was a Thursday
    return int(((days % 7) + 10) % 7);
}

Date parse_date(const std::string& iso) {
    Date d;
    char dash1 = 0, dash2 = 0;
    std::istringstream in(iso.substr(0, 10));
    if (!(in >> d.year >> dash1 >> d.month >> dash2 >> d.day) || dash1 != '-' || dash2 != '-' ||
        d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
        throw ConfigError("bad date: " + iso);
    return d;
}

std::string slot_timestamp(const Date& start, std::int64_t minutes_from_start) {
    const std::int64_t total_min = minutes_from_start;
    const std::int64_t day = days_from_civil(start.year, start.month, start.day) + total_min / 1440;
    const int min_of_day = int(total_min % 1440);
    int y, m, d;
    civil_from_days(day, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:00", y, m, d, min_of_day / 60,
                  min_of_day % 60);
    return buf;
}

std::string month_key(const Date& start, int day_index) {
    int y, m, d;
    civil_from_days(days_from_civil(start.year, start.month, start.day) + day_index, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", y, m);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // \n line endings on every platform
    if (!out) throw ConfigError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open: " + path);
    return in;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void expect_header(std::ifstream& in, const std::string& want, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty file: " + path);
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line != want)
        throw ConfigError("unexpected header in " + path + ": got '" + line + "', want '" + want +
                          "'");
}

double parse_num(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("bad number '" + s + "' in " + path);
    }
}

}  // namespace

void write_load_csv(const std::string& path, const Date& start, const TimeGrid& grid,
                    const std::vector<std::string>& transformer_ids,
                    const std::vector<std::vector<double>>& load_kw) {
    grid.validate();
    if (transformer_ids.size() != load_kw.size())
        throw ConfigError("write_load_csv: id/series arity mismatch");
    auto out = open_out(path);
    out << "timestamp,transformer_id,kw\n";
    std::vector<std::size_t> order(transformer_ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return transformer_ids[a] < transformer_ids[b];
    });
    char buf[64];
    for (std::size_t k : order) {
        if (int(load_kw[k].size()) != grid.total_slots())
            throw ConfigError("write_load_csv: series length mismatch for " + transformer_ids[k]);
        for (int t = 0; t < grid.total_slots(); ++t) {
            out << slot_timestamp(start, std::int64_t(t) * grid.slot_minutes) << ','
                << transformer_ids[k] << ',';
            std::snprintf(buf, sizeof buf, "%.4f", load_kw[k][std::size_t(t)]);
            out << buf << '\n';
        }
    }
}

std::vector<LoadSeries> read_load_csv(const std::string& path, std::size_t* clamped) {
    auto in = open_in(path);
    expect_header(in, "timestamp,transformer_id,kw", path);
    std::vector<LoadSeries> series;
    std::string line;
    std::size_t n_clamped = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 3) throw ConfigError("bad row in " + path + ": " + line);
        if (series.empty() || series.back().transformer_id != f[1]) {
            if (!series.empty() && f[1] < series.back().transformer_id)
                throw ConfigError(path + " is not sorted by transformer_id");
            series.push_back({f[1], {}});
        }
        series.back().values.push_back(parse_num(f[2], path));
    }
    for (auto& s : series) n_clamped += clamp_negative_loads(s.values);
    if (clamped) *clamped = n_clamped;
    return series;
}

void write_lmp_csv(const std::string& path, const Date& start, const std::vector<double>& hourly) {
    auto out = open_out(path);
    out << "timestamp,lmp_usd_per_mwh\n";
    char buf[64];
    for (std::size_t h = 0; h < hourly.size(); ++h) {
        std::snprintf(buf, sizeof buf, "%.4f", hourly[h]);
        out << slot_timestamp(start, std::int64_t(h) * 60) << ',' << buf << '\n';
    }
}

std::vector<double> read_lmp_csv(const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "timestamp,lmp_usd_per_mwh", path);
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 2) throw ConfigError("bad row in " + path + ": " + line);
        out.push_back(parse_num(f[1], path));
    }
    return out;
}

void write_temperature_csv(const std::string& path, const Date& start, const TimeGrid& grid,
                           const std::vector<double>& temp_c) {
    grid.validate();
    if (int(temp_c.size()) != grid.total_slots())
        throw ConfigError("write_temperature_csv: series length mismatch");
    auto out = open_out(path);
    out << "timestamp,temp_c\n";
    char buf[64];
    for (int t = 0; t < grid.total_slots(); ++t) {
        std::snprintf(buf, sizeof buf, "%.2f", temp_c[std::size_t(t)]);
        out << slot_timestamp(start, std::int64_t(t) * grid.slot_minutes) << ',' << buf << '\n';
    }
}

std::vector<double> read_temperature_csv(const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "timestamp,temp_c", path);
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 2) throw ConfigError("bad row in " + path + ": " + line);
        out.push_back(parse_num(f[1], path));
    }
    return out;
}

void write_fuel_stats_csv(const std::string& path, const FuelStatsTable& table) {
    auto out = open_out(path);
    out << "month,fuel,mu,nu\n";
    char buf[64];
    for (std::size_t m = 0; m < table.months.size(); ++m) {
        for (const auto& s : table.stats[m]) {
            std::snprintf(buf, sizeof buf, "%.4f,%.4f", s.mean_cost, s.std_cost);
            out << table.months[m] << ',' << s.fuel << ',' << buf << '\n';
        }
    }
}

FuelStatsTable read_fuel_stats_csv(const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "month,fuel,mu,nu", path);
    FuelStatsTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 4) throw ConfigError("bad row in " + path + ": " + line);
        if (table.months.empty() || table.months.back() != f[0]) {
            if (!table.months.empty() && f[0] < table.months.back())
                throw ConfigError(path + " is not sorted by month");
            table.months.push_back(f[0]);
            table.stats.emplace_back();
        }
        FuelPriceStats s{f[1], parse_num(f[2], path), parse_num(f[3], path)};
        s.validate();
        table.stats.back().push_back(std::move(s));
    }
    if (table.months.empty()) throw ConfigError("no fuel statistics rows in " + path);
    return table;
}

void write_fuel_table_csv(const std::string& path, const std::vector<FuelType>& fuels) {
    auto out = open_out(path);
    out << "fuel,emission_factor_kg_per_mwh\n";
    char buf[64];
    for (const auto& f : fuels) {
        std::snprintf(buf, sizeof buf, "%.2f", f.emission_factor_kg_per_mwh);
        out << f.name << ',' << buf << '\n';
    }
}

std::vector<FuelType> read_fuel_table_csv(const std::string& path) {
    auto in = open_in(path);
    expect_header(in, "fuel,emission_factor_kg_per_mwh", path);
    std::vector<FuelType> fuels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 2) throw ConfigError("bad row in " + path + ": " + line);
        FuelType ft{f[0], parse_num(f[1], path)};
        ft.validate();
        fuels.push_back(std::move(ft));
    }
    if (fuels.empty()) throw ConfigError("no fuel rows in " + path);
    return fuels;
}

}  // namespace eass
