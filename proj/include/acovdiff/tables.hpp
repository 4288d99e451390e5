#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acovdiff/montecarlo.hpp"

namespace acovdiff::tables {

/// The simulation studies shipped with the tool. All use the six-jump
/// signal with 500 replications of size 1600 unless noted.
///
///   T1  MSE grid, 1-dependent Gaussian noise, difference estimator m=2
///   T2  as T1 with unstandardized t4 innovations
///   T3  as T1 with n = 3000
///   T4  AR(1) noise, phi in 0.1..0.5, difference estimator m=2
///   T5  AR(1) noise, Hall-Van Keilegom baseline
///   T6  AR(1) noise, difference m=2 and the baseline side by side
///   T7  AR(1) noise, difference estimator m=3, f1 only
enum class TableId { T1, T2, T3, T4, T5, T6, T7 };

TableId parse_table_id(const std::string& text);
std::string table_name(TableId id);

struct TableCell {
    std::string f;
    double param = 0.0;
    std::string estimator;
    long lag = 0;
    double target = 0.0;
    double mse = 0.0;
    double mse_se = 0.0;
    long used = 0;
};

struct TableResult {
    TableId id;
    std::string title;
    std::string param_name;  // "gamma1" or "phi"
    std::vector<double> params;
    std::vector<std::string> f_names;
    std::vector<std::string> estimators;
    std::vector<long> lags;
    long n = 0;
    long replications = 0;
    std::uint64_t seed = 0;
    std::vector<TableCell> cells;

    const TableCell& cell(const std::string& f, double param, const std::string& estimator,
                          long lag) const;

    /// Text rendering: one row per (f, estimator), param columns, 4-decimal MSEs.
    std::string rendered() const;

    /// Flat CSV, one row per cell, full precision, '#' metadata header.
    std::string csv() const;
};

/// Runs one study. `replications` 0 keeps the study default (500).
TableResult run_table(TableId id, std::uint64_t seed, int workers = 1, long replications = 0);

}  // namespace acovdiff::tables
