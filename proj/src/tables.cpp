#include "acovdiff/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "acovdiff/csv.hpp"
#include "acovdiff/rng.hpp"

namespace acovdiff::tables {

namespace {

const std::vector<double> kGamma1Grid = {-0.5, -0.4, -0.2, 0.0, 0.2, 0.4, 0.5};
const std::vector<double> kPhiGrid = {0.1, 0.2, 0.3, 0.4, 0.5};
const std::vector<std::string> kAllSmooth = {"f1", "f2", "f3"};

struct StudyDefinition {
    std::string title;
    std::string param_name;
    std::vector<double> params;
    std::vector<std::string> f_names;
    std::vector<mc::EstimatorConfig> estimators;
    long n = 1600;
};

StudyDefinition definition(TableId id) {
    StudyDefinition def;
    const auto diff2 = mc::EstimatorConfig::difference(2);
    switch (id) {
        case TableId::T1:
            def = {"MSE of rho1/rho2, 1-dependent Gaussian noise, difference estimator (m=2)",
                   "gamma1", kGamma1Grid, kAllSmooth, {diff2}, 1600};
            break;
        case TableId::T2:
            def = {"MSE of rho1/rho2, 1-dependent t4 noise, difference estimator (m=2)",
                   "gamma1", kGamma1Grid, kAllSmooth, {diff2}, 1600};
            break;
        case TableId::T3:
            def = {"MSE of rho1/rho2, 1-dependent Gaussian noise, n=3000, difference estimator (m=2)",
                   "gamma1", kGamma1Grid, kAllSmooth, {diff2}, 3000};
            break;
        case TableId::T4:
            def = {"MSE of rho1/rho2, AR(1) noise, difference estimator (m=2)",
                   "phi", kPhiGrid, kAllSmooth, {diff2}, 1600};
            break;
        case TableId::T5:
            def = {"MSE of rho1/rho2, AR(1) noise, Hall-Van Keilegom baseline",
                   "phi", kPhiGrid, kAllSmooth, {mc::EstimatorConfig::hvk(2)}, 1600};
            break;
        case TableId::T6:
            def = {"MSE of rho1/rho2, AR(1) noise, difference estimator (m=2) vs baseline",
                   "phi", kPhiGrid, kAllSmooth, {diff2, mc::EstimatorConfig::hvk(2)}, 1600};
            break;
        case TableId::T7:
            def = {"MSE of rho1/rho2, AR(1) noise, difference estimator (m=3), f1 only",
                   "phi", kPhiGrid, {"f1"}, {mc::EstimatorConfig::difference(3)}, 1600};
            break;
    }
    return def;
}

ErrorModel noise_for(TableId id, double param) {
    switch (id) {
        case TableId::T2:
            return ErrorModel::ma1(param, Innovation::StudentT4);
        case TableId::T1:
        case TableId::T3:
            return ErrorModel::ma1(param, Innovation::Gaussian);
        default:
            return ErrorModel::ar1(param);
    }
}

}  // namespace

TableId parse_table_id(const std::string& text) {
    static const std::vector<std::string> names = {"T1", "T2", "T3", "T4", "T5", "T6", "T7"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (text == names[i]) return static_cast<TableId>(i);
    }
    throw std::invalid_argument("unknown table '" + text + "' (expected T1..T7)");
}

std::string table_name(TableId id) {
    return "T" + std::to_string(static_cast<int>(id) + 1);
}

const TableCell& TableResult::cell(const std::string& f, double param,
                                   const std::string& estimator, long lag) const {
    for (const auto& c : cells) {
        if (c.f == f && c.param == param && c.estimator == estimator && c.lag == lag) return c;
    }
    throw std::out_of_range("TableResult: no cell (" + f + ", " + std::to_string(param) + ", " +
                            estimator + ", lag " + std::to_string(lag) + ")");
}

std::string TableResult::rendered() const {
    std::ostringstream out;
    out << table_name(id) << ": " << title << "\n";
    out << "n=" << n << "  replications=" << replications << "  seed=" << seed << "\n\n";

    std::size_t label_width = 4;
    std::vector<std::string> row_labels;
    for (const auto& f : f_names) {
        for (const auto& est : estimators) {
            std::string label = estimators.size() > 1 ? f + " " + est : f;
            label_width = std::max(label_width, label.size());
            row_labels.push_back(label);
        }
    }

    out << std::string(label_width, ' ');
    for (double p : params) {
        std::ostringstream head;
        head << param_name << "=" << p;
        std::string h = head.str();
        const std::size_t cell_width = lags.size() * 7 + (lags.size() - 1) * 2;
        if (h.size() < cell_width) h += std::string(cell_width - h.size(), ' ');
        out << "  " << h;
    }
    out << "\n" << std::string(label_width, ' ');
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        for (long lag : lags) {
            std::string h = "rho" + std::to_string(lag);
            out << "  " << h << std::string(7 - h.size(), ' ');
        }
    }
    out << "\n";

    std::size_t row = 0;
    for (const auto& f : f_names) {
        for (const auto& est : estimators) {
            std::string label = row_labels[row++];
            out << label << std::string(label_width - label.size(), ' ');
            for (double p : params) {
                for (long lag : lags) {
                    out << "  " << csv::format_display(cell(f, p, est, lag).mse) << " ";
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string TableResult::csv() const {
    std::ostringstream out;
    out << "# " << table_name(id) << ": " << title << "\n";
    out << "# n = " << n << "\n# replications = " << replications << "\n# seed = " << seed
        << "\n";
    out << "table,f," << param_name << ",estimator,lag,target,mse,mse_se,replications_used\n";
    for (const auto& c : cells) {
        out << table_name(id) << "," << c.f << "," << csv::format_full(c.param) << ","
            << c.estimator << "," << c.lag << "," << csv::format_full(c.target) << ","
            << csv::format_full(c.mse) << "," << csv::format_full(c.mse_se) << "," << c.used
            << "\n";
    }
    return out.str();
}

TableResult run_table(TableId id, std::uint64_t seed, int workers, long replications) {
    const StudyDefinition def = definition(id);
    const long reps = replications > 0 ? replications : 500;

    TableResult result;
    result.id = id;
    result.title = def.title;
    result.param_name = def.param_name;
    result.params = def.params;
    result.f_names = def.f_names;
    for (const auto& est : def.estimators) result.estimators.push_back(est.label());
    result.lags = {1, 2};
    result.n = def.n;
    result.replications = reps;
    result.seed = seed;

    std::uint64_t cell_index = 0;
    for (const auto& f : def.f_names) {
        for (double param : def.params) {
            mc::ExperimentSpec spec{six_jump_signal(),
                                    SmoothComponent::by_name(f),
                                    noise_for(id, param),
                                    def.n,
                                    reps,
                                    rng::derive_stream_key(
                                        seed, cell_index++,
                                        100 + static_cast<std::uint64_t>(id)),
                                    result.lags,
                                    def.estimators};
            const mc::MseReport report = mc::run_experiment(spec, workers);
            for (const auto& est : result.estimators) {
                for (long lag : result.lags) {
                    const auto& stats = report.cell(est, lag);
                    TableCell cell;
                    cell.f = f;
                    cell.param = param;
                    cell.estimator = est;
                    cell.lag = lag;
                    cell.target = stats.target;
                    cell.mse = stats.mse;
                    cell.mse_se = stats.mse_se;
                    cell.used = stats.used;
                    result.cells.push_back(cell);
                }
            }
        }
    }
    return result;
}

}  // namespace acovdiff::tables
