// acovdiff: difference-based autocovariance estimation for series with a
// smooth trend plus a piecewise-constant component, and the Monte Carlo
// studies around it.
//
// Exit codes: 0 ok, 2 usage error, 3 data error, 4 experiment failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "acovdiff/config.hpp"
#include "acovdiff/csv.hpp"
#include "acovdiff/estimators.hpp"
#include "acovdiff/montecarlo.hpp"
#include "acovdiff/noise.hpp"
#include "acovdiff/signal.hpp"
#include "acovdiff/tables.hpp"
#include "acovdiff/theory.hpp"

namespace {

using nlohmann::json;
using namespace acovdiff;

int worker_count(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("ACOVDIFF_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 0;  // engine resolves to hardware concurrency
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

json estimate_to_json(const AcfEstimate& est) {
    json j;
    j["method"] = est.method == AcfEstimate::Method::Difference ? "difference" : "hvk";
    j["n"] = est.n;
    j["m"] = est.m;
    j["scheme"] = est.scheme;
    j["gamma"] = est.gamma;
    if (est.flagged) {
        j["rho"] = nullptr;
        j["flagged"] = true;
        j["warning"] = "gamma0 is not positive; autocorrelations are undefined";
    } else {
        j["rho"] = est.rho;
        j["flagged"] = false;
    }
    return j;
}

std::string estimate_to_csv(const AcfEstimate& est) {
    std::ostringstream out;
    out << "# method = " << (est.method == AcfEstimate::Method::Difference ? "difference" : "hvk")
        << "\n# n = " << est.n << "\n# m = " << est.m << "\n# scheme = " << est.scheme << "\n";
    if (est.flagged) out << "# warning = gamma0 is not positive; rho omitted\n";
    out << "lag,gamma,rho\n";
    for (std::size_t h = 0; h < est.gamma.size(); ++h) {
        out << h << "," << csv::format_full(est.gamma[h]) << ",";
        if (!est.flagged) out << csv::format_full(est.rho[h]);
        out << "\n";
    }
    return out.str();
}

ErrorModel noise_from_flags(const std::string& model, double gamma1, double phi,
                            const std::string& innovation) {
    if (model == "ma1") {
        if (innovation == "gaussian") return ErrorModel::ma1(gamma1, Innovation::Gaussian);
        if (innovation == "t4") return ErrorModel::ma1(gamma1, Innovation::StudentT4);
        throw std::invalid_argument("unknown innovation '" + innovation +
                                    "' (expected gaussian or t4)");
    }
    if (model == "ar1") return ErrorModel::ar1(phi);
    throw std::invalid_argument("unknown noise model '" + model + "' (expected ma1 or ar1)");
}

StepSignal signal_from_name(const std::string& name) {
    if (name == "six-jump") return six_jump_signal();
    if (name == "none") return StepSignal({0.0}, {0.0, 1.0});
    throw std::invalid_argument("unknown signal '" + name + "' (expected six-jump or none)");
}

std::string report_text(const mc::MseReport& report) {
    std::ostringstream out;
    out << "n=" << report.n << " replications=" << report.replications << " seed=" << report.seed
        << " noise=" << report.noise << " failed=" << report.failed << "\n";
    for (const auto& c : report.cells) {
        out << "  " << c.estimator << " rho" << c.lag << ": target="
            << csv::format_display(c.target) << " mse=" << csv::format_full(c.mse)
            << " bias=" << csv::format_full(c.bias) << " var=" << csv::format_full(c.variance)
            << " mse_se=" << csv::format_full(c.mse_se) << "\n";
    }
    for (const auto& g : report.gamma0) {
        out << "  " << g.estimator << " gamma0: mean=" << csv::format_full(g.mean)
            << " var=" << csv::format_full(g.variance) << " se_mean=" << csv::format_full(g.se_mean)
            << "\n";
    }
    return out.str();
}

json report_json(const mc::MseReport& report, const mc::ExperimentSpec& spec) {
    json j;
    j["n"] = report.n;
    j["replications"] = report.replications;
    j["seed"] = report.seed;
    j["noise"] = report.noise;
    j["failed"] = report.failed;
    j["cells"] = json::array();
    for (const auto& c : report.cells) {
        j["cells"].push_back({{"estimator", c.estimator},
                              {"lag", c.lag},
                              {"target", c.target},
                              {"mse", c.mse},
                              {"bias", c.bias},
                              {"variance", c.variance},
                              {"mse_se", c.mse_se},
                              {"replications_used", c.used}});
    }
    j["gamma0"] = json::array();
    const double jk = quadratic_variation(spec.signal);
    const auto truth = true_acf(spec.noise, 0);
    for (const auto& g : report.gamma0) {
        json entry{{"estimator", g.estimator},
                   {"mean", g.mean},
                   {"variance", g.variance},
                   {"se_mean", g.se_mean}};
        // Expansion evaluations apply to difference estimators under
        // m-dependent noise.
        if (g.estimator.rfind("difference", 0) == 0 && spec.noise.is_m_dependent()) {
            for (const auto& est : spec.estimators) {
                if (est.label() != g.estimator) continue;
                const auto mean_pred = theory::predict_mean_gamma0(truth[0], est.m, report.n, jk,
                                                                   total_variation(spec.signal));
                const auto var_pred = theory::predict_var_gamma0(truth[0], est.m, report.n, jk);
                entry["predicted_mean"] = mean_pred.value;
                entry["predicted_mean_remainder_order"] = mean_pred.remainder_order;
                entry["predicted_variance"] = var_pred.value;
            }
        }
        j["gamma0"].push_back(entry);
    }
    return j;
}

std::string report_csv(const mc::MseReport& report, const mc::ExperimentSpec& spec) {
    std::ostringstream out;
    out << "# n = " << report.n << "\n# replications = " << report.replications
        << "\n# seed = " << report.seed << "\n# noise = " << report.noise
        << "\n# failed = " << report.failed << "\n";
    out << "estimator,lag,target,mse,bias,variance,mse_se,replications_used,"
           "predicted_mean_gamma0,predicted_var_gamma0\n";
    const double jk = quadratic_variation(spec.signal);
    const auto truth = true_acf(spec.noise, 0);
    for (const auto& c : report.cells) {
        out << c.estimator << "," << c.lag << "," << csv::format_full(c.target) << ","
            << csv::format_full(c.mse) << "," << csv::format_full(c.bias) << ","
            << csv::format_full(c.variance) << "," << csv::format_full(c.mse_se) << "," << c.used;
        // Expansion evaluations apply to the difference estimator under
        // m-dependent noise; other rows leave the columns empty.
        bool attach = c.estimator.rfind("difference", 0) == 0 && spec.noise.is_m_dependent();
        if (attach) {
            long m = 0;
            for (const auto& est : spec.estimators) {
                if (est.label() == c.estimator) m = est.m;
            }
            out << ","
                << csv::format_full(
                       theory::predict_mean_gamma0(truth[0], m, report.n, jk).value)
                << ","
                << csv::format_full(theory::predict_var_gamma0(truth[0], m, report.n, jk).value);
        } else {
            out << ",,";
        }
        out << "\n";
    }
    return out.str();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"difference-based autocovariance estimation for change-point regression"};
    app.require_subcommand(1);

    // --- estimate ---------------------------------------------------------
    auto* estimate = app.add_subcommand("estimate", "estimate the ACF of a series in a CSV file");
    std::string est_input, est_column, est_method = "difference", est_format = "json",
                est_output;
    long est_m = 1, est_maxlag = 1;
    double est_d0 = 1.0, est_d1 = -1.0;
    estimate->add_option("--input", est_input, "CSV file with the series")->required();
    estimate->add_option("--column", est_column, "column name when the file has several");
    estimate->add_option("--method", est_method, "difference or hvk")
        ->check(CLI::IsMember({"difference", "hvk"}));
    estimate->add_option("--m", est_m, "difference estimator order (lags 1..m)");
    estimate->add_option("--d0", est_d0, "first difference weight");
    estimate->add_option("--d1", est_d1, "second difference weight");
    estimate->add_option("--maxlag", est_maxlag, "lags for the hvk baseline");
    estimate->add_option("--format", est_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    estimate->add_option("--output", est_output, "write to file instead of stdout");

    // --- simulate ---------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "draw one series from a scenario");
    std::string sim_signal = "six-jump", sim_f = "zero", sim_model = "ma1",
                sim_innovation = "gaussian", sim_output;
    double sim_gamma1 = 0.0, sim_phi = 0.0;
    long sim_n = 0;
    std::uint64_t sim_seed = 1;
    simulate->add_option("--signal", sim_signal, "six-jump or none");
    simulate->add_option("--f", sim_f, "smooth component: zero, f1, f2 or f3");
    simulate->add_option("--noise", sim_model, "ma1 or ar1");
    simulate->add_option("--gamma1", sim_gamma1, "lag-1 autocorrelation of the ma1 noise");
    simulate->add_option("--phi", sim_phi, "ar1 coefficient");
    simulate->add_option("--innovation", sim_innovation, "gaussian or t4");
    simulate->add_option("--n", sim_n, "series length")->required();
    simulate->add_option("--seed", sim_seed, "master seed (echoed in the output)");
    simulate->add_option("--output", sim_output, "write to file instead of stdout");

    // --- mse-study --------------------------------------------------------
    auto* study = app.add_subcommand("mse-study", "run a Monte Carlo experiment from a config");
    std::string study_config, study_output, study_json;
    int study_workers = 0;
    std::int64_t study_seed = -1;
    study->add_option("--config", study_config, "experiment configuration file")->required();
    study->add_option("--seed", study_seed, "override the seed in the config");
    study->add_option("--workers", study_workers, "worker threads (ACOVDIFF_WORKERS fallback)");
    study->add_option("--output", study_output, "also write a CSV report here");
    study->add_option("--json", study_json, "also write a JSON report here");

    // --- tables -----------------------------------------------------------
    auto* tables_cmd = app.add_subcommand("tables", "reproduce one of the shipped studies");
    std::string table_id, table_prefix;
    std::uint64_t table_seed = 1;
    int table_workers = 0;
    long table_reps = 0;
    tables_cmd->add_option("--table", table_id, "T1..T7")
        ->required()
        ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "T5", "T6", "T7"}));
    tables_cmd->add_option("--seed", table_seed, "master seed");
    tables_cmd->add_option("--workers", table_workers, "worker threads");
    tables_cmd->add_option("--replications", table_reps, "override the default 500");
    tables_cmd->add_option("--output-prefix", table_prefix,
                           "write <prefix>.txt and <prefix>.csv");

    // --- rate-study -------------------------------------------------------
    auto* rate = app.add_subcommand("rate-study", "MSE decay across sample sizes");
    std::string rate_config, rate_output;
    std::vector<long> rate_grid;
    int rate_workers = 0;
    rate->add_option("--config", rate_config, "experiment configuration file")->required();
    rate->add_option("--n-grid", rate_grid, "increasing sample sizes (at least three)")
        ->required()
        ->delimiter(',');
    rate->add_option("--workers", rate_workers, "worker threads");
    rate->add_option("--output", rate_output, "also write a CSV report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, usage errors exit 2
    }

    if (estimate->parsed()) {
        const auto series = csv::read_series(est_input, est_column);
        const AcfEstimate est = est_method == "difference"
                                    ? estimate_acf(series, est_m, est_d0, est_d1)
                                    : estimate_acf_hvk(series, est_maxlag);
        const std::string text =
            est_format == "json" ? estimate_to_json(est).dump(2) + "\n" : estimate_to_csv(est);
        if (est_output.empty()) {
            std::cout << text;
        } else {
            write_text(est_output, text);
        }
        return 0;
    }

    if (simulate->parsed()) {
        if (sim_n < 2) throw std::invalid_argument("simulate: --n must be at least 2");
        const StepSignal signal = signal_from_name(sim_signal);
        const SmoothComponent smooth = SmoothComponent::by_name(sim_f);
        const ErrorModel model = noise_from_flags(sim_model, sim_gamma1, sim_phi, sim_innovation);
        const auto mean = evaluate_mean(signal, smooth, sim_n);
        const auto noise = NoiseStream(model, sim_seed, 0).generate(sim_n);

        std::ostringstream out;
        out << "# acovdiff simulate\n# signal = " << sim_signal << "\n# f = " << sim_f
            << "\n# noise = " << model.describe() << "\n# n = " << sim_n
            << "\n# seed = " << sim_seed << "\n";
        out << "index,mean,noise,y\n";
        for (long i = 0; i < sim_n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            out << (i + 1) << "," << csv::format_full(mean[idx]) << ","
                << csv::format_full(noise[idx]) << "," << csv::format_full(mean[idx] + noise[idx])
                << "\n";
        }
        if (sim_output.empty()) {
            std::cout << out.str();
        } else {
            write_text(sim_output, out.str());
        }
        return 0;
    }

    if (study->parsed()) {
        auto spec = config::load_experiment(config::parse_file(study_config));
        if (study_seed >= 0) spec.seed = static_cast<std::uint64_t>(study_seed);
        const auto report = mc::run_experiment(spec, worker_count(study_workers));
        std::cout << report_text(report);
        if (!study_output.empty()) write_text(study_output, report_csv(report, spec));
        if (!study_json.empty()) write_text(study_json, report_json(report, spec).dump(2) + "\n");
        return 0;
    }

    if (tables_cmd->parsed()) {
        const auto id = tables::parse_table_id(table_id);
        const auto result =
            tables::run_table(id, table_seed, worker_count(table_workers), table_reps);
        std::cout << result.rendered();
        if (!table_prefix.empty()) {
            write_text(table_prefix + ".txt", result.rendered());
            write_text(table_prefix + ".csv", result.csv());
        }
        return 0;
    }

    if (rate->parsed()) {
        const auto spec = config::load_experiment(config::parse_file(rate_config));
        const auto report = mc::run_rate_study(spec, rate_grid, worker_count(rate_workers));
        std::ostringstream out;
        std::ostringstream csv_out;
        csv_out << "estimator,lag,n,mse,n_times_mse,slope\n";
        for (const auto& entry : report.entries) {
            out << entry.estimator << " rho" << entry.lag << ": slope=" << csv::format_display(
                entry.slope) << "  n*mse ratio=" << csv::format_display(entry.n_mse_ratio())
                << "\n";
            for (const auto& pt : entry.points) {
                out << "    n=" << pt.n << " mse=" << csv::format_full(pt.mse) << "\n";
                csv_out << entry.estimator << "," << entry.lag << "," << pt.n << ","
                        << csv::format_full(pt.mse) << ","
                        << csv::format_full(static_cast<double>(pt.n) * pt.mse) << ","
                        << csv::format_full(entry.slope) << "\n";
            }
        }
        std::cout << out.str();
        if (!rate_output.empty()) write_text(rate_output, csv_out.str());
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const mc::ExperimentError& e) {
        std::cerr << "experiment failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
