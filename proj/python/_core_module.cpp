#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acovdiff/estimators.hpp"
#include "acovdiff/montecarlo.hpp"
#include "acovdiff/noise.hpp"
#include "acovdiff/signal.hpp"
#include "acovdiff/theory.hpp"

namespace py = pybind11;
using namespace acovdiff;

namespace {

py::dict estimate_to_dict(const AcfEstimate& est) {
    py::dict d;
    d["method"] = est.method == AcfEstimate::Method::Difference ? "difference" : "hvk";
    d["n"] = est.n;
    d["m"] = est.m;
    d["scheme"] = est.scheme;
    d["gamma"] = est.gamma;
    d["flagged"] = est.flagged;
    if (est.flagged) {
        d["rho"] = py::none();
    } else {
        d["rho"] = est.rho;
    }
    return d;
}

py::dict report_to_dict(const mc::MseReport& report) {
    py::dict d;
    d["n"] = report.n;
    d["replications"] = report.replications;
    d["seed"] = report.seed;
    d["noise"] = report.noise;
    d["failed"] = report.failed;
    py::list cells;
    for (const auto& c : report.cells) {
        py::dict cell;
        cell["estimator"] = c.estimator;
        cell["lag"] = c.lag;
        cell["target"] = c.target;
        cell["mse"] = c.mse;
        cell["bias"] = c.bias;
        cell["variance"] = c.variance;
        cell["mse_se"] = c.mse_se;
        cell["used"] = c.used;
        cells.append(cell);
    }
    d["cells"] = cells;
    py::list gamma0;
    for (const auto& g : report.gamma0) {
        py::dict entry;
        entry["estimator"] = g.estimator;
        entry["mean"] = g.mean;
        entry["variance"] = g.variance;
        entry["se_mean"] = g.se_mean;
        entry["used"] = g.used;
        gamma0.append(entry);
    }
    d["gamma0"] = gamma0;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "difference-based autocovariance estimation for change-point regression";

    py::class_<StepSignal>(m, "StepSignal")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("levels"),
             py::arg("breakpoints"))
        .def_property_readonly("levels", &StepSignal::levels)
        .def_property_readonly("breakpoints", &StepSignal::breakpoints)
        .def("segment_count", &StepSignal::segment_count)
        .def("jump_indices", &StepSignal::jump_indices, py::arg("n"));

    py::class_<DifferenceScheme>(m, "DifferenceScheme")
        .def(py::init<std::vector<double>, long>(), py::arg("weights"), py::arg("gap"))
        .def_property_readonly("weights", &DifferenceScheme::weights)
        .def_property_readonly("gap", &DifferenceScheme::gap)
        .def_property_readonly("order", &DifferenceScheme::order)
        .def_property_readonly("normalizer", &DifferenceScheme::normalizer);

    py::enum_<Innovation>(m, "Innovation")
        .value("gaussian", Innovation::Gaussian)
        .value("t4", Innovation::StudentT4);

    py::class_<ErrorModel>(m, "ErrorModel")
        .def_static("ma1", &ErrorModel::ma1, py::arg("gamma1"),
                    py::arg("innovation") = Innovation::Gaussian)
        .def_static("ar1", &ErrorModel::ar1, py::arg("phi"))
        .def("describe", &ErrorModel::describe);

    m.def("six_jump_signal", &six_jump_signal);
    m.def(
        "evaluate_mean",
        [](const StepSignal& step, const std::string& smooth, long n) {
            return evaluate_mean(step, SmoothComponent::by_name(smooth), n);
        },
        py::arg("step"), py::arg("smooth"), py::arg("n"));
    m.def("quadratic_variation", &quadratic_variation, py::arg("step"));
    m.def("total_variation", &total_variation, py::arg("step"));
    m.def("weighted_jump_functional", &weighted_jump_functional, py::arg("step"), py::arg("n"),
          py::arg("h"));
    m.def("scheme_bias_polynomial", &scheme_bias_polynomial, py::arg("scheme"));
    m.def("check_jump_separation", &check_jump_separation, py::arg("step"), py::arg("n"),
          py::arg("l"), py::arg("m"));

    m.def(
        "ma_coefficients",
        [](double gamma1) {
            const auto [r0, r1] = ma_coefficients(gamma1);
            return py::make_tuple(r0, r1);
        },
        py::arg("gamma1"));
    m.def("true_acf", &true_acf, py::arg("model"), py::arg("maxlag"));
    m.def(
        "generate_noise",
        [](const ErrorModel& model, long n, std::uint64_t seed, std::uint64_t stream) {
            return NoiseStream(model, seed, stream).generate(n);
        },
        py::arg("model"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);

    m.def(
        "quadratic_form",
        [](const std::vector<double>& y, const DifferenceScheme& scheme) {
            return quadratic_form(y, scheme);
        },
        py::arg("y"), py::arg("scheme"));
    m.def(
        "estimate_acf",
        [](const std::vector<double>& y, long m, double d0, double d1) {
            return estimate_to_dict(estimate_acf(y, m, d0, d1));
        },
        py::arg("y"), py::arg("m"), py::arg("d0") = 1.0, py::arg("d1") = -1.0);
    m.def(
        "estimate_acf_hvk",
        [](const std::vector<double>& y, long maxlag) {
            return estimate_to_dict(estimate_acf_hvk(y, maxlag));
        },
        py::arg("y"), py::arg("maxlag"));

    m.def(
        "predict_mean_gamma0",
        [](double gamma0, long m, long n, double jk) {
            return theory::predict_mean_gamma0(gamma0, m, n, jk).value;
        },
        py::arg("gamma0"), py::arg("m"), py::arg("n"), py::arg("jk"));
    m.def(
        "predict_var_gamma0",
        [](double gamma0, long m, long n, double jk) {
            return theory::predict_var_gamma0(gamma0, m, n, jk).value;
        },
        py::arg("gamma0"), py::arg("m"), py::arg("n"), py::arg("jk"));

    m.def(
        "run_experiment",
        [](const StepSignal& signal, const std::string& smooth, const ErrorModel& noise, long n,
           long replications, std::uint64_t seed, const std::vector<long>& lags,
           const std::vector<py::dict>& estimators, int workers) {
            mc::ExperimentSpec spec{signal, SmoothComponent::by_name(smooth), noise,     n,
                                    replications, seed, lags, {}};
            for (const auto& e : estimators) {
                const auto method = e["method"].cast<std::string>();
                if (method == "difference") {
                    spec.estimators.push_back(mc::EstimatorConfig::difference(
                        e["m"].cast<long>(), e.contains("d0") ? e["d0"].cast<double>() : 1.0,
                        e.contains("d1") ? e["d1"].cast<double>() : -1.0));
                } else if (method == "hvk") {
                    spec.estimators.push_back(
                        mc::EstimatorConfig::hvk(e["maxlag"].cast<long>()));
                } else {
                    throw std::invalid_argument("unknown estimator method '" + method + "'");
                }
            }
            return report_to_dict(mc::run_experiment(spec, workers));
        },
        py::arg("signal"), py::arg("smooth"), py::arg("noise"), py::arg("n"),
        py::arg("replications"), py::arg("seed"), py::arg("lags"), py::arg("estimators"),
        py::arg("workers") = 1);
}
