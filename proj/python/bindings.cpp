#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fotf/error.hpp"
#include "fotf/io.hpp"
#include "fotf/pipelines.hpp"

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace fotf;

PYBIND11_MODULE(_fotf, m) {
    m.doc() = "Fractional-order pole-zero cancellation toolkit";

    py::register_exception<Error>(m, "FotfError");

    py::class_<FractionalPoly>(m, "FractionalPoly")
        .def(py::init<int, std::vector<double>>(), py::arg("base_v"), py::arg("coeffs"))
        .def_property_readonly("base_v", &FractionalPoly::base_v)
        .def_property_readonly("coeffs", &FractionalPoly::coeffs)
        .def("degree", &FractionalPoly::degree);

    py::class_<CommensurateTf>(m, "CommensurateTf")
        .def(py::init<FractionalPoly, FractionalPoly>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("base_v", &CommensurateTf::base_v)
        .def_property_readonly("num", &CommensurateTf::num)
        .def_property_readonly("den", &CommensurateTf::den)
        .def("evaluate", &CommensurateTf::evaluate, py::arg("s"))
        .def("to_json", [](const CommensurateTf& tf) { return tf_to_json(tf).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return tf_from_json(nlohmann::json::parse(text)); });

    m.def("make_canceller",
          [](double lam, int v) { return make_canceller({lam, v}); },
          py::arg("lam"), py::arg("v"));
    m.def("make_ratio_canceller", &make_ratio_canceller, py::arg("p"), py::arg("z"), py::arg("v"));
    m.def("from_rational", &from_rational, py::arg("num"), py::arg("den"));

    py::enum_<CombineMode>(m, "CombineMode")
        .value("SERIES_PRODUCT", CombineMode::SeriesProduct)
        .value("QUOTIENT", CombineMode::Quotient)
        .value("UNITY_FEEDBACK_CLOSURE", CombineMode::UnityFeedbackClosure);
    m.def("combine", &combine, py::arg("a"), py::arg("b"), py::arg("mode"));

    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def(py::init<std::vector<double>>(), py::arg("omega"))
        .def_static("log_spaced", &FrequencyGrid::log_spaced,
                    py::arg("omega_min"), py::arg("omega_max"), py::arg("n"))
        .def_static("default_grid", &FrequencyGrid::default_grid)
        .def_property_readonly("omega", &FrequencyGrid::omega);

    py::class_<FrequencyResponse>(m, "FrequencyResponse")
        .def_readonly("omega", &FrequencyResponse::omega)
        .def_readonly("value", &FrequencyResponse::value)
        .def_readonly("mag_db", &FrequencyResponse::mag_db)
        .def_readonly("phase_deg", &FrequencyResponse::phase_deg);
    m.def("frequency_response", &frequency_response, py::arg("tf"), py::arg("grid"));

    py::class_<MarginReport>(m, "MarginReport")
        .def_readonly("phase_margin_deg", &MarginReport::phase_margin_deg)
        .def_readonly("gain_margin_db", &MarginReport::gain_margin_db)
        .def_readonly("gain_crossover_rad_s", &MarginReport::gain_crossover_rad_s)
        .def_readonly("phase_crossover_rad_s", &MarginReport::phase_crossover_rad_s)
        .def_readonly("gain_crossings", &MarginReport::gain_crossings)
        .def_readonly("phase_crossings", &MarginReport::phase_crossings);
    m.def("margins", &margins, py::arg("response"));

    py::enum_<Verdict>(m, "Verdict")
        .value("STABLE", Verdict::Stable)
        .value("UNSTABLE", Verdict::Unstable)
        .value("MARGINAL", Verdict::Marginal);

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("base_v", &StabilityReport::base_v)
        .def_readonly("sector_half_angle", &StabilityReport::sector_half_angle)
        .def_readonly("verdict", &StabilityReport::verdict)
        .def_property_readonly("roots", [](const StabilityReport& r) {
            std::vector<Complex> out;
            for (const auto& root : r.roots) out.push_back(root.w);
            return out;
        });
    m.def("matignon_stable", &matignon_stable, py::arg("tf"));

    py::class_<InternalStabilityReport>(m, "InternalStabilityReport")
        .def_readonly("overall", &InternalStabilityReport::overall)
        .def_readonly("reference_to_control", &InternalStabilityReport::reference_to_control);
    m.def("internal_stability", &internal_stability, py::arg("plant"), py::arg("controller"));

    py::class_<RationalTf>(m, "RationalTf")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("num"), py::arg("den"))
        .def_readonly("num", &RationalTf::num)
        .def_readonly("den", &RationalTf::den)
        .def("evaluate", &RationalTf::evaluate, py::arg("s"));

    py::class_<FitConfig>(m, "FitConfig")
        .def(py::init<>())
        .def_readwrite("omega_min", &FitConfig::omega_min)
        .def_readwrite("omega_max", &FitConfig::omega_max)
        .def_readwrite("n_points", &FitConfig::n_points)
        .def_readwrite("num_order", &FitConfig::num_order)
        .def_readwrite("den_order", &FitConfig::den_order)
        .def_readwrite("sk_iterations", &FitConfig::sk_iterations)
        .def_readwrite("minimax_iterations", &FitConfig::minimax_iterations);

    py::class_<FitReport>(m, "FitReport")
        .def_readonly("model", &FitReport::model)
        .def_readonly("max_mag_error_db", &FitReport::max_mag_error_db)
        .def_readonly("max_phase_error_deg", &FitReport::max_phase_error_deg)
        .def_readonly("residual_per_iteration", &FitReport::residual_per_iteration)
        .def_readonly("sk_improved", &FitReport::sk_improved);
    m.def("fit_rational", &fit_rational, py::arg("target"), py::arg("config"));
    m.def("fractional_response_of", &fractional_response_of, py::arg("tf"), py::arg("config"));
    m.def("augment", &augment, py::arg("base"), py::arg("extra_zeros"),
          py::arg("extra_integrator_poles"));

    py::class_<StepResponse>(m, "StepResponse")
        .def_readonly("t", &StepResponse::t)
        .def_readonly("y", &StepResponse::y)
        .def_readonly("dt", &StepResponse::dt)
        .def_readonly("truncated", &StepResponse::truncated);

    py::class_<StepMetrics>(m, "StepMetrics")
        .def_readonly("y_bar", &StepMetrics::y_bar)
        .def_readonly("r_us", &StepMetrics::r_us)
        .def_readonly("r_us_unclamped", &StepMetrics::r_us_unclamped)
        .def_readonly("r_os", &StepMetrics::r_os)
        .def_readonly("settling_time_s", &StepMetrics::settling_time_s)
        .def_readonly("settled", &StepMetrics::settled)
        .def_readonly("undershoot_lower_bound", &StepMetrics::undershoot_lower_bound);

    py::class_<FractionalStepResult>(m, "FractionalStepResult")
        .def_readonly("response", &FractionalStepResult::response)
        .def_readonly("metrics", &FractionalStepResult::metrics)
        .def_readonly("fit", &FractionalStepResult::fit);

    m.def("step_of_fractional",
          [](const CommensurateTf& tf, const FitConfig& cfg, double t_max, double dt,
             std::optional<double> lam) {
              return step_of_fractional(tf, cfg, t_max, dt, lam);
          },
          py::arg("tf"), py::arg("config"), py::arg("t_max"), py::arg("dt"),
          py::arg("zero_lambda") = std::nullopt);
}
