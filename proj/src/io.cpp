#include "fotf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fotf/error.hpp"

namespace fotf {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
    if (std::isnan(x)) return "nan";
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

json num_or_sentinel(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

std::vector<double> coeff_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw_io(std::string("transfer-function JSON: missing array field '") + key + "'");
    }
    std::vector<double> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number()) throw_io(std::string("transfer-function JSON: non-numeric entry in '") + key + "'");
        out.push_back(e.get<double>());
    }
    if (out.empty()) throw_io(std::string("transfer-function JSON: empty '") + key + "'");
    return out;
}

}  // namespace

json tf_to_json(const CommensurateTf& tf) {
    return json{{"base_v", tf.base_v()},
                {"num", tf.num().coeffs()},
                {"den", tf.den().coeffs()}};
}

CommensurateTf tf_from_json(const json& j) {
    if (!j.is_object()) throw_io("transfer-function JSON: expected an object");
    int base_v = 1;
    if (j.contains("base_v")) {
        if (!j.at("base_v").is_number_integer()) throw_io("transfer-function JSON: base_v must be an integer");
        base_v = j.at("base_v").get<int>();
    }
    FractionalPoly num(base_v, coeff_array(j, "num"));
    FractionalPoly den(base_v, coeff_array(j, "den"));
    return CommensurateTf(std::move(num), std::move(den));
}

json margin_report_to_json(const MarginReport& rep) {
    return json{{"phase_margin_deg", num_or_sentinel(rep.phase_margin_deg)},
                {"gain_margin_db", num_or_sentinel(rep.gain_margin_db)},
                {"gain_crossover_rad_s", num_or_sentinel(rep.gain_crossover_rad_s)},
                {"phase_crossover_rad_s", num_or_sentinel(rep.phase_crossover_rad_s)},
                {"gain_crossings", rep.gain_crossings},
                {"phase_crossings", rep.phase_crossings}};
}

json stability_report_to_json(const StabilityReport& rep) {
    json roots = json::array();
    for (const auto& r : rep.roots) {
        roots.push_back(json{{"re", r.w.real()},
                             {"im", r.w.imag()},
                             {"arg_rad", r.arg_rad},
                             {"satisfies_sector", r.satisfies_sector}});
    }
    return json{{"base_v", rep.base_v},
                {"sector_half_angle_rad", rep.sector_half_angle},
                {"roots", roots},
                {"verdict", to_string(rep.verdict)}};
}

json internal_stability_to_json(const InternalStabilityReport& rep) {
    return json{{"sensitivity", stability_report_to_json(rep.sensitivity)},
                {"reference_to_control", stability_report_to_json(rep.reference_to_control)},
                {"disturbance_to_output", stability_report_to_json(rep.disturbance_to_output)},
                {"complementary", stability_report_to_json(rep.complementary)},
                {"verdict", to_string(rep.overall)}};
}

json fit_report_to_json(const FitReport& rep) {
    return json{{"model", json{{"base_v", 1}, {"num", rep.model.num}, {"den", rep.model.den}}},
                {"max_mag_error_db", rep.max_mag_error_db},
                {"max_phase_error_deg", rep.max_phase_error_deg},
                {"residual_per_iteration", rep.residual_per_iteration},
                {"sk_improved", rep.sk_improved}};
}

json metrics_to_json(const StepMetrics& m) {
    json j{{"y_bar", m.y_bar},
           {"r_us", m.r_us},
           {"r_us_unclamped", m.r_us_unclamped},
           {"r_os", m.r_os},
           {"settling_time_s", m.settling_time_s},
           {"settled", m.settled},
           {"settling_band", m.settling_band}};
    if (m.undershoot_lower_bound) {
        j["undershoot_lower_bound"] = *m.undershoot_lower_bound;
    } else {
        j["undershoot_lower_bound"] = nullptr;
    }
    return j;
}

std::string bode_csv(const FrequencyResponse& resp) {
    std::ostringstream os;
    os << "omega_rad_s,mag_db,phase_deg\n";
    for (size_t i = 0; i < resp.omega.size(); ++i) {
        os << format_double(resp.omega[i]) << ',' << format_double(resp.mag_db[i]) << ','
           << format_double(resp.phase_deg[i]) << '\n';
    }
    return os.str();
}

std::string trace_csv(const StepResponse& resp) {
    std::ostringstream os;
    os << "t_s,y\n";
    for (size_t i = 0; i < resp.t.size(); ++i) {
        os << format_double(resp.t[i]) << ',' << format_double(resp.y[i]) << '\n';
    }
    return os.str();
}

CommensurateTf load_tf(const std::string& path_or_inline_json) {
    std::string text;
    const bool looks_inline = !path_or_inline_json.empty() && path_or_inline_json.front() == '{';
    if (looks_inline) {
        text = path_or_inline_json;
    } else {
        std::ifstream in(path_or_inline_json);
        if (!in) throw_io("cannot open transfer-function file: " + path_or_inline_json);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw_io(std::string("transfer-function JSON parse error: ") + e.what());
    }
    return tf_from_json(j);
}

}  // namespace fotf
