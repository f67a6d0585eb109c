// Command-line front end: Bode data, margins, Matignon stability,
// canceller construction, rational fitting, step metrics, and the
// bundled worked examples.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "fotf/error.hpp"
#include "fotf/io.hpp"
#include "fotf/pipelines.hpp"

using namespace fotf;
using nlohmann::json;

namespace {

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw_io("cannot open output file: " + path);
    out << text;
}

struct GridOpts {
    double omega_min = 1e-3;
    double omega_max = 1e3;
    int n_points = 1000;

    FrequencyGrid grid() const { return FrequencyGrid::log_spaced(omega_min, omega_max, n_points); }

    void attach(CLI::App* cmd) {
        cmd->add_option("--omega-min", omega_min, "Grid start (rad/s)");
        cmd->add_option("--omega-max", omega_max, "Grid end (rad/s)");
        cmd->add_option("--points", n_points, "Grid point count");
    }
};

struct FitOpts {
    FitConfig cfg;

    void attach(CLI::App* cmd) {
        cmd->add_option("--omega-min", cfg.omega_min, "Fit band start (rad/s)");
        cmd->add_option("--omega-max", cfg.omega_max, "Fit band end (rad/s)");
        cmd->add_option("--points", cfg.n_points, "Fit grid point count");
        cmd->add_option("--num-order", cfg.num_order, "Numerator order");
        cmd->add_option("--den-order", cfg.den_order, "Denominator order");
        cmd->add_option("--sk-iterations", cfg.sk_iterations, "Sanathanan-Koerner passes");
        cmd->add_option("--minimax-iterations", cfg.minimax_iterations,
                        "Lawson minimax refinement passes");
    }
};

json undershoot_run_json(const pipelines::UndershootRun& run) {
    auto entry = [](const FractionalStepResult& r) {
        return json{{"metrics", metrics_to_json(r.metrics)},
                    {"fit", fit_report_to_json(r.fit)}};
    };
    return json{{"P1", entry(run.p1)}, {"P2", entry(run.p2)}, {"P3", entry(run.p3)}};
}

int run_example(const std::string& id, const std::string& out_path, const std::string& trace_dir) {
    json out;
    if (id == "1") {
        auto run = pipelines::run_undershoot_study();
        out = undershoot_run_json(run);
        if (!trace_dir.empty()) {
            write_output(trace_dir + "/step_p1.csv", trace_csv(run.p1.response));
            write_output(trace_dir + "/step_p2.csv", trace_csv(run.p2.response));
            write_output(trace_dir + "/step_p3.csv", trace_csv(run.p3.response));
        }
    } else if (id == "2") {
        json rows = json::array();
        for (const auto& row : pipelines::run_margin_study()) {
            rows.push_back(json{{"system", row.label},
                                {"margins", margin_report_to_json(row.report)}});
        }
        out = json{{"table", rows}};
    } else if (id == "internal-stability") {
        auto demo = pipelines::run_internal_stability_demo();
        out = json{{"plant", tf_to_json(demo.plant)},
                   {"fractional_controller", tf_to_json(demo.fractional_controller)},
                   {"reference_to_control", tf_to_json(demo.reference_to_control)},
                   {"fractional_verdict", internal_stability_to_json(demo.fractional_verdict)},
                   {"cancelling_verdict", internal_stability_to_json(demo.cancelling_verdict)}};
    } else if (id == "pendulum-fit") {
        auto res = pipelines::run_pendulum_fit();
        out = json{{"plant", tf_to_json(res.setup.plant())},
                   {"fit_core", tf_to_json(res.setup.fit_core())},
                   {"ratio_canceller", tf_to_json(res.setup.ratio_canceller())},
                   {"core_fit", fit_report_to_json(res.core_fit)},
                   {"augmented", json{{"base_v", 1},
                                      {"num", res.augmented.num},
                                      {"den", res.augmented.den}}},
                   {"canceller_fit", fit_report_to_json(res.canceller_fit)}};
    } else {
        throw_domain("unknown example id: " + id +
                     " (expected 1, 2, internal-stability, pendulum-fit)");
    }
    write_output(out_path, out.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional-order pole-zero cancellation toolkit"};
    app.require_subcommand(1);

    std::string tf_arg, plant_arg, ctrl_arg, out_path, trace_dir, example_id;
    double lambda = 1.0, p_val = 1.0, z_val = 1.0;
    int v_val = 2;
    bool ratio = false;
    double t_max = 40.0, dt = 1e-3;
    double settle_lambda = 0.0;
    GridOpts grid_opts;
    FitOpts fit_opts;
    FitOpts step_fit_opts;
    step_fit_opts.cfg.num_order = 8;
    step_fit_opts.cfg.den_order = 8;

    auto* bode = app.add_subcommand("bode", "Bode CSV of a transfer function");
    bode->add_option("--tf", tf_arg, "Transfer-function JSON (path or inline)")->required();
    bode->add_option("-o,--output", out_path, "Output path (default stdout)");
    grid_opts.attach(bode);

    auto* marg = app.add_subcommand("margins", "Gain/phase margins of a loop transfer function");
    marg->add_option("--tf", tf_arg, "Transfer-function JSON (path or inline)")->required();
    marg->add_option("-o,--output", out_path, "Output path (default stdout)");
    grid_opts.attach(marg);

    auto* stab = app.add_subcommand("stability", "Matignon sector test");
    stab->add_option("--tf", tf_arg, "Transfer-function JSON (path or inline)")->required();
    stab->add_option("-o,--output", out_path, "Output path (default stdout)");

    auto* istab = app.add_subcommand("internal-stability", "Four-transfer-function loop test");
    istab->add_option("--plant", plant_arg, "Plant JSON (path or inline)")->required();
    istab->add_option("--controller", ctrl_arg, "Controller JSON (path or inline)")->required();
    istab->add_option("-o,--output", out_path, "Output path (default stdout)");

    auto* cancel = app.add_subcommand("cancel", "Construct a fractional canceller");
    cancel->add_option("--lambda", lambda, "Zero/pole location (rad/s)");
    cancel->add_option("--v", v_val, "Expansion depth (power of two >= 2)");
    cancel->add_flag("--ratio", ratio, "Build Q_{p,v}/Q_{z,v} instead");
    cancel->add_option("--p", p_val, "Pole location for --ratio");
    cancel->add_option("--z", z_val, "Zero location for --ratio");
    cancel->add_option("-o,--output", out_path, "Output path (default stdout)");

    auto* fit = app.add_subcommand("fit", "Integer-order rational fit of a transfer function");
    fit->add_option("--tf", tf_arg, "Transfer-function JSON (path or inline)")->required();
    fit->add_option("-o,--output", out_path, "Output path (default stdout)");
    fit_opts.attach(fit);

    auto* step = app.add_subcommand("step", "Step response and metrics");
    step->add_option("--tf", tf_arg, "Transfer-function JSON (path or inline)")->required();
    step->add_option("--t-max", t_max, "Horizon (s)");
    step->add_option("--dt", dt, "Time step (s)");
    step->add_option("--zero-lambda", settle_lambda,
                     "Zero frequency for the undershoot lower bound");
    step->add_option("-o,--output", out_path, "Metrics JSON path (default stdout)");
    step->add_option("--trace", trace_dir, "Trace CSV path");
    step_fit_opts.attach(step);

    auto* example = app.add_subcommand("example", "Reproduce a bundled worked example");
    example->add_option("id", example_id, "1 | 2 | internal-stability | pendulum-fit")->required();
    example->add_option("-o,--output", out_path, "Report JSON path (default stdout)");
    example->add_option("--trace-dir", trace_dir, "Directory for step trace CSVs (example 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (bode->parsed()) {
            write_output(out_path, bode_csv(frequency_response(load_tf(tf_arg), grid_opts.grid())));
        } else if (marg->parsed()) {
            MarginReport rep = margins(frequency_response(load_tf(tf_arg), grid_opts.grid()));
            write_output(out_path, margin_report_to_json(rep).dump(2));
        } else if (stab->parsed()) {
            write_output(out_path, stability_report_to_json(matignon_stable(load_tf(tf_arg))).dump(2));
        } else if (istab->parsed()) {
            auto rep = internal_stability(load_tf(plant_arg), load_tf(ctrl_arg));
            write_output(out_path, internal_stability_to_json(rep).dump(2));
        } else if (cancel->parsed()) {
            CommensurateTf q = ratio ? make_ratio_canceller(p_val, z_val, v_val)
                                     : make_canceller({lambda, v_val});
            write_output(out_path, tf_to_json(q).dump());
        } else if (fit->parsed()) {
            CommensurateTf tf = load_tf(tf_arg);
            FitReport rep = fit_rational(fractional_response_of(tf, fit_opts.cfg), fit_opts.cfg);
            write_output(out_path, fit_report_to_json(rep).dump(2));
        } else if (step->parsed()) {
            CommensurateTf tf = load_tf(tf_arg);
            std::optional<double> lam;
            if (settle_lambda > 0.0) lam = settle_lambda;
            auto res = step_of_fractional(tf, step_fit_opts.cfg, t_max, dt, lam);
            write_output(out_path, metrics_to_json(res.metrics).dump(2));
            if (!trace_dir.empty()) write_output(trace_dir, trace_csv(res.response));
        } else if (example->parsed()) {
            return run_example(example_id, out_path, trace_dir);
        }
    } catch (const Error& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << '\n';
        return e.kind() == ErrorKind::Io ? 4 : 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return 3;
    }
    return 0;
}
