#include "fotf/timedomain.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "fotf/error.hpp"

namespace fotf {

Complex StateSpace::evaluate(Complex s) const {
    const int n = order();
    if (n == 0) return D;
    Eigen::MatrixXcd m = s * Eigen::MatrixXcd::Identity(n, n) - A.cast<Complex>();
    Eigen::VectorXcd x = m.partialPivLu().solve(B.cast<Complex>());
    return (C.cast<Complex>() * x)(0) + D;
}

StateSpace to_state_space(const RationalTf& tf) {
    const int na = tf.den_degree();
    int nb = tf.num_degree();
    if (nb > na) throw_domain("to_state_space: improper transfer function");
    if (tf.den.back() == 0.0) throw_domain("to_state_space: zero leading denominator coefficient");

    // Monic denominator.
    const double lead = tf.den.back();
    std::vector<double> a(na + 1), b(na + 1, 0.0);
    for (int i = 0; i <= na; ++i) a[i] = tf.den[i] / lead;
    for (int i = 0; i <= nb; ++i) b[i] = tf.num[i] / lead;

    StateSpace ss;
    // Direct feedthrough when deg(num) == deg(den).
    ss.D = (na == 0) ? b[0] : b[na];
    if (na == 0) {
        ss.A.resize(0, 0);
        ss.B.resize(0);
        ss.C.resize(0);
        return ss;
    }
    ss.A = Eigen::MatrixXd::Zero(na, na);
    for (int i = 0; i + 1 < na; ++i) ss.A(i, i + 1) = 1.0;
    for (int i = 0; i < na; ++i) ss.A(na - 1, i) = -a[i];
    ss.B = Eigen::VectorXd::Zero(na);
    ss.B(na - 1) = 1.0;
    ss.C = Eigen::RowVectorXd::Zero(na);
    for (int i = 0; i < na; ++i) ss.C(i) = b[i] - a[i] * ss.D;
    return ss;
}

StepResponse simulate_step(const StateSpace& ss, double t_max, double dt) {
    if (!(dt > 0.0)) throw_domain("simulate_step: dt must be positive");
    if (!(t_max >= 10.0 * dt)) throw_domain("simulate_step: t_max must be at least 10*dt");

    const int n = ss.order();
    const size_t steps = static_cast<size_t>(std::floor(t_max / dt + 0.5));

    StepResponse out;
    out.dt = dt;
    out.t.reserve(steps + 1);
    out.y.reserve(steps + 1);

    if (n == 0) {
        for (size_t k = 0; k <= steps; ++k) {
            out.t.push_back(k * dt);
            out.y.push_back(ss.D);
        }
        return out;
    }

    // Exact ZOH discretization: exp([[A,B],[0,0]] dt) packs Ad and Bd.
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
    aug.topLeftCorner(n, n) = ss.A;
    aug.topRightCorner(n, 1) = ss.B;
    const Eigen::MatrixXd big = (aug * dt).exp();
    const Eigen::MatrixXd Ad = big.topLeftCorner(n, n);
    const Eigen::VectorXd Bd = big.topRightCorner(n, 1);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (size_t k = 0; k <= steps; ++k) {
        const double y = (ss.C * x)(0) + ss.D;
        if (!std::isfinite(y)) {
            out.truncated = true;
            break;
        }
        out.t.push_back(k * dt);
        out.y.push_back(y);
        x = Ad * x + Bd;
    }
    return out;
}

StepMetrics compute_metrics(const StepResponse& resp, double y_bar,
                            std::optional<double> lambda, double settling_band) {
    if (y_bar == 0.0) throw_domain("compute_metrics: zero steady-state value");
    if (resp.y.empty()) throw_domain("compute_metrics: empty response");

    StepMetrics m;
    m.y_bar = y_bar;
    m.settling_band = settling_band;

    double y_min = resp.y[0], y_max = resp.y[0];
    for (double y : resp.y) {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    m.r_us_unclamped = -y_min / y_bar;
    m.r_us = std::max(0.0, m.r_us_unclamped);
    m.r_os = std::max(0.0, y_max / y_bar - 1.0);

    // Settling: last exit from the band marks T.  The band is centered on
    // the trace's own final level, the practical steady state of the
    // measured response; fractional-order tails creep toward the DC gain
    // so slowly that a DC-centered band would never be re-entered in any
    // feasible horizon.  The `settled` flag still reports whether that
    // final level agrees with the analytic steady state y_bar.
    const double band = settling_band * std::abs(y_bar);
    const double y_final = resp.y.back();
    size_t last_outside = 0;
    bool ever_outside = false;
    for (size_t i = 0; i < resp.y.size(); ++i) {
        if (std::abs(resp.y[i] - y_final) > band) {
            last_outside = i;
            ever_outside = true;
        }
    }
    m.settled = std::abs(y_final - y_bar) <= band;
    if (!ever_outside) {
        m.settling_time_s = 0.0;
    } else if (last_outside + 1 < resp.y.size()) {
        m.settling_time_s = resp.t[last_outside + 1];
    } else {
        m.settled = false;
        m.settling_time_s = resp.t.back();
    }

    if (lambda) {
        if (!(*lambda > 0.0)) throw_domain("compute_metrics: lambda must be positive");
        m.undershoot_lower_bound = 1.0 / std::expm1(*lambda * m.settling_time_s);
    }
    return m;
}

FractionalStepResult step_of_fractional(const CommensurateTf& tf, const FitConfig& cfg,
                                        double t_max, double dt,
                                        std::optional<double> lambda) {
    const FrequencyResponse target = fractional_response_of(tf, cfg);
    FitReport fit = fit_rational(target, cfg);
    if (fit.model.num_degree() > fit.model.den_degree()) {
        // Retry once with a smaller numerator before giving up.
        FitConfig reduced = cfg;
        reduced.num_order = cfg.num_order - 1;
        fit = fit_rational(target, reduced);
        if (fit.model.num_degree() > fit.model.den_degree()) {
            throw_numeric("step_of_fractional: fitted model is improper");
        }
    }
    const StateSpace ss = to_state_space(fit.model);
    StepResponse resp = simulate_step(ss, t_max, dt);
    const double y_bar = tf.evaluate(Complex(0.0, 0.0)).real();
    StepMetrics metrics = compute_metrics(resp, y_bar, lambda);
    return {std::move(resp), std::move(metrics), std::move(fit)};
}

}  // namespace fotf
