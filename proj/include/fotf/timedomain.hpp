#pragma once

#include <Eigen/Dense>
#include <optional>

#include "fotf/approx.hpp"

namespace fotf {

/// SISO state space in controllable canonical form.
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;
    double D = 0.0;

    int order() const { return static_cast<int>(A.rows()); }
    Complex evaluate(Complex s) const;
};

struct StepResponse {
    std::vector<double> t;
    std::vector<double> y;
    double dt = 0.0;
    bool truncated = false;  // state left the finite range before t_max
};

struct StepMetrics {
    double y_bar = 0.0;            // steady-state value, from DC gain
    double r_us = 0.0;             // relative undershoot, clamped at 0
    double r_us_unclamped = 0.0;   // -inf_t y/y_bar without the clamp
    double r_os = 0.0;             // relative overshoot
    double settling_time_s = 0.0;  // last exit from the band around the final level
    bool settled = false;          // final level within band of y_bar
    double settling_band = 0.02;
    std::optional<double> undershoot_lower_bound;  // 1/(e^{lambda T} - 1)
};

/// Controllable canonical realization; requires deg(num) <= deg(den).
StateSpace to_state_space(const RationalTf& tf);

/// Exact zero-order-hold step simulation on a uniform grid via the
/// matrix exponential of the augmented [[A,B],[0,0]] block.
StepResponse simulate_step(const StateSpace& ss, double t_max, double dt);

StepMetrics compute_metrics(const StepResponse& resp, double y_bar,
                            std::optional<double> lambda = std::nullopt,
                            double settling_band = 0.02);

struct FractionalStepResult {
    StepResponse response;
    StepMetrics metrics;
    FitReport fit;
};

/// Realization pipeline for fractional systems: fit an integer-order
/// model on cfg's band, then simulate its step response.  Metrics use
/// the exact fractional DC gain.
FractionalStepResult step_of_fractional(const CommensurateTf& tf, const FitConfig& cfg,
                                        double t_max, double dt,
                                        std::optional<double> lambda = std::nullopt);

}  // namespace fotf
