#pragma once

#include "fotf/analysis.hpp"
#include "fotf/timedomain.hpp"

namespace fotf {
namespace pipelines {

/// Processes of the undershoot study: P1 = (1-s)/((1+s/2)(1+s/3)),
/// P2 = P1/Q_{1,2}, P3 = P1/Q_{1,4}.
CommensurateTf undershoot_plant(int index);

struct UndershootRun {
    FractionalStepResult p1, p2, p3;
};

/// Step responses and metrics of P1..P3 with the default realization
/// settings (fit band [1e-3,1e3], orders 8/8, 10 SK passes; dt 1e-3,
/// horizon 40 s).
UndershootRun run_undershoot_study();

/// Plant of the margin study: P = 4(1-s)/((s+0.1)(s+4)).
CommensurateTf margin_plant();

struct MarginRow {
    std::string label;
    MarginReport report;
};

/// Margins of P, P/Q_{1,2}, P/Q_{1,4} on the default grid.
std::vector<MarginRow> run_margin_study();

struct InternalStabilityDemo {
    CommensurateTf plant;
    CommensurateTf fractional_controller;   // 1/(s^{1/2}+1)
    CommensurateTf cancelling_controller;   // 1/(s-1)
    InternalStabilityReport fractional_verdict;
    InternalStabilityReport cancelling_verdict;
    CommensurateTf reference_to_control;    // (s+2)/((s^{1/2}+1)(s+s^{1/2}+1))
};

/// The worked internal-stability comparison for P = (s-1)/(s+2).
InternalStabilityDemo run_internal_stability_demo();

struct PendulumFit {
    double mass_cart = 0.1, mass_pendulum = 0.1, length = 1.0, gravity = 9.8;
    double pole() const;  // sqrt(g/l + m g / (M l))
    double zero() const;  // sqrt(g/l)
    CommensurateTf plant() const;           // (s-z)(s+z) / (M s^2 (s-p)(s+p))
    CommensurateTf fit_core() const;        // (s^{1/2}-z^{1/2}) / (M (s^{1/2}-p^{1/2})(s+p))
    CommensurateTf ratio_canceller() const; // Q_{p,2}/Q_{z,2}
};

struct PendulumFitResult {
    PendulumFit setup;
    FitReport core_fit;        // band [1e-2,1e2], orders 6/6
    RationalTf augmented;      // core fit with the zero at -z and 1/s^2 restored
    FitReport canceller_fit;   // band [1e-3,1e4], orders 4/4
};

PendulumFitResult run_pendulum_fit();

}  // namespace pipelines
}  // namespace fotf
