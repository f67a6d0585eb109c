#pragma once

#include "fotf/analysis.hpp"
#include "fotf/tf.hpp"

namespace fotf {

/// Integer-order rational transfer function, coefficients ascending in s.
struct RationalTf {
    std::vector<double> num;
    std::vector<double> den;

    RationalTf(std::vector<double> n, std::vector<double> d);

    int num_degree() const { return static_cast<int>(num.size()) - 1; }
    int den_degree() const { return static_cast<int>(den.size()) - 1; }

    Complex evaluate(Complex s) const;
    CommensurateTf to_commensurate() const { return from_rational(num, den); }
};

struct FitConfig {
    double omega_min = 1e-3;
    double omega_max = 1e3;
    int n_points = 500;        // log-spaced
    int num_order = 4;         // nb, numerator degree
    int den_order = 4;         // na, denominator degree
    std::vector<double> weights;  // empty = all ones
    int sk_iterations = 10;
    int minimax_iterations = 30;  // Lawson reweighting passes after the SK stage

    FrequencyGrid grid() const { return FrequencyGrid::log_spaced(omega_min, omega_max, n_points); }
};

struct FitReport {
    RationalTf model;
    double max_mag_error_db;
    double max_phase_error_deg;
    std::vector<double> residual_per_iteration;  // weighted equation-error norm, Levi first
    bool sk_improved;  // final SK residual <= Levi residual in the final weighting
};

/// Linearized equation-error least squares (Levi), optionally refined by
/// Sanathanan-Koerner reweighting and a Lawson (iteratively reweighted
/// minimax) stage that targets worst-case log-magnitude/phase error.
/// The denominator is constrained monic in its leading coefficient;
/// real coefficients by construction.
FitReport fit_rational(const FrequencyResponse& target, const FitConfig& cfg);

/// Multiply extra zeros (conjugate-closed set) into the numerator and
/// s^count into the denominator.  Used to restore factors deliberately
/// left out of a fit.
RationalTf augment(const RationalTf& base, const std::vector<Complex>& extra_zeros,
                   int extra_integrator_poles);

/// Fit target built from the exact fractional response on cfg's grid.
FrequencyResponse fractional_response_of(const CommensurateTf& tf, const FitConfig& cfg);

}  // namespace fotf
