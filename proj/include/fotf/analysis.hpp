#pragma once

#include <optional>
#include <string>

#include "fotf/tf.hpp"

namespace fotf {

/// Strictly increasing positive frequency grid in rad/s.
class FrequencyGrid {
  public:
    explicit FrequencyGrid(std::vector<double> omega);

    /// n log-spaced points over [omega_min, omega_max].
    static FrequencyGrid log_spaced(double omega_min, double omega_max, int n);

    /// 1000 log-spaced points over [1e-3, 1e3] rad/s.
    static FrequencyGrid default_grid() { return log_spaced(1e-3, 1e3, 1000); }

    const std::vector<double>& omega() const { return omega_; }
    size_t size() const { return omega_.size(); }

  private:
    std::vector<double> omega_;
};

/// Sampled complex response with magnitude in dB and unwrapped phase in
/// degrees.  mag_db/phase_deg are derived from value at construction.
struct FrequencyResponse {
    std::vector<double> omega;
    std::vector<Complex> value;
    std::vector<double> mag_db;
    std::vector<double> phase_deg;
    std::vector<bool> pole_flag;  // sample landed on a pole; value is NaN there

    bool has_flagged() const;
};

struct MarginReport {
    double phase_margin_deg;   // +inf when no gain crossover
    double gain_margin_db;     // +inf when no phase crossover
    double gain_crossover_rad_s;   // NaN when absent
    double phase_crossover_rad_s;  // NaN when absent
    int gain_crossings;
    int phase_crossings;
};

enum class Verdict { Stable, Unstable, Marginal };

std::string to_string(Verdict v);

struct SectorRoot {
    Complex w;
    double arg_rad;
    bool satisfies_sector;
};

/// Matignon sector test result: every denominator root in the w-plane
/// must satisfy |arg(w)| > pi/(2v) strictly.
struct StabilityReport {
    int base_v;
    double sector_half_angle;  // pi / (2 v), radians
    std::vector<SectorRoot> roots;
    Verdict verdict;
};

/// Closed-loop stability of the four transfer functions of the unity
/// loop: S = 1/(1+PC), r->u = C/(1+PC), d->y = P/(1+PC), T = PC/(1+PC).
struct InternalStabilityReport {
    StabilityReport sensitivity;       // 1/(1+PC)
    StabilityReport reference_to_control;  // C/(1+PC)
    StabilityReport disturbance_to_output; // P/(1+PC)
    StabilityReport complementary;     // PC/(1+PC)
    Verdict overall;
};

FrequencyResponse frequency_response(const CommensurateTf& tf, const FrequencyGrid& grid);

MarginReport margins(const FrequencyResponse& resp);

StabilityReport matignon_stable(const CommensurateTf& tf);

InternalStabilityReport internal_stability(const CommensurateTf& plant,
                                           const CommensurateTf& controller);

/// The r->u closed loop C/(1+PC), kept uncancelled (its denominator is
/// the loop characteristic polynomial).
CommensurateTf reference_to_control_tf(const CommensurateTf& plant,
                                       const CommensurateTf& controller);

}  // namespace fotf
