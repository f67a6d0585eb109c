#include "fotf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fotf/error.hpp"
#include "fotf/roots.hpp"

namespace fotf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double lerp_at(double x0, double x1, double y0, double y1, double x) {
    if (x1 == x0) return y0;
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::Unstable: return "unstable";
        case Verdict::Marginal: return "marginal";
    }
    return "unknown";
}

FrequencyGrid::FrequencyGrid(std::vector<double> omega) : omega_(std::move(omega)) {
    if (omega_.size() < 2) throw_domain("FrequencyGrid: need at least 2 points");
    double prev = 0.0;
    for (double w : omega_) {
        if (!(w > prev) || !std::isfinite(w)) {
            throw_domain("FrequencyGrid: frequencies must be positive and strictly increasing");
        }
        prev = w;
    }
}

FrequencyGrid FrequencyGrid::log_spaced(double omega_min, double omega_max, int n) {
    if (!(omega_min > 0.0) || !(omega_max > omega_min)) {
        throw_domain("FrequencyGrid: need 0 < omega_min < omega_max");
    }
    if (n < 2) throw_domain("FrequencyGrid: need n >= 2");
    std::vector<double> omega(n);
    const double l0 = std::log10(omega_min), l1 = std::log10(omega_max);
    for (int i = 0; i < n; ++i) {
        omega[i] = std::pow(10.0, l0 + (l1 - l0) * i / (n - 1));
    }
    omega.front() = omega_min;
    omega.back() = omega_max;
    return FrequencyGrid(std::move(omega));
}

bool FrequencyResponse::has_flagged() const {
    return std::find(pole_flag.begin(), pole_flag.end(), true) != pole_flag.end();
}

FrequencyResponse frequency_response(const CommensurateTf& tf, const FrequencyGrid& grid) {
    FrequencyResponse out;
    out.omega = grid.omega();
    const size_t n = out.omega.size();
    out.value.resize(n);
    out.mag_db.resize(n);
    out.phase_deg.resize(n);
    out.pole_flag.assign(n, false);

    double prev_phase = 0.0;
    bool have_prev = false;
    for (size_t i = 0; i < n; ++i) {
        Complex v;
        try {
            v = tf.evaluate(Complex(0.0, out.omega[i]));
        } catch (const Error&) {
            out.pole_flag[i] = true;
            out.value[i] = Complex(kNaN, kNaN);
            out.mag_db[i] = kNaN;
            out.phase_deg[i] = kNaN;
            continue;
        }
        out.value[i] = v;
        out.mag_db[i] = 20.0 * std::log10(std::abs(v));
        double ph = std::arg(v) * 180.0 / kPi;
        if (have_prev) {
            while (ph - prev_phase > 180.0) ph -= 360.0;
            while (ph - prev_phase < -180.0) ph += 360.0;
        }
        out.phase_deg[i] = ph;
        prev_phase = ph;
        have_prev = true;
    }
    return out;
}

MarginReport margins(const FrequencyResponse& resp) {
    const size_t n = resp.omega.size();
    MarginReport rep{kInf, kInf, kNaN, kNaN, 0, 0};

    std::vector<double> logw(n);
    for (size_t i = 0; i < n; ++i) logw[i] = std::log10(resp.omega[i]);

    // Gain crossovers: |L| passes through unity.
    for (size_t i = 0; i + 1 < n; ++i) {
        if (resp.pole_flag[i] || resp.pole_flag[i + 1]) continue;
        const double m0 = resp.mag_db[i], m1 = resp.mag_db[i + 1];
        if ((m0 > 0.0 && m1 > 0.0) || (m0 < 0.0 && m1 < 0.0)) continue;
        if (m0 == 0.0 && m1 == 0.0) continue;  // flat unity segment, no isolated crossing
        const double lw = lerp_at(m0, m1, logw[i], logw[i + 1], 0.0);
        const double ph = lerp_at(logw[i], logw[i + 1], resp.phase_deg[i], resp.phase_deg[i + 1], lw);
        // PM = 180 + phase, reduced to (-180, 180].
        const double pm_principal = std::remainder(ph + 180.0, 360.0);
        ++rep.gain_crossings;
        if (pm_principal < rep.phase_margin_deg) {
            rep.phase_margin_deg = pm_principal;
            rep.gain_crossover_rad_s = std::pow(10.0, lw);
        }
    }

    // Phase crossovers: unwrapped phase passes through -180 - 360 k.
    for (size_t i = 0; i + 1 < n; ++i) {
        if (resp.pole_flag[i] || resp.pole_flag[i + 1]) continue;
        const double p0 = resp.phase_deg[i], p1 = resp.phase_deg[i + 1];
        const double lo = std::min(p0, p1), hi = std::max(p0, p1);
        const int kmin = static_cast<int>(std::ceil((-180.0 - hi) / 360.0));
        const int kmax = static_cast<int>(std::floor((-180.0 - lo) / 360.0));
        for (int k = kmin; k <= kmax; ++k) {
            const double level = -180.0 + 360.0 * k;
            if (p0 == p1) continue;
            const double lw = lerp_at(p0, p1, logw[i], logw[i + 1], level);
            const double mag = lerp_at(logw[i], logw[i + 1], resp.mag_db[i], resp.mag_db[i + 1], lw);
            const double gm = -mag;
            ++rep.phase_crossings;
            if (gm < rep.gain_margin_db) {
                rep.gain_margin_db = gm;
                rep.phase_crossover_rad_s = std::pow(10.0, lw);
            }
        }
    }
    return rep;
}

StabilityReport matignon_stable(const CommensurateTf& tf) {
    StabilityReport rep;
    rep.base_v = tf.base_v();
    rep.sector_half_angle = kPi / (2.0 * rep.base_v);

    const auto roots = tf.den().degree() >= 1 ? wplane_roots(tf.den()) : std::vector<Complex>{};
    constexpr double kBoundaryTol = 1e-9;
    bool any_inside = false, any_boundary = false;
    for (const Complex& w : roots) {
        SectorRoot sr;
        sr.w = w;
        if (w == Complex(0.0, 0.0)) {
            // Pure fractional integrator: on the sector apex.
            sr.arg_rad = 0.0;
            sr.satisfies_sector = false;
            any_boundary = true;
        } else {
            sr.arg_rad = std::arg(w);
            const double margin = std::abs(sr.arg_rad) - rep.sector_half_angle;
            sr.satisfies_sector = margin > 0.0;
            if (std::abs(margin) <= kBoundaryTol) {
                any_boundary = true;
            } else if (margin < 0.0) {
                any_inside = true;
            }
        }
        rep.roots.push_back(sr);
    }
    rep.verdict = any_inside ? Verdict::Unstable
                : any_boundary ? Verdict::Marginal
                               : Verdict::Stable;
    return rep;
}

CommensurateTf reference_to_control_tf(const CommensurateTf& plant,
                                       const CommensurateTf& controller) {
    return combine(controller, plant, CombineMode::UnityFeedbackClosure);
}

InternalStabilityReport internal_stability(const CommensurateTf& plant,
                                           const CommensurateTf& controller) {
    const int base = std::lcm(plant.base_v(), controller.base_v());
    const FractionalPoly pn = plant.num().rebase(base), pd = plant.den().rebase(base);
    const FractionalPoly cn = controller.num().rebase(base), cd = controller.den().rebase(base);
    const FractionalPoly chi = pd * cd + pn * cn;
    if (chi.is_zero()) throw_domain("internal_stability: 1 + P*C is identically zero");

    InternalStabilityReport rep{
        matignon_stable(CommensurateTf(pd * cd, chi)),
        matignon_stable(CommensurateTf(cn * pd, chi)),
        matignon_stable(CommensurateTf(pn * cd, chi)),
        matignon_stable(CommensurateTf(pn * cn, chi)),
        Verdict::Stable,
    };
    const StabilityReport* all[] = {&rep.sensitivity, &rep.reference_to_control,
                                    &rep.disturbance_to_output, &rep.complementary};
    for (const auto* r : all) {
        if (r->verdict == Verdict::Unstable) {
            rep.overall = Verdict::Unstable;
            return rep;
        }
        if (r->verdict == Verdict::Marginal) rep.overall = Verdict::Marginal;
    }
    return rep;
}

}  // namespace fotf
