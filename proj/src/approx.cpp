#include "fotf/approx.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "fotf/error.hpp"

namespace fotf {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex polyval(const std::vector<double>& c, Complex s) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
}

std::vector<double> strip_trailing(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return c;
}

}  // namespace

RationalTf::RationalTf(std::vector<double> n, std::vector<double> d)
    : num(strip_trailing(std::move(n))), den(strip_trailing(std::move(d))) {
    if (num.empty()) num = {0.0};
    if (den.empty() || (den.size() == 1 && den[0] == 0.0)) {
        throw_domain("RationalTf: zero denominator");
    }
    for (double c : num)
        if (!std::isfinite(c)) throw_domain("RationalTf: non-finite numerator coefficient");
    for (double c : den)
        if (!std::isfinite(c)) throw_domain("RationalTf: non-finite denominator coefficient");
}

Complex RationalTf::evaluate(Complex s) const {
    return polyval(num, s) / polyval(den, s);
}

FrequencyResponse fractional_response_of(const CommensurateTf& tf, const FitConfig& cfg) {
    return frequency_response(tf, cfg.grid());
}

FitReport fit_rational(const FrequencyResponse& target, const FitConfig& cfg) {
    const int nb = cfg.num_order, na = cfg.den_order;
    if (nb < 0 || na < 1) throw_domain("fit_rational: need num_order >= 0, den_order >= 1");
    if (cfg.sk_iterations < 0 || cfg.minimax_iterations < 0) {
        throw_domain("fit_rational: iteration counts must be non-negative");
    }

    std::vector<size_t> idx;
    for (size_t i = 0; i < target.omega.size(); ++i) {
        if (!target.pole_flag[i]) idx.push_back(i);
    }
    const int m = static_cast<int>(idx.size());
    if (m < nb + na + 1) throw_domain("fit_rational: fewer usable samples than unknowns");

    std::vector<double> base_w(idx.size(), 1.0);
    if (!cfg.weights.empty()) {
        if (cfg.weights.size() != target.omega.size()) {
            throw_domain("fit_rational: weight vector length mismatch");
        }
        for (size_t k = 0; k < idx.size(); ++k) {
            const double w = cfg.weights[idx[k]];
            if (!(w > 0.0)) throw_domain("fit_rational: weights must be positive");
            base_w[k] = w;
        }
    }

    const int ncols = (nb + 1) + na;  // b_0..b_nb, a_0..a_{na-1}; a_na = 1

    // Fit in the normalized variable s/omega0 (geometric band center) to
    // tame the dynamic range of the power basis.
    double log_sum = 0.0;
    for (size_t k = 0; k < idx.size(); ++k) log_sum += std::log(target.omega[idx[k]]);
    const double omega0 = std::exp(log_sum / m);

    // Powers of (j omega / omega0) up to max(nb, na).
    const int maxp = std::max(nb, na);
    Eigen::MatrixXcd pw(m, maxp + 1);
    for (int i = 0; i < m; ++i) {
        const Complex jw(0.0, target.omega[idx[i]] / omega0);
        Complex acc = 1.0;
        for (int p = 0; p <= maxp; ++p) {
            pw(i, p) = acc;
            acc *= jw;
        }
    }

    std::vector<double> sk_w(m, 1.0);      // 1/|D_prev|^2 factor
    std::vector<double> lawson_w(m, 1.0);  // Lawson multipliers, unity during SK
    std::vector<double> hmag(m);           // |H| with a floor, relative-error weighting
    for (int i = 0; i < m; ++i) {
        hmag[i] = std::max(std::abs(target.value[idx[i]]), 1e-12);
    }
    std::vector<double> residuals;

    const int sk_iters = cfg.sk_iterations + 1;
    const int iters = sk_iters + cfg.minimax_iterations;
    std::vector<double> levi_num, levi_den;  // iteration-0 model, for the improvement check
    std::vector<double> num_n(nb + 1), den_n(na + 1);  // current iterate, normalized domain
    std::vector<double> best_num, best_den;            // minimax-best iterate
    double best_err = std::numeric_limits<double>::infinity();

    // Worst weighted log-magnitude/phase mismatch of the current iterate;
    // also refreshes the Lawson multipliers for the next pass.
    const double kPhaseEmphasis = 1.5;
    auto worst_error_and_reweight = [&](bool reweight) {
        double emax = 0.0, lsum = 0.0;
        std::vector<double> e(m);
        for (int i = 0; i < m; ++i) {
            const Complex ratio =
                polyval(num_n, pw(i, 1)) / polyval(den_n, pw(i, 1)) / target.value[idx[i]];
            const double ei = base_w[i] * std::max(std::abs(std::log(std::max(std::abs(ratio), 1e-300))),
                                                   kPhaseEmphasis * std::abs(std::arg(ratio)));
            e[i] = ei;
            emax = std::max(emax, ei);
        }
        if (reweight) {
            for (int i = 0; i < m; ++i) {
                lawson_w[i] *= std::max(e[i], 1e-12);
                lsum += lawson_w[i];
            }
            if (lsum > 0.0) {
                for (double& l : lawson_w) l *= m / lsum;
            }
        }
        return emax;
    };

    for (int it = 0; it < iters; ++it) {
        const bool minimax_stage = it >= sk_iters;
        Eigen::MatrixXd A(2 * m, ncols);
        Eigen::VectorXd rhs(2 * m);
        for (int i = 0; i < m; ++i) {
            double wgt = std::sqrt(base_w[i] * sk_w[i] * lawson_w[i]);
            if (minimax_stage) wgt /= hmag[i];
            const Complex h = target.value[idx[i]];
            for (int k = 0; k <= nb; ++k) {
                const Complex e = wgt * pw(i, k);
                A(i, k) = e.real();
                A(m + i, k) = e.imag();
            }
            for (int k = 0; k < na; ++k) {
                const Complex e = -wgt * h * pw(i, k);
                A(i, nb + 1 + k) = e.real();
                A(m + i, nb + 1 + k) = e.imag();
            }
            const Complex r = wgt * h * pw(i, na);
            rhs(i) = r.real();
            rhs(m + i) = r.imag();
        }

        // Column scaling for conditioning.
        Eigen::VectorXd scale(ncols);
        for (int c = 0; c < ncols; ++c) {
            const double nrm = A.col(c).norm();
            scale(c) = nrm > 0.0 ? 1.0 / nrm : 1.0;
            A.col(c) *= scale(c);
        }

        Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double cond_tol = 1e-16 * sv(0);
        if (sv(sv.size() - 1) < cond_tol) {
            // Name the dominant coefficient of the null direction.
            Eigen::VectorXd vmin = svd.matrixV().col(sv.size() - 1);
            int worst = 0;
            vmin.cwiseAbs().maxCoeff(&worst);
            const std::string which = worst <= nb
                ? "numerator coefficient b" + std::to_string(worst)
                : "denominator coefficient a" + std::to_string(worst - nb - 1);
            throw_numeric("fit_rational: rank-deficient normal equations (smallest singular direction dominated by " + which + ")");
        }
        Eigen::VectorXd x = svd.solve(rhs);
        residuals.push_back((A * x - rhs).norm());
        x = x.cwiseProduct(scale);

        for (int k = 0; k <= nb; ++k) num_n[k] = x(k);
        for (int k = 0; k < na; ++k) den_n[k] = x(nb + 1 + k);
        den_n[na] = 1.0;
        if (it == 0) {
            levi_num = num_n;
            levi_den = den_n;
        }

        // SK reweighting for the next pass.
        if (it + 1 < iters) {
            for (int i = 0; i < m; ++i) {
                const double dmag = std::abs(polyval(den_n, pw(i, 1)));
                sk_w[i] = 1.0 / std::max(dmag * dmag, 1e-30);
            }
        }

        // From the last SK pass onward, track the iterate with the
        // smallest worst-case error and feed the Lawson multipliers.
        if (it >= sk_iters - 1) {
            const bool more_minimax = it + 1 < iters;
            const double emax = worst_error_and_reweight(more_minimax);
            if (emax < best_err) {
                best_err = emax;
                best_num = num_n;
                best_den = den_n;
            }
        }
    }

    // Return the minimax-best iterate seen since the SK stage ended.
    num_n = best_num;
    den_n = best_den;

    // Map back from the normalized variable: coefficient of s^k picks up
    // omega0^{-k}; renormalize so the leading denominator stays monic.
    std::vector<double> num(nb + 1), den(na + 1);
    const double lead = std::pow(omega0, -double(na));
    for (int k = 0; k <= nb; ++k) num[k] = num_n[k] * std::pow(omega0, -double(k)) / lead;
    for (int k = 0; k < na; ++k) den[k] = den_n[k] * std::pow(omega0, -double(k)) / lead;
    den[na] = 1.0;
    RationalTf model(num, den);

    // Improvement check: compare Levi's model and the final model under
    // the final weighting.
    bool sk_improved = true;
    if (cfg.sk_iterations > 0) {
        double res_levi = 0.0, res_final = 0.0;
        for (int i = 0; i < m; ++i) {
            const Complex jw = pw(i, 1);
            const double wgt = std::sqrt(base_w[i] * sk_w[i]);
            const Complex h = target.value[idx[i]];
            res_final += std::norm(wgt * (polyval(num_n, jw) - h * polyval(den_n, jw)));
            res_levi += std::norm(wgt * (polyval(levi_num, jw) - h * polyval(levi_den, jw)));
        }
        sk_improved = res_final <= res_levi * (1.0 + 1e-12);
    }

    FitReport rep{std::move(model), 0.0, 0.0, std::move(residuals), sk_improved};

    for (size_t k = 0; k < idx.size(); ++k) {
        const size_t i = idx[k];
        const Complex fit = rep.model.evaluate(Complex(0.0, target.omega[i]));
        const double mag_err = std::abs(20.0 * std::log10(std::abs(fit)) - target.mag_db[i]);
        const double ph_fit = std::arg(fit) * 180.0 / kPi;
        const double ph_tgt = std::arg(target.value[i]) * 180.0 / kPi;
        const double ph_err = std::abs(std::remainder(ph_fit - ph_tgt, 360.0));
        rep.max_mag_error_db = std::max(rep.max_mag_error_db, mag_err);
        rep.max_phase_error_deg = std::max(rep.max_phase_error_deg, ph_err);
    }
    return rep;
}

RationalTf augment(const RationalTf& base, const std::vector<Complex>& extra_zeros,
                   int extra_integrator_poles) {
    if (extra_integrator_poles < 0) throw_domain("augment: negative integrator count");

    // Conjugate closure check: non-real zeros must pair up.
    std::vector<Complex> pending(extra_zeros.begin(), extra_zeros.end());
    std::vector<Complex> unmatched;
    for (const Complex& z : pending) {
        if (z.imag() == 0.0) continue;
        bool found = false;
        for (auto& u : unmatched) {
            if (std::abs(u - std::conj(z)) <= 1e-12 * std::max(1.0, std::abs(z))) {
                u = unmatched.back();
                unmatched.pop_back();
                found = true;
                break;
            }
        }
        if (!found) unmatched.push_back(z);
    }
    if (!unmatched.empty()) {
        throw_domain("augment: extra_zeros not closed under conjugation");
    }

    std::vector<Complex> num_c(base.num.begin(), base.num.end());
    for (const Complex& z : extra_zeros) {
        std::vector<Complex> out(num_c.size() + 1, Complex(0.0, 0.0));
        for (size_t i = 0; i < num_c.size(); ++i) {
            out[i] += num_c[i] * (-z);
            out[i + 1] += num_c[i];
        }
        num_c = std::move(out);
    }
    std::vector<double> num(num_c.size());
    for (size_t i = 0; i < num_c.size(); ++i) num[i] = num_c[i].real();

    std::vector<double> den(base.den.size() + extra_integrator_poles, 0.0);
    for (size_t i = 0; i < base.den.size(); ++i) den[i + extra_integrator_poles] = base.den[i];

    return RationalTf(std::move(num), std::move(den));
}

}  // namespace fotf
