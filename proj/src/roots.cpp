#include "fotf/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "fotf/error.hpp"

namespace fotf {

namespace {

// One step of Newton polish on the monic-normalized polynomial.
Complex polish(const std::vector<double>& c, Complex r) {
    Complex p = 0.0, dp = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * r + p;
        p = p * r + *it;
    }
    if (dp != Complex(0.0, 0.0)) {
        const Complex step = p / dp;
        if (std::abs(step) < 1e-2 * std::max(1.0, std::abs(r))) r -= step;
    }
    return r;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.size() == 1) {
        if (c[0] == 0.0) throw_domain("poly_roots: zero polynomial");
        return {};
    }
    const int n = static_cast<int>(c.size()) - 1;

    // Roots at the origin come from trailing zero coefficients.
    std::vector<Complex> roots;
    size_t first_nz = 0;
    while (first_nz < c.size() && c[first_nz] == 0.0) ++first_nz;
    for (size_t k = 0; k < first_nz; ++k) roots.emplace_back(0.0, 0.0);

    const int m = n - static_cast<int>(first_nz);
    if (m > 0) {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
        const double lead = c.back();
        for (int i = 0; i < m; ++i) {
            companion(i, m - 1) = -c[first_nz + i] / lead;
            if (i > 0) companion(i, i - 1) = 1.0;
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
        if (solver.info() != Eigen::Success) {
            throw_numeric("poly_roots: eigenvalue iteration failed to converge");
        }
        for (int i = 0; i < m; ++i) {
            roots.push_back(polish(c, solver.eigenvalues()(i)));
        }
    }
    return roots;
}

double root_residual_bound(const std::vector<double>& coeffs, Complex root) {
    std::vector<double> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    double max_coeff = 0.0;
    for (double x : c) max_coeff = std::max(max_coeff, std::abs(x));
    return 1e-8 * max_coeff * std::pow(std::max(1.0, std::abs(root)), deg);
}

}  // namespace fotf
