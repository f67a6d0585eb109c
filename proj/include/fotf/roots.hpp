#pragma once

#include "fotf/poly.hpp"

namespace fotf {

/// All complex roots (with multiplicity) of a real polynomial given by
/// ascending coefficients.  Computed from the eigenvalues of the
/// balanced companion matrix.  A constant polynomial yields an empty
/// vector; the zero polynomial is rejected.
std::vector<Complex> poly_roots(const std::vector<double>& coeffs);

inline std::vector<Complex> wplane_roots(const FractionalPoly& p) {
    return poly_roots(p.coeffs());
}

/// Max residual bound the returned roots are guaranteed to satisfy:
/// |p(r)| <= 1e-8 * max|coeff| * max(1, |r|)^deg.
double root_residual_bound(const std::vector<double>& coeffs, Complex root);

}  // namespace fotf
