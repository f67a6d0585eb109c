#pragma once

#include <complex>
#include <vector>

namespace fotf {

using Complex = std::complex<double>;

/// Polynomial in w = s^(1/base_v) with real coefficients, ascending in
/// powers of w.  coeffs[k] multiplies w^k.  Normalized so the highest
/// coefficient is non-zero, except the canonical zero polynomial [0].
class FractionalPoly {
  public:
    FractionalPoly() : base_v_(1), coeffs_{0.0} {}
    FractionalPoly(int base_v, std::vector<double> coeffs);

    static FractionalPoly constant(double c, int base_v = 1);
    static FractionalPoly zero(int base_v = 1) { return constant(0.0, base_v); }

    int base_v() const { return base_v_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Degree in w.  The zero polynomial reports degree 0.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    /// Evaluate at a point in the w-plane (direct Horner).
    Complex eval_w(Complex w) const;

    /// Same polynomial expressed over base k*base_v; the exponents are
    /// scaled so evaluation is unchanged.
    FractionalPoly rebase(int new_base) const;

    FractionalPoly operator*(const FractionalPoly& other) const;
    FractionalPoly operator+(const FractionalPoly& other) const;
    FractionalPoly scaled(double factor) const;

    bool operator==(const FractionalPoly& other) const = default;

    /// Degree cap for products; exceeding it signals degenerate input.
    static constexpr int kMaxCoeffs = 4096;

  private:
    int base_v_;
    std::vector<double> coeffs_;
};

}  // namespace fotf
