#pragma once

#include "fotf/poly.hpp"

namespace fotf {

/// Location and depth of a fractional canceller: cancels the real
/// zero/pole at s = lambda using v-th roots, v a power of two >= 2.
struct CancellerSpec {
    double lambda = 1.0;
    int v = 2;
};

enum class CombineMode {
    SeriesProduct,         // a * b
    Quotient,              // a / b
    UnityFeedbackClosure,  // a / (1 + a*b)
};

/// Commensurate fractional-order transfer function: a ratio of real
/// polynomials in w = s^(1/base_v).  With base_v = 1 this is an ordinary
/// rational transfer function.  Immutable after construction.
class CommensurateTf {
  public:
    CommensurateTf(FractionalPoly num, FractionalPoly den);

    static CommensurateTf identity() {
        return CommensurateTf(FractionalPoly::constant(1.0), FractionalPoly::constant(1.0));
    }

    const FractionalPoly& num() const { return num_; }
    const FractionalPoly& den() const { return den_; }
    int base_v() const { return num_.base_v(); }

    /// Evaluate at complex s using the principal branch of s^(1/v),
    /// arg(s) in (-pi, pi].  The open negative real axis is rejected.
    Complex evaluate(Complex s) const;

  private:
    FractionalPoly num_;
    FractionalPoly den_;
};

/// Q_{lambda,v}(s) = prod_{k=0}^{log2(v/2)} [1 + (s/lambda)^(2^k / v)],
/// returned over base v.  Q(0) = 1 and the numerator has degree v-1 in w.
CommensurateTf make_canceller(const CancellerSpec& spec);

/// Q_{p,v}(s) / Q_{z,v}(s): simultaneous half-cancellation of an
/// unstable pole at p and a non-minimum phase zero at z.  DC gain 1.
CommensurateTf make_ratio_canceller(double p, double z, int v);

/// Integer-order transfer function from coefficient vectors ascending in s.
CommensurateTf from_rational(const std::vector<double>& num_coeffs,
                             const std::vector<double>& den_coeffs);

/// Loop algebra.  Operands are rebased to lcm(a.base_v, b.base_v);
/// common factors are never cancelled, so closures keep the full
/// characteristic polynomial in their denominator.
CommensurateTf combine(const CommensurateTf& a, const CommensurateTf& b, CombineMode mode);

/// Principal v-th root: |s|^(1/v) * exp(j*arg(s)/v) with arg(s) in (-pi, pi].
Complex principal_root(Complex s, int v);

}  // namespace fotf
