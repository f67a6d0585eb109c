#include "fotf/tf.hpp"

#include <cmath>
#include <numeric>

#include "fotf/error.hpp"

namespace fotf {

namespace {

bool is_power_of_two_ge2(int v) { return v >= 2 && (v & (v - 1)) == 0; }

void validate_spec(double lambda, int v) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw_domain("canceller: lambda must be a positive finite real");
    }
    if (!is_power_of_two_ge2(v)) {
        throw_domain("canceller: v must be a power of two >= 2");
    }
}

}  // namespace

CommensurateTf::CommensurateTf(FractionalPoly num, FractionalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw_domain("CommensurateTf: zero denominator");
    const int base = std::lcm(num_.base_v(), den_.base_v());
    num_ = num_.rebase(base);
    den_ = den_.rebase(base);
}

Complex principal_root(Complex s, int v) {
    if (v == 1) return s;
    if (s == Complex(0.0, 0.0)) return {0.0, 0.0};
    // std::arg returns (-pi, pi]; -0.0 imaginary parts would flip the
    // sign of arg on the negative real axis, and that axis is rejected
    // by callers anyway.
    const double r = std::pow(std::abs(s), 1.0 / v);
    const double phi = std::arg(s) / v;
    return std::polar(r, phi);
}

Complex CommensurateTf::evaluate(Complex s) const {
    if (s.real() < 0.0 && s.imag() == 0.0) {
        throw_numeric("evaluate: s on the branch cut (open negative real axis)");
    }
    const Complex w = principal_root(s, base_v());
    const Complex d = den_.eval_w(w);
    if (d == Complex(0.0, 0.0)) {
        throw_numeric("evaluate: denominator vanishes (pole hit)");
    }
    return num_.eval_w(w) / d;
}

CommensurateTf make_canceller(const CancellerSpec& spec) {
    validate_spec(spec.lambda, spec.v);
    const int v = spec.v;
    // Factor k contributes 1 + (w/lambda^(1/v))^(2^k) over w = s^(1/v).
    FractionalPoly prod = FractionalPoly::constant(1.0, v);
    for (int e = 1; e < v; e *= 2) {
        std::vector<double> factor(static_cast<size_t>(e) + 1, 0.0);
        factor[0] = 1.0;
        factor[static_cast<size_t>(e)] = std::pow(spec.lambda, -double(e) / v);
        prod = prod * FractionalPoly(v, std::move(factor));
    }
    return CommensurateTf(prod, FractionalPoly::constant(1.0, v));
}

CommensurateTf make_ratio_canceller(double p, double z, int v) {
    const CommensurateTf qp = make_canceller({p, v});
    const CommensurateTf qz = make_canceller({z, v});
    return combine(qp, qz, CombineMode::Quotient);
}

CommensurateTf from_rational(const std::vector<double>& num_coeffs,
                             const std::vector<double>& den_coeffs) {
    if (den_coeffs.empty()) throw_domain("from_rational: empty denominator");
    FractionalPoly den(1, den_coeffs);
    if (den.is_zero()) throw_domain("from_rational: zero denominator");
    FractionalPoly num(1, num_coeffs.empty() ? std::vector<double>{0.0} : num_coeffs);
    return CommensurateTf(std::move(num), std::move(den));
}

CommensurateTf combine(const CommensurateTf& a, const CommensurateTf& b, CombineMode mode) {
    const int base = std::lcm(a.base_v(), b.base_v());
    const FractionalPoly an = a.num().rebase(base), ad = a.den().rebase(base);
    const FractionalPoly bn = b.num().rebase(base), bd = b.den().rebase(base);
    switch (mode) {
        case CombineMode::SeriesProduct:
            return CommensurateTf(an * bn, ad * bd);
        case CombineMode::Quotient:
            if (bn.is_zero()) throw_domain("combine: division by zero transfer function");
            return CommensurateTf(an * bd, ad * bn);
        case CombineMode::UnityFeedbackClosure:
            // a / (1 + a*b) without cancelling common factors.
            return CommensurateTf(an * bd, ad * bd + an * bn);
    }
    throw_domain("combine: unknown mode");
}

}  // namespace fotf
