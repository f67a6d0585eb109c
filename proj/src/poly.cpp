#include "fotf/poly.hpp"

#include <cmath>
#include <numeric>

#include "fotf/error.hpp"

namespace fotf {

namespace {

void strip_trailing_zeros(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

}  // namespace

FractionalPoly::FractionalPoly(int base_v, std::vector<double> coeffs)
    : base_v_(base_v), coeffs_(std::move(coeffs)) {
    if (base_v_ < 1) throw_domain("FractionalPoly: base_v must be >= 1");
    if (coeffs_.empty()) throw_domain("FractionalPoly: empty coefficient vector");
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw_domain("FractionalPoly: non-finite coefficient");
    }
    strip_trailing_zeros(coeffs_);
}

FractionalPoly FractionalPoly::constant(double c, int base_v) {
    return FractionalPoly(base_v, {c});
}

Complex FractionalPoly::eval_w(Complex w) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * w + *it;
    }
    return acc;
}

FractionalPoly FractionalPoly::rebase(int new_base) const {
    if (new_base == base_v_) return *this;
    if (new_base < base_v_ || new_base % base_v_ != 0) {
        throw_domain("FractionalPoly::rebase: new base must be a multiple of the current base");
    }
    const int stride = new_base / base_v_;
    if ((degree() * stride + 1) > kMaxCoeffs) {
        throw_domain("FractionalPoly::rebase: degree cap exceeded");
    }
    std::vector<double> out(static_cast<size_t>(degree()) * stride + 1, 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        out[k * stride] = coeffs_[k];
    }
    return FractionalPoly(new_base, std::move(out));
}

FractionalPoly FractionalPoly::operator*(const FractionalPoly& other) const {
    if (base_v_ != other.base_v_) {
        throw_domain("FractionalPoly: base mismatch in product (rebase first)");
    }
    if (is_zero() || other.is_zero()) return zero(base_v_);
    const size_t n = coeffs_.size() + other.coeffs_.size() - 1;
    if (n > kMaxCoeffs) throw_domain("FractionalPoly: product degree cap exceeded");
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return FractionalPoly(base_v_, std::move(out));
}

FractionalPoly FractionalPoly::operator+(const FractionalPoly& other) const {
    if (base_v_ != other.base_v_) {
        throw_domain("FractionalPoly: base mismatch in sum (rebase first)");
    }
    std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return FractionalPoly(base_v_, std::move(out));
}

FractionalPoly FractionalPoly::scaled(double factor) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= factor;
    return FractionalPoly(base_v_, std::move(out));
}

}  // namespace fotf
