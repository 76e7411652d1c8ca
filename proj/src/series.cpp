#include "qmass/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmass {

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(std::size_t k, const Rational& c, std::size_t order) {
    TruncSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("non-unit series");
    const std::size_t n = order();
    TruncSeries out(n);
    const Rational inv0 = Rational(1) / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (coeffs_[j] == 0 || out.coeffs_[k - j] == 0) continue;
            s += coeffs_[j] * out.coeffs_[k - j];
        }
        out.coeffs_[k] = -(inv0 * s);
    }
    return out;
}

Rational TruncSeries::evaluate(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

void TruncSeries::add_shifted(const TruncSeries& s, std::size_t shift) {
    if (shift > order()) return;
    const std::size_t upto = std::min(order() - shift, s.order());
    for (std::size_t j = 0; j <= upto; ++j) {
        if (s.coeffs_[j] == 0) continue;
        coeffs_[shift + j] += s.coeffs_[j];
    }
}

void TruncSeries::mul_one_minus_power(std::size_t j) {
    if (j == 0 || j > order()) return;
    for (std::size_t v = order(); v >= j; --v) coeffs_[v] -= coeffs_[v - j];
}

void TruncSeries::mul_inv_one_minus_power(std::size_t j) {
    if (j == 0 || j > order()) return;
    for (std::size_t v = j; v <= order(); ++v) coeffs_[v] += coeffs_[v - j];
}

TruncSeries f_poly(int k, std::size_t order) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    TruncSeries out = TruncSeries::constant(1, order);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k) && i <= order; ++i)
        out.mul_one_minus_power(i);
    return out;
}

TruncSeries restricted_product(int modulus, const std::set<int>& excluded_residues,
                               std::size_t order) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::set<int> excluded;
    for (int r : excluded_residues) excluded.insert(((r % modulus) + modulus) % modulus);
    TruncSeries out = TruncSeries::constant(1, order);
    for (std::size_t j = 1; j <= order; ++j) {
        if (excluded.count(static_cast<int>(j % static_cast<std::size_t>(modulus)))) continue;
        out.mul_inv_one_minus_power(j);
    }
    return out;
}

}  // namespace qmass
