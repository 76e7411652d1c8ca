#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "qmass/rational.hpp"

namespace qmass {

/* Truncated formal power series over exact rationals: coefficients of
 * x^0..x^N for a fixed truncation order N. Every operation is exact;
 * binary operations truncate to the smaller operand order. */
class TruncSeries {
  public:
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
    static TruncSeries constant(const Rational& c, std::size_t order);
    static TruncSeries monomial(std::size_t k, const Rational& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    Rational& coeff(std::size_t k) { return coeffs_[k]; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    /* Multiplicative inverse up to the order, by the direct recurrence
     * b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}.
     * Throws std::domain_error("non-unit series") when a_0 = 0. */
    TruncSeries inverse() const;

    Rational evaluate(const Rational& x) const;

    /* this += x^shift * s (no-op beyond the truncation order). */
    void add_shifted(const TruncSeries& s, std::size_t shift);

    /* In-place multiplication by (1 - x^j) and by 1/(1 - x^j). */
    void mul_one_minus_power(std::size_t j);
    void mul_inv_one_minus_power(std::size_t j);

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  private:
    std::vector<Rational> coeffs_;
};

/* f_k(x) = (1 - x)(1 - x^2)...(1 - x^k) truncated; f_0 = 1. */
TruncSeries f_poly(int k, std::size_t order);

/* prod_{j >= 1, j mod modulus not excluded} 1/(1 - x^j), truncated.
 * Coefficient n counts the partitions of n into allowed parts. */
TruncSeries restricted_product(int modulus, const std::set<int>& excluded_residues,
                               std::size_t order);

}  // namespace qmass
