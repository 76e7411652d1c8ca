#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "qmass/identities.hpp"
#include "qmass/partition.hpp"

namespace qmass {

namespace {

using Clock = std::chrono::steady_clock;

/* Rational over-approximations used by the certified tail bound:
 * c_hat > pi*sqrt(2/3) and e_hat > e. */
const Rational kCHat(115943, 45200);
const Rational kEHat(135914091423L, 50000000000L);

long integer_sqrt(long m) {
    long s = static_cast<long>(std::sqrt(static_cast<double>(m)));
    while ((s + 1) * (s + 1) <= m) ++s;
    while (s * s > m) --s;
    return s;
}

/* Upper bound on sum_{n > m} exp(c*sqrt(n)) / p^n, hence on the tail of
 * sum pi(n)/p^n, using pi(n) <= exp(c*sqrt(n)) with c = pi*sqrt(2/3).
 * Derivation: sqrt(n) <= sqrt(m) + (n-m)/(2*sqrt(m)) turns the summand
 * into a geometric series with ratio e^{c/(2*sqrt(m))}/p; each
 * transcendental factor is replaced by a rational over-approximation
 * (e^x <= 1/(1-x) for 0 <= x < 1, and e_hat^ceil(x) >= e^x).
 * Returns nullopt when the geometric ratio fails to drop below 1. */
std::optional<Rational> certified_tail_bound(int p, long m) {
    const long s = integer_sqrt(m);
    if (s < 2) return std::nullopt;
    const Rational growth = kCHat / (2 * s);  // >= c / (2*sqrt(m))
    if (growth >= 1) return std::nullopt;
    const Rational ratio = 1 / ((1 - growth) * p);  // >= e^{c/(2*sqrt(m))} / p
    if (ratio >= 1) return std::nullopt;

    const Rational exponent = kCHat * (s + 1);  // >= c*sqrt(m)
    BigInt k;
    mpz_cdiv_q(k.get_mpz_t(), exponent.get_num().get_mpz_t(), exponent.get_den().get_mpz_t());
    const Rational head = pow_rational(kEHat, k.get_ui());  // >= exp(c*sqrt(m))

    return head / pow_rational(Rational(p), static_cast<unsigned long>(m)) * ratio / (1 - ratio);
}

/* First `digits` digits of v > 0, truncated: "3.4627" style, or the
 * bare integer prefix when the integer part already fills the width. */
std::string truncate_decimal(const Rational& v, int digits) {
    const BigInt int_part = v.get_num() / v.get_den();
    const std::string head = int_part.get_str();
    if (static_cast<int>(head.size()) >= digits) return head.substr(0, static_cast<size_t>(digits));
    const int frac_digits = digits - static_cast<int>(head.size());
    const Rational frac = v - Rational(int_part);
    const BigInt scaled =
        frac.get_num() * pow_int(10, static_cast<unsigned long>(frac_digits)) / frac.get_den();
    std::string tail = scaled.get_str();
    tail.insert(0, static_cast<size_t>(frac_digits) - tail.size(), '0');
    return head + "." + tail;
}

Rational partial_sum(const std::vector<BigInt>& pi, int p) {
    Rational total = 0;
    const Rational x(1, p);
    Rational xpow = 1;
    for (const BigInt& count : pi) {
        total += Rational(count) * xpow;
        xpow *= x;
    }
    return total;
}

}  // namespace

DigitsReport compute_constant_digits(int base, int digits) {
    const auto t0 = Clock::now();
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (digits < 1 || digits > 1000) throw std::invalid_argument("digits out of range 1..1000");

    const Rational eps = Rational(1) / Rational(pow_int(10, static_cast<unsigned long>(digits) + 2));

    long m = 32;
    std::optional<Rational> tail;
    while (true) {
        tail = certified_tail_bound(base, m);
        if (tail && *tail < eps) break;
        m += m / 2 + 16;
        if (m > 2000000) throw std::logic_error("tail bound failed to converge");
    }

    const double c = 3.14159265358979323846 * std::sqrt(2.0 / 3.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::vector<BigInt> pi = partition_count_table(static_cast<int>(m));
        // Smoke-check the classical bound on the range actually summed.
        for (long n = 0; n <= m; ++n)
            if (pi[static_cast<std::size_t>(n)].get_d() >
                std::exp(c * std::sqrt(static_cast<double>(n))))
                throw std::logic_error("partition bound violated in range");

        const Rational low = partial_sum(pi, base);
        const std::string s_low = truncate_decimal(low, digits);
        const std::string s_high = truncate_decimal(low + *tail, digits);
        if (s_low == s_high) {
            DigitsReport rep;
            rep.base = base;
            rep.digits = digits;
            rep.value = s_low;
            rep.truncation_n = static_cast<int>(m);
            rep.tail_bound = *tail;
            rep.elapsed =
                std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
            return rep;
        }
        // A digit boundary sits inside the bracket; tighten and retry.
        m += 64;
        tail = certified_tail_bound(base, m);
        if (!tail) throw std::logic_error("tail bound lost convergence while refining");
    }
    throw std::logic_error("digit bracketing did not stabilize");
}

}  // namespace qmass
