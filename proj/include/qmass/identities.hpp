#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmass/rational.hpp"
#include "qmass/series.hpp"

namespace qmass {

struct SeriesRoute {
    std::string label;
    std::vector<Rational> coeffs;

    friend bool operator==(const SeriesRoute&, const SeriesRoute&) = default;
};

struct MismatchInfo {
    std::size_t index;    // coefficient degree of the first disagreement
    std::size_t route_a;  // indices into IdentityReport::routes
    std::size_t route_b;

    friend bool operator==(const MismatchInfo&, const MismatchInfo&) = default;
};

/* Outcome of one coefficientwise verification. routes[0] and routes[1]
 * are the two primary sides; a third route holds the extra cross-check
 * some identities carry. All route arrays span degrees 0..N. */
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, long>> params;
    std::vector<SeriesRoute> routes;
    std::optional<MismatchInfo> first_mismatch;
    std::chrono::microseconds elapsed{0};

    bool ok() const { return !first_mismatch.has_value(); }
    const std::vector<Rational>& lhs() const { return routes[0].coeffs; }
    const std::vector<Rational>& rhs() const { return routes[1].coeffs; }
};

/* Smallest degree at which any two routes disagree, scanning route
 * pairs in index order at each degree. */
std::optional<MismatchInfo> first_mismatch_among(const std::vector<SeriesRoute>& routes);

/* Sum side of the odd-modulus family: over k_1 >= ... >= k_r >= 0 with
 * sum k_j^2 <= N, the terms x^{sum k_j^2 + k_i + ... + k_r} / prod_j
 * f_{k_j - k_{j+1}} with k_{r+1} = 0. */
TruncSeries andrews_gordon_sum(int r, int i, std::size_t order);

IdentityReport verify_rr_first(std::size_t order);
IdentityReport verify_rr_second(std::size_t order);
IdentityReport verify_andrews_gordon(int r, int i, std::size_t order,
                                     std::optional<int> modulus_override = std::nullopt);
IdentityReport verify_bounded_exponent(int r, std::size_t order);
IdentityReport verify_hall(std::size_t order);
IdentityReport verify_holomorph(std::size_t order);
IdentityReport verify_generalized(int k, std::size_t order);

/* Exact numeric reading at x = 1/p: mass_total sums the truncated
 * 1/|Aut| series values over the budgeted types, partition_total is
 * sum_{n <= n_max} pi(n)/p^n. Both exact rationals. */
struct HallNumericReport {
    int p = 0;
    int n_max = 0;
    int mass_budget = 0;
    Rational mass_total;       // A
    Rational partition_total;  // B
    Rational gap;              // |A - B|
    bool monotone = false;     // A nondecreasing across the probe budgets
    std::vector<std::pair<int, Rational>> probes;  // (budget, A at that budget)
    std::chrono::microseconds elapsed{0};

    bool ok() const { return monotone; }
};
HallNumericReport verify_hall_numeric(int p, int n_max, int mass_budget);

/* Decimal digits of sum_{n>=0} pi(n)/base^n, truncated (not rounded),
 * with a certified remainder: the reported string is a true prefix of
 * the constant because tail_bound < 10^-(digits+2) brackets the value.
 * base may be any integer >= 2; digits must lie in 1..1000. */
struct DigitsReport {
    int base = 0;
    int digits = 0;
    std::string value;
    int truncation_n = 0;  // summed pi(n)/base^n for n <= truncation_n
    Rational tail_bound;
    std::chrono::microseconds elapsed{0};
};
DigitsReport compute_constant_digits(int base, int digits);

}  // namespace qmass
