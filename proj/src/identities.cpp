#include "qmass/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmass/group_mass.hpp"
#include "qmass/partition.hpp"

namespace qmass {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
}

/* Routes must agree in length and, for every identity here, carry
 * nonnegative integer coefficients; anything else is an internal bug,
 * not a mismatch. */
void check_routes(const std::vector<SeriesRoute>& routes) {
    for (const SeriesRoute& r : routes) {
        if (r.coeffs.size() != routes.front().coeffs.size())
            throw std::logic_error("verification routes differ in length");
        for (const Rational& c : r.coeffs) {
            if (!is_integral(c) || c < 0)
                throw std::logic_error("route '" + r.label +
                                       "' has a non-integer or negative coefficient");
        }
    }
}

IdentityReport make_report(std::string identity, std::vector<std::pair<std::string, long>> params,
                           std::vector<SeriesRoute> routes, Clock::time_point t0) {
    check_routes(routes);
    IdentityReport rep;
    rep.identity = std::move(identity);
    rep.params = std::move(params);
    rep.first_mismatch = first_mismatch_among(routes);
    rep.routes = std::move(routes);
    rep.elapsed = since(t0);
    return rep;
}

SeriesRoute route(std::string label, const TruncSeries& s) {
    return SeriesRoute{std::move(label), s.coeffs()};
}

}  // namespace

std::optional<MismatchInfo> first_mismatch_among(const std::vector<SeriesRoute>& routes) {
    if (routes.empty()) return std::nullopt;
    const std::size_t len = routes.front().coeffs.size();
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t a = 0; a < routes.size(); ++a)
            for (std::size_t b = a + 1; b < routes.size(); ++b)
                if (routes[a].coeffs[n] != routes[b].coeffs[n]) return MismatchInfo{n, a, b};
    return std::nullopt;
}

IdentityReport verify_rr_first(std::size_t order) {
    const auto t0 = Clock::now();
    TruncSeries lhs = TruncSeries::constant(1, order);
    for (std::size_t k = 1; k * k <= order; ++k)
        lhs.add_shifted(f_poly(static_cast<int>(k), order).inverse(), k * k);
    const TruncSeries rhs = restricted_product(5, {0, 2, 3}, order);
    return make_report("rr1", {{"order", static_cast<long>(order)}},
                       {route("lhs", lhs), route("rhs", rhs)}, t0);
}

IdentityReport verify_rr_second(std::size_t order) {
    const auto t0 = Clock::now();
    TruncSeries lhs = TruncSeries::constant(1, order);
    for (std::size_t k = 1; k * k + k <= order; ++k)
        lhs.add_shifted(f_poly(static_cast<int>(k), order).inverse(), k * k + k);
    const TruncSeries rhs = restricted_product(5, {0, 1, 4}, order);
    return make_report("rr2", {{"order", static_cast<long>(order)}},
                       {route("lhs", lhs), route("rhs", rhs)}, t0);
}

namespace {

/* Depth-first over k_r, k_{r-1}, ..., k_1 (weakly increasing as we go
 * up), pruning on the square-sum budget and sharing the partial
 * product of 1/f factors along each prefix. */
void ag_descend(int j, int i, int k_prev, long sq, long lin, const TruncSeries& prod,
                std::size_t order, TruncSeries& acc) {
    if (j == 0) {
        const long exponent = sq + lin;
        if (exponent <= static_cast<long>(order))
            acc.add_shifted(prod, static_cast<std::size_t>(exponent));
        return;
    }
    TruncSeries fac = prod;  // prod / f_{k - k_prev}, maintained as k grows
    for (int k = k_prev; sq + static_cast<long>(k) * k <= static_cast<long>(order); ++k) {
        if (k > k_prev) fac.mul_inv_one_minus_power(static_cast<std::size_t>(k - k_prev));
        ag_descend(j - 1, i, k, sq + static_cast<long>(k) * k, lin + (j >= i ? k : 0), fac,
                   order, acc);
    }
}

}  // namespace

TruncSeries andrews_gordon_sum(int r, int i, std::size_t order) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (i < 1 || i > r + 1) throw std::invalid_argument("i must lie in 1..r+1");
    TruncSeries acc(order);
    ag_descend(r, i, 0, 0, 0, TruncSeries::constant(1, order), order, acc);
    return acc;
}

IdentityReport verify_andrews_gordon(int r, int i, std::size_t order,
                                     std::optional<int> modulus_override) {
    const auto t0 = Clock::now();
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (i < 1 || i > r + 1) throw std::invalid_argument("i must lie in 1..r+1");
    if (modulus_override && *modulus_override < 1)
        throw std::invalid_argument("modulus override must be positive");

    const int modulus = modulus_override.value_or(2 * r + 3);
    const TruncSeries lhs = andrews_gordon_sum(r, i, order);
    const TruncSeries rhs =
        restricted_product(modulus, {0, i % modulus, (modulus - i % modulus) % modulus}, order);

    std::vector<std::pair<std::string, long>> params = {
        {"r", r}, {"i", i}, {"order", static_cast<long>(order)}};
    if (modulus_override) params.emplace_back("modulus", *modulus_override);
    return make_report("ag", std::move(params), {route("lhs", lhs), route("rhs", rhs)}, t0);
}

IdentityReport verify_bounded_exponent(int r, std::size_t order) {
    const auto t0 = Clock::now();
    if (r < 1) throw std::invalid_argument("r must be at least 1");

    /* Exponent at most p^r means the type lambda has largest part at
     * most r; only types whose dual square sum fits the truncation can
     * contribute. */
    TruncSeries lambda_route(order);
    PartitionConstraints bounded_part;
    bounded_part.max_part = r;
    for (int n = 0; n <= static_cast<int>(order); ++n) {
        for_each_partition(n, bounded_part, [&](const Partition& lam) {
            if (lam.conjugate().square_sum() <= static_cast<long>(order))
                lambda_route.add_shifted(aut_mass_series(lam, order), 0);
        });
    }
    const TruncSeries tuple_route = andrews_gordon_sum(r, r + 1, order);

    return make_report("bounded-exp", {{"r", r}, {"order", static_cast<long>(order)}},
                       {route("lambda_sum", lambda_route), route("tuple_sum", tuple_route)}, t0);
}

IdentityReport verify_hall(std::size_t order) {
    const auto t0 = Clock::now();
    TruncSeries lhs(order);
    for_each_partition_by_square_sum(static_cast<int>(order), [&](const Partition& mu) {
        lhs.add_shifted(dual_mass_series(mu, order), 0);
    });
    const TruncSeries rhs = restricted_product(1, {}, order);
    return make_report("hall", {{"order", static_cast<long>(order)}},
                       {route("lhs", lhs), route("rhs", rhs)}, t0);
}

IdentityReport verify_holomorph(std::size_t order) {
    const auto t0 = Clock::now();

    TruncSeries capable_count(order);
    PartitionConstraints two_equal;
    two_equal.first_k_equal = 2;
    for (int n = 0; n <= static_cast<int>(order); ++n)
        capable_count.coeff(static_cast<std::size_t>(n)) = Rational(count_partitions(n, two_equal));

    /* sum over types of x^{|G| exponent} / |Aut|, i.e. 1/|Hol| with x
     * for 1/p: shift each mass series by the weight. */
    TruncSeries hol_mass(order);
    for_each_partition_by_square_sum(static_cast<int>(order), [&](const Partition& mu) {
        const long shift = mu.weight();
        if (shift + mu.square_sum() <= static_cast<long>(order))
            hol_mass.add_shifted(dual_mass_series(mu, order), static_cast<std::size_t>(shift));
    });

    // prod_{j >= 2} 1/(1 - x^j) = (1 - x) * prod_{j >= 1} 1/(1 - x^j)
    const TruncSeries min_two = f_poly(1, order) * restricted_product(1, {}, order);

    return make_report("holomorph", {{"order", static_cast<long>(order)}},
                       {route("capable_count", capable_count), route("hol_mass", hol_mass),
                        route("parts_ge_2_product", min_two)},
                       t0);
}

IdentityReport verify_generalized(int k, std::size_t order) {
    const auto t0 = Clock::now();
    if (k < 0) throw std::invalid_argument("k must be nonnegative");

    TruncSeries class_count(order);
    PartitionConstraints first_equal;
    first_equal.first_k_equal = k + 1;
    for (int n = 0; n <= static_cast<int>(order); ++n)
        class_count.coeff(static_cast<std::size_t>(n)) = Rational(count_partitions(n, first_equal));

    TruncSeries mass_sum(order);
    for_each_partition_by_square_sum(static_cast<int>(order), [&](const Partition& mu) {
        const long shift = static_cast<long>(k) * mu.weight();
        if (shift + mu.square_sum() <= static_cast<long>(order))
            mass_sum.add_shifted(dual_mass_series(mu, order), static_cast<std::size_t>(shift));
    });

    const TruncSeries product_form = f_poly(k, order) * restricted_product(1, {}, order);

    return make_report("gen", {{"k", k}, {"order", static_cast<long>(order)}},
                       {route("class_count", class_count), route("mass_sum", mass_sum),
                        route("product_form", product_form)},
                       t0);
}

namespace {

Rational mass_partial_sum(int p, int budget) {
    Rational total = 0;
    const Rational x(1, p);
    for_each_partition_by_square_sum(budget, [&](const Partition& mu) {
        total += dual_mass_series(mu, static_cast<std::size_t>(budget)).evaluate(x);
    });
    return total;
}

}  // namespace

HallNumericReport verify_hall_numeric(int p, int n_max, int mass_budget) {
    const auto t0 = Clock::now();
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n_max < 0 || mass_budget < 0) throw std::invalid_argument("budgets must be nonnegative");

    HallNumericReport rep;
    rep.p = p;
    rep.n_max = n_max;
    rep.mass_budget = mass_budget;

    // Probe quarter points to exhibit the monotone approach from below.
    std::vector<int> budgets;
    for (int q = 1; q <= 4; ++q) {
        const int b = mass_budget * q / 4;
        if (budgets.empty() || budgets.back() != b) budgets.push_back(b);
    }
    rep.monotone = true;
    for (int b : budgets) {
        rep.probes.emplace_back(b, mass_partial_sum(p, b));
        const std::size_t i = rep.probes.size();
        if (i > 1 && rep.probes[i - 2].second > rep.probes[i - 1].second) rep.monotone = false;
    }
    rep.mass_total = rep.probes.back().second;

    const std::vector<BigInt> pi = partition_count_table(n_max);
    const Rational x(1, p);
    Rational xpow = 1;
    rep.partition_total = 0;
    for (int n = 0; n <= n_max; ++n) {
        rep.partition_total += Rational(pi[static_cast<std::size_t>(n)]) * xpow;
        xpow *= x;
    }

    rep.gap = rep.mass_total - rep.partition_total;
    if (rep.gap < 0) rep.gap = -rep.gap;
    rep.elapsed = since(t0);
    return rep;
}

}  // namespace qmass
