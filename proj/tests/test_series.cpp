#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmass/series.hpp"

using namespace qmass;

namespace {

TruncSeries random_series(std::mt19937& rng, std::size_t order, bool unit) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    TruncSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        s.coeff(k) = c;
    }
    if (unit && s[0] == 0) s.coeff(0) = 1;
    return s;
}

}  // namespace

TEST_CASE("monomial and constant") {
    const TruncSeries one = TruncSeries::monomial(0, 1, 5);
    CHECK(one[0] == 1);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(one[k] == 0);
    const TruncSeries x2 = TruncSeries::monomial(2, 1, 5);
    CHECK(x2[2] == 1);
    CHECK(x2[0] == 0);
    CHECK(TruncSeries::monomial(7, 3, 5) == TruncSeries(5));  // beyond the order: zero series
}

TEST_CASE("telescoping product and binomial square") {
    TruncSeries geometric(8);
    for (std::size_t k = 0; k <= 8; ++k) geometric.coeff(k) = 1;
    TruncSeries one_minus_x(8);
    one_minus_x.coeff(0) = 1;
    one_minus_x.coeff(1) = -1;
    CHECK(one_minus_x * geometric == TruncSeries::constant(1, 8));

    TruncSeries one_plus_x(4);
    one_plus_x.coeff(0) = 1;
    one_plus_x.coeff(1) = 1;
    const TruncSeries sq = one_plus_x * one_plus_x;
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 2);
    CHECK(sq[2] == 1);
    CHECK(sq[3] == 0);
}

TEST_CASE("binary operations truncate to the smaller order") {
    std::mt19937 rng(7);
    const TruncSeries a = random_series(rng, 12, false);
    const TruncSeries b = random_series(rng, 7, false);
    CHECK((a + b).order() == 7);
    CHECK((a - b).order() == 7);
    CHECK((a * b).order() == 7);
}

TEST_CASE("ring laws on randomized series") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> ord(0, 64);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = ord(rng);
        const TruncSeries a = random_series(rng, n, false);
        const TruncSeries b = random_series(rng, n, false);
        const TruncSeries c = random_series(rng, n, false);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncSeries(n));
    }
}

TEST_CASE("inverse: examples and randomized round trips") {
    TruncSeries one_minus_x(6);
    one_minus_x.coeff(0) = 1;
    one_minus_x.coeff(1) = -1;
    const TruncSeries inv = one_minus_x.inverse();
    for (std::size_t k = 0; k <= 6; ++k) CHECK(inv[k] == 1);

    CHECK_THROWS_WITH_AS(TruncSeries(4).inverse(), "non-unit series", std::domain_error);

    for (int k = 0; k <= 10; ++k) {
        const TruncSeries f = f_poly(k, 50);
        CHECK(f.inverse() * f == TruncSeries::constant(1, 50));
    }

    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> ord(0, 48);
    for (int trial = 0; trial < 200; ++trial) {
        const TruncSeries a = random_series(rng, ord(rng), true);
        CHECK(a * a.inverse() == TruncSeries::constant(1, a.order()));
    }
}

TEST_CASE("f_poly") {
    CHECK(f_poly(0, 8) == TruncSeries::constant(1, 8));
    TruncSeries f1(8);
    f1.coeff(0) = 1;
    f1.coeff(1) = -1;
    CHECK(f_poly(1, 8) == f1);

    const TruncSeries f2 = f_poly(2, 10);
    CHECK(f2[0] == 1);
    CHECK(f2[1] == -1);
    CHECK(f2[2] == -1);
    CHECK(f2[3] == 1);
    for (std::size_t k = 4; k <= 10; ++k) CHECK(f2[k] == 0);

    for (int k = 1; k <= 20; ++k) {
        TruncSeries prev = f_poly(k - 1, 40);
        prev.mul_one_minus_power(static_cast<std::size_t>(k));
        CHECK(prev == f_poly(k, 40));
    }
}

TEST_CASE("restricted products count partitions into allowed parts") {
    const TruncSeries all = restricted_product(1, {}, 12);
    const auto pi = testing::dp_partition_counts(12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(all[n] == Rational(pi[n]));

    const TruncSeries rr = restricted_product(5, {0, 2, 3}, 4);
    CHECK(rr[0] == 1);
    CHECK(rr[1] == 1);
    CHECK(rr[2] == 1);
    CHECK(rr[3] == 1);
    CHECK(rr[4] == 2);

    CHECK(restricted_product(1, {0}, 9) == TruncSeries::constant(1, 9));

    struct Config {
        int modulus;
        std::set<int> excluded;
    };
    const Config configs[] = {
        {1, {}}, {5, {0, 2, 3}}, {5, {0, 1, 4}}, {7, {0, 3, 4}}, {4, {2}},
    };
    for (const Config& cfg : configs) {
        const TruncSeries s = restricted_product(cfg.modulus, cfg.excluded, 30);
        for (int n = 0; n <= 30; ++n) {
            const BigInt expected = testing::restricted_partition_count(n, [&](int part) {
                return !cfg.excluded.count(part % cfg.modulus);
            });
            CHECK(s[static_cast<std::size_t>(n)] == Rational(expected));
            CHECK(is_integral(s[static_cast<std::size_t>(n)]));
            CHECK(s[static_cast<std::size_t>(n)] >= 0);
        }
    }
}

TEST_CASE("evaluate") {
    TruncSeries one_minus_x(3);
    one_minus_x.coeff(0) = 1;
    one_minus_x.coeff(1) = -1;
    Rational half(1, 2);
    CHECK(one_minus_x.evaluate(half) == half);

    for (std::size_t n : {0u, 1u, 5u, 10u}) {
        TruncSeries geo(n);
        for (std::size_t k = 0; k <= n; ++k) geo.coeff(k) = 1;
        // finite geometric sum: 2 - 2^-n
        const Rational expected = Rational(2) - Rational(1) / Rational(pow_int(2, n));
        CHECK(geo.evaluate(half) == expected);
    }

    const TruncSeries parts = restricted_product(1, {}, 10);
    const auto pi = testing::dp_partition_counts(10);
    Rational expected = 0;
    for (int n = 0; n <= 10; ++n)
        expected += Rational(pi[n]) / Rational(pow_int(2, static_cast<unsigned long>(n)));
    CHECK(parts.evaluate(half) == expected);
}

TEST_CASE("add_shifted") {
    TruncSeries acc(5);
    TruncSeries s = TruncSeries::constant(1, 5);
    s.coeff(1) = 3;
    acc.add_shifted(s, 2);
    CHECK(acc[2] == 1);
    CHECK(acc[3] == 3);
    acc.add_shifted(s, 9);  // beyond the order: no-op
    CHECK(acc[2] == 1);
}
