#include "qmass/group_mass.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qmass {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GroupDescriptor::GroupDescriptor(int p, Partition type) : p_(p), type_(std::move(type)) {
    if (!is_prime(p_)) throw std::invalid_argument("p must be prime");
}

BigInt GroupDescriptor::group_order() const {
    return pow_int(p_, static_cast<unsigned long>(type_.weight()));
}

namespace {

/* f_k evaluated at a rational point: prod_{i=1..k} (1 - x^i). */
Rational f_eval(int k, const Rational& x) {
    Rational out = 1;
    Rational xpow = 1;
    for (int i = 1; i <= k; ++i) {
        xpow *= x;
        out *= (1 - xpow);
    }
    return out;
}

}  // namespace

BigInt aut_order(const GroupDescriptor& g) {
    const Partition mu = g.type().conjugate();
    const Rational rho(1, g.prime());
    Rational out = pow_rational(Rational(g.prime()), static_cast<unsigned long>(mu.square_sum()));
    for (std::size_t j = 0; j < mu.length(); ++j)
        out *= f_eval(mu.part(j) - mu.part(j + 1), rho);
    if (!is_integral(out)) throw std::logic_error("automorphism order came out non-integral");
    return out.get_num();
}

BigInt hol_order(const GroupDescriptor& g) { return g.group_order() * aut_order(g); }

TruncSeries dual_mass_series(const Partition& mu, std::size_t order) {
    const long lead = mu.square_sum();
    if (lead > static_cast<long>(order)) return TruncSeries(order);
    TruncSeries out = TruncSeries::monomial(static_cast<std::size_t>(lead), 1, order);
    for (std::size_t j = 0; j < mu.length(); ++j) {
        const int d = mu.part(j) - mu.part(j + 1);
        for (int i = 1; i <= d; ++i) out.mul_inv_one_minus_power(static_cast<std::size_t>(i));
    }
    return out;
}

TruncSeries aut_mass_series(const Partition& lambda, std::size_t order) {
    return dual_mass_series(lambda.conjugate(), order);
}

namespace {

/* Elements of G = (+)_i Z/m_i are mixed-radix tuples, addressed by a
 * single index so subgroup closure is a reachability walk. */
struct SmallGroup {
    std::vector<long> moduli;
    long size = 1;

    long add(long a, long b) const {
        long out = 0, mult = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            const long s = (a % moduli[i] + b % moduli[i]) % moduli[i];
            out += s * mult;
            mult *= moduli[i];
            a /= moduli[i];
            b /= moduli[i];
        }
        return out;
    }

    bool killed_by(long id, long scalar) const {
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if ((id % moduli[i]) * scalar % moduli[i] != 0) return false;
            id /= moduli[i];
        }
        return true;
    }
};

bool generates_whole_group(const SmallGroup& g, const std::vector<long>& gens,
                           std::vector<char>& seen, std::vector<long>& stack) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    seen[0] = 1;
    stack.push_back(0);
    long reached = 1;
    while (!stack.empty()) {
        const long cur = stack.back();
        stack.pop_back();
        for (long gen : gens) {
            const long nxt = g.add(cur, gen);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                ++reached;
                stack.push_back(nxt);
            }
        }
    }
    return reached == g.size;
}

}  // namespace

BigInt brute_force_aut_count(const GroupDescriptor& desc) {
    SmallGroup g;
    for (int part : desc.type().parts()) {
        long m = 1;
        for (int e = 0; e < part; ++e) {
            m *= desc.prime();
            if (g.size * m > 128) throw std::domain_error("oracle limit");
        }
        g.moduli.push_back(m);
        g.size *= m;
    }
    if (g.moduli.empty()) return 1;

    // The image of the i-th cyclic generator can be any element killed by
    // p^{lambda_i}; such assignments always extend to endomorphisms.
    const std::size_t r = g.moduli.size();
    std::vector<std::vector<long>> candidates(r);
    for (std::size_t i = 0; i < r; ++i)
        for (long id = 0; id < g.size; ++id)
            if (g.killed_by(id, g.moduli[i])) candidates[i].push_back(id);

    std::vector<std::size_t> pick(r, 0);
    std::vector<long> images(r);
    std::vector<char> seen(static_cast<std::size_t>(g.size));
    std::vector<long> stack;
    long long count = 0;
    while (true) {
        for (std::size_t i = 0; i < r; ++i) images[i] = candidates[i][pick[i]];
        // Surjective endomorphisms of a finite group are automorphisms.
        if (generates_whole_group(g, images, seen, stack)) ++count;
        std::size_t i = 0;
        while (i < r && ++pick[i] == candidates[i].size()) pick[i++] = 0;
        if (i == r) break;
    }
    return BigInt(static_cast<long>(count));
}

}  // namespace qmass
