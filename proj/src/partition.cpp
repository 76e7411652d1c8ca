#include "qmass/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qmass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

long Partition::square_sum() const noexcept {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int count = 0;
        for (int p : parts_) {
            if (p >= static_cast<int>(j) + 1) ++count;
            else break;
        }
        cols[j] = count;
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
}

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

/* Extend `prefix` with a partition of n whose parts are <= max_part and
 * whose count is <= max_len, visiting completions in reverse-lex order. */
void descend(int n, int max_part, int max_len, std::vector<int>& prefix,
             const std::function<void(const Partition&)>& visit) {
    if (n == 0) {
        visit(Partition(prefix));
        return;
    }
    if (max_len <= 0 || max_part <= 0) return;
    for (int a = std::min(n, max_part); a >= 1; --a) {
        prefix.push_back(a);
        descend(n - a, a, max_len == kUnbounded ? kUnbounded : max_len - 1, prefix, visit);
        prefix.pop_back();
    }
}

BigInt count_descend(int n, int max_part, int max_len, std::vector<std::vector<BigInt>>* memo) {
    if (n == 0) return 1;
    if (max_len <= 0 || max_part <= 0) return 0;
    max_part = std::min(max_part, n);
    if (memo) {
        const BigInt& cached = (*memo)[n][max_part];
        if (cached >= 0) return cached;
    }
    BigInt total = 0;
    for (int a = max_part; a >= 1; --a)
        total += count_descend(n - a, a, max_len == kUnbounded ? kUnbounded : max_len - 1, memo);
    if (memo) (*memo)[n][max_part] = total;
    return total;
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    for_each_partition(n, PartitionConstraints{}, visit);
}

void for_each_partition(int n, const PartitionConstraints& c,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const int max_part = c.max_part.value_or(kUnbounded);
    const int max_len = c.max_length.value_or(kUnbounded);
    const int k_eq = c.first_k_equal.value_or(0);
    if (max_part < 0 || max_len < 0 || k_eq < 0)
        throw std::invalid_argument("constraints must be nonnegative");

    std::vector<int> prefix;
    if (k_eq <= 1) {
        descend(n, max_part, max_len, prefix, visit);
        return;
    }
    // The empty partition satisfies part(0) == part(k-1) for every k.
    if (n == 0) {
        visit(Partition{});
        return;
    }
    if (max_len != kUnbounded && k_eq > max_len) return;
    const int max_lead = std::min(max_part, n / k_eq);
    for (int a = max_lead; a >= 1; --a) {
        prefix.assign(static_cast<std::size_t>(k_eq), a);
        const int rem_len = max_len == kUnbounded ? kUnbounded : max_len - k_eq;
        descend(n - k_eq * a, a, rem_len, prefix, visit);
    }
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, PartitionConstraints{}); }

std::vector<Partition> partitions_of(int n, const PartitionConstraints& c) {
    std::vector<Partition> out;
    for_each_partition(n, c, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigInt count_partitions(int n, const PartitionConstraints& c) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const int max_part = c.max_part.value_or(kUnbounded);
    const int max_len = c.max_length.value_or(kUnbounded);
    const int k_eq = c.first_k_equal.value_or(0);
    if (max_part < 0 || max_len < 0 || k_eq < 0)
        throw std::invalid_argument("constraints must be nonnegative");

    // Memoizing on (remaining, max_part) is only valid without a length bound.
    std::optional<std::vector<std::vector<BigInt>>> memo;
    if (max_len == kUnbounded && n > 0)
        memo.emplace(static_cast<std::size_t>(n) + 1,
                     std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(-1)));
    auto* memo_ptr = memo ? &*memo : nullptr;

    if (k_eq <= 1) return count_descend(n, max_part, max_len, memo_ptr);
    if (n == 0) return 1;
    if (max_len != kUnbounded && k_eq > max_len) return 0;
    BigInt total = 0;
    for (int a = std::min(max_part, n / k_eq); a >= 1; --a) {
        const int rem_len = max_len == kUnbounded ? kUnbounded : max_len - k_eq;
        total += count_descend(n - k_eq * a, a, rem_len, memo_ptr);
    }
    return total;
}

namespace {

void square_sum_descend(int budget, int max_part, std::vector<int>& cur,
                        const std::function<void(const Partition&)>& visit) {
    visit(Partition(cur));
    for (int a = 1; a <= max_part && static_cast<long>(a) * a <= budget; ++a) {
        cur.push_back(a);
        square_sum_descend(budget - a * a, a, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

void for_each_partition_by_square_sum(int limit,
                                      const std::function<void(const Partition&)>& visit) {
    if (limit < 0) throw std::invalid_argument("limit must be nonnegative");
    std::vector<int> cur;
    square_sum_descend(limit, limit, cur, visit);
}

std::vector<Partition> partitions_by_square_sum(int limit) {
    std::vector<Partition> out;
    for_each_partition_by_square_sum(limit, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<BigInt> partition_count_table(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<BigInt> pi(static_cast<std::size_t>(n) + 1);
    pi[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > m) break;
            if (k % 2 == 1) {
                acc += pi[m - g1];
                if (g2 <= m) acc += pi[m - g2];
            } else {
                acc -= pi[m - g1];
                if (g2 <= m) acc -= pi[m - g2];
            }
        }
        pi[m] = std::move(acc);
    }
    return pi;
}

BigInt partition_count(int n) { return partition_count_table(n).back(); }

}  // namespace qmass
