#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qmass/rational.hpp"

namespace qmass {

/* An integer partition: weakly decreasing positive parts. The empty
 * partition is valid (weight 0, length 0) and stands for the trivial
 * group throughout; parts beyond the length read as 0. */
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws std::invalid_argument

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept { return weight_; }  // sum of the parts
    long square_sum() const noexcept;

    /* i-th largest part, 0-based; 0 beyond the length. */
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /* Dual partition: column lengths of the Young diagram. */
    Partition conjugate() const;

    /* Two equal largest parts under zero padding; true for the empty
     * partition. These are the types of capable abelian p-groups. */
    bool capable() const noexcept { return part(0) == part(1); }

    /* part(0) == part(k-1) under zero padding; vacuous for k <= 1. */
    bool first_parts_equal(int k) const noexcept {
        return k <= 1 || part(0) == part(static_cast<std::size_t>(k) - 1);
    }

    std::string to_string() const;  // "3,1"; empty string for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionConstraints {
    std::optional<int> max_part;
    std::optional<int> max_length;
    std::optional<int> first_k_equal;  // part(0) == part(k-1), zero padded
};

/* Partitions of n in reverse-lexicographic order (largest first part
 * first). The visitor forms avoid materializing large lists. */
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
void for_each_partition(int n, const PartitionConstraints& c,
                        const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, const PartitionConstraints& c);

/* Number of partitions of n under the constraints, counted by direct
 * recursion (no closed form). */
BigInt count_partitions(int n, const PartitionConstraints& c);

/* All partitions mu (of any weight) with sum of squared parts <= limit,
 * each exactly once. Deterministic order: depth-first, smaller parts
 * first, so () leads and extensions follow their prefix. */
void for_each_partition_by_square_sum(int limit,
                                      const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions_by_square_sum(int limit);

/* pi(0..n) via the Euler pentagonal-number recurrence. */
std::vector<BigInt> partition_count_table(int n);
BigInt partition_count(int n);

}  // namespace qmass
