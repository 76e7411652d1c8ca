#pragma once

#include "qmass/partition.hpp"
#include "qmass/rational.hpp"
#include "qmass/series.hpp"

namespace qmass {

bool is_prime(int p);

/* A finite abelian p-group given by its type: the direct sum of
 * Z/p^{lambda_i} over the parts of lambda. */
class GroupDescriptor {
  public:
    GroupDescriptor(int p, Partition type);  // throws std::invalid_argument unless p is prime

    int prime() const noexcept { return p_; }
    const Partition& type() const noexcept { return type_; }
    BigInt group_order() const;  // p^{weight(type)}

  private:
    int p_;
    Partition type_;
};

/* |Aut(G)| by the closed form over the dual partition mu:
 * p^{sum mu_i^2} * prod_j f_{mu_j - mu_{j+1}}(1/p), with mu_{s+1} = 0.
 * Computed in exact rationals; a non-integer result throws
 * std::logic_error (it would mean the implementation is wrong). */
BigInt aut_order(const GroupDescriptor& g);

/* |Hol(G)| = |G| * |Aut(G)|. */
BigInt hol_order(const GroupDescriptor& g);

/* The series x^{sum mu_i^2} * prod_j 1/f_{mu_j - mu_{j+1}}(x) with
 * mu = conjugate(lambda): this is 1/|Aut(G)| with x standing for 1/p. */
TruncSeries aut_mass_series(const Partition& lambda, std::size_t order);

/* Same series with the dual partition given directly. */
TruncSeries dual_mass_series(const Partition& mu, std::size_t order);

/* Independent oracle: counts automorphisms by enumerating candidate
 * generator images and testing that they generate the whole group.
 * Guarded to |G| <= 128; beyond that throws
 * std::domain_error("oracle limit"). */
BigInt brute_force_aut_count(const GroupDescriptor& g);

}  // namespace qmass
