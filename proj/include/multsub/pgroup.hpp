#ifndef MULTSUB_PGROUP_HPP
#define MULTSUB_PGROUP_HPP

#include <cstdint>

#include <gmpxx.h>

#include "multsub/partitions.hpp"

namespace multsub {

/// Isomorphism type Z_{p^alpha_1} x Z_{p^alpha_2} x ... of a finite abelian p-group.
struct PGroupType {
  std::uint64_t p;
  Partition alpha;

  /// Throws invalid_argument if p is not prime.
  PGroupType(std::uint64_t prime, Partition type);
};

/// Gaussian binomial [k, l]_p; zero when l < 0 or l > k.
/// Throws invalid_argument if p is not prime.
mpz_class gaussian_binomial(unsigned k, int l, std::uint64_t p);

/// Number of subgroups of g isomorphic to the type beta (0 unless beta <= alpha).
mpz_class subgroup_count_of_type(const PGroupType& g, const Partition& beta);

/// Total number of subgroups of g.
///
/// Sums the classical product formula over all subpartitions without listing
/// them: with a = alpha', b = beta', the summand factors along the chain
/// (b_1, b_2, ...) into terms depending only on (b_j, b_{j+1}), so a DP over
/// the value of b_j walks the whole subpartition lattice in O(alpha_1 a_1^2).
mpz_class subgroup_count(const PGroupType& g);

/// (log p / 4) * sum_j a_j^2 where a is the conjugate of g.alpha.
double log_subgroup_count_main_term(const PGroupType& g);

}  // namespace multsub

#endif  // MULTSUB_PGROUP_HPP
