#ifndef MULTSUB_MULTGROUP_HPP
#define MULTSUB_MULTGROUP_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "multsub/partitions.hpp"

namespace multsub {

class FunctionTable;

struct PrimeExponent {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimeExponent&, const PrimeExponent&) = default;
};

/// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
  std::vector<PrimeExponent> factors;

  /// nu_p(n).
  unsigned valuation(std::uint64_t p) const;
  /// The factored integer (may exceed 64 bits).
  mpz_class value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Uses the table's smallest-prime-factor column when n is in range, else
/// trial division by primes up to sqrt(n). Throws invalid_argument for n = 0.
Factorization factorize(std::uint64_t n, const FunctionTable* table = nullptr);

/// Factorization of phi(n), built from n's factorization.
Factorization totient_factorization(const Factorization& n,
                                    const FunctionTable* table = nullptr);

/// omega_q(n): distinct primes p | n with p = 1 (mod q).
unsigned omega_q(const Factorization& n, std::uint64_t q);
unsigned omega_q(std::uint64_t n, std::uint64_t q);

/// The boundary-corrected count describing the factors of order >= p^r in the
/// p-Sylow subgroup of (Z/nZ)^x.
unsigned omega_bar(const Factorization& n, std::uint64_t p, unsigned r);
unsigned omega_bar(std::uint64_t n, std::uint64_t p, unsigned r);

/// Exponent of p in the Carmichael function lambda(n), via the closed form.
unsigned lambda_p(const Factorization& n, std::uint64_t p);
unsigned lambda_p(std::uint64_t n, std::uint64_t p);

/// Carmichael lambda(n) computed directly as an lcm over prime powers.
mpz_class carmichael(const Factorization& n);

/// Isomorphism type of the p-Sylow subgroup: conjugate of
/// (omega_bar_p, omega_bar_{p^2}, ..., omega_bar_{p^lambda_p}).
/// Throws invalid_argument if p does not divide phi(n), and
/// internal_consistency_error if that sequence is not nonincreasing.
Partition sylow_partition(const Factorization& n, std::uint64_t p);
Partition sylow_partition(std::uint64_t n, std::uint64_t p);

/// p -> Sylow type, keyed by exactly the primes dividing phi(n).
using SylowDecomposition = std::map<std::uint64_t, Partition>;
SylowDecomposition sylow_decomposition(const Factorization& n,
                                       const FunctionTable* table = nullptr);

/// Same decomposition assembled independently from the CRT splitting into
/// cyclic groups (Z/q^e)^x; used to cross-check the omega_bar route.
SylowDecomposition sylow_decomposition_crt(const Factorization& n,
                                           const FunctionTable* table = nullptr);

/// G(n): number of subgroups of (Z/nZ)^x.
mpz_class count_subgroups(const Factorization& n,
                          const FunctionTable* table = nullptr);
mpz_class count_subgroups(std::uint64_t n, const FunctionTable* table = nullptr);

/// I(n): number of isomorphism classes of subgroups of (Z/nZ)^x.
mpz_class count_subgroup_isoclasses(const Factorization& n,
                                    const FunctionTable* table = nullptr);
mpz_class count_subgroup_isoclasses(std::uint64_t n,
                                    const FunctionTable* table = nullptr);

/*
 * Memoizes N_p(alpha) and its log across many n. Not thread-safe; give each
 * worker its own instance.
 */
class SubgroupCounter {
 public:
  mpz_class count(const SylowDecomposition& d);
  mpz_class isoclasses(const SylowDecomposition& d);
  double log_count(const SylowDecomposition& d);
  double log_isoclasses(const SylowDecomposition& d);

 private:
  const mpz_class& pgroup_count(std::uint64_t p, const Partition& alpha);
  const mpz_class& subpartition_count(const Partition& alpha);

  std::map<std::pair<std::uint64_t, Partition>, mpz_class> counts_;
  std::map<Partition, mpz_class> subpartitions_;
};

struct LogCounts {
  double log_G = 0;
  double log_I = 0;
};

/// log G(n) and log I(n) for n in [lo, hi); hi - 1 must not exceed the table bound.
std::vector<LogCounts> log_counts(std::uint64_t lo, std::uint64_t hi,
                                  const FunctionTable& table, SubgroupCounter& counter);

/// Entries for n = 0..N (index 0 unused), filled chunk-parallel.
std::vector<LogCounts> log_counts_table(std::uint32_t N, const FunctionTable& table,
                                        unsigned threads = 0);

inline constexpr std::uint64_t kDefaultOracleCap = 1024;

using ResidueSet = std::vector<std::uint32_t>;

/// Every subgroup of (Z/nZ)^x exactly once, each a sorted residue list, found
/// by breadth-first closure from the trivial subgroup. Throws
/// oracle_too_large when phi(n) > cap.
std::vector<ResidueSet> enumerate_subgroups_oracle(
    std::uint64_t n, std::uint64_t cap = kDefaultOracleCap);

/// Number of distinct isomorphism types among the enumerated subgroups; the
/// type of a finite abelian group is fixed by its element-order histogram.
std::size_t classify_isoclasses_oracle(std::uint64_t n,
                                       std::uint64_t cap = kDefaultOracleCap);

}  // namespace multsub

#endif  // MULTSUB_MULTGROUP_HPP
