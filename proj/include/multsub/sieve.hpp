#ifndef MULTSUB_SIEVE_HPP
#define MULTSUB_SIEVE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace multsub {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

/*
 * Arithmetic functions over [2, N] from one linear sieve pass:
 * smallest prime factor, phi(n), omega(phi(n)) and Omega(phi(n)).
 * Immutable after build(); share freely across threads.
 */
class FunctionTable {
 public:
  /// Throws invalid_argument for N < 2, resource_error past the budget.
  static FunctionTable build(std::uint32_t N,
                             std::size_t memory_budget = kDefaultMemoryBudget);

  /// Bytes build(N) would allocate.
  static std::size_t estimated_bytes(std::uint32_t N);

  std::uint32_t bound() const { return bound_; }
  bool contains(std::uint64_t n) const { return n >= 1 && n <= bound_; }

  std::uint32_t smallest_prime_factor(std::uint32_t n) const { return spf_[n]; }
  std::uint32_t totient(std::uint32_t n) const { return phi_[n]; }
  unsigned omega_phi(std::uint32_t n) const { return omega_phi_[n]; }
  unsigned bigomega_phi(std::uint32_t n) const { return bigomega_phi_[n]; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

  /// All primes <= N, ascending.
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  std::uint32_t bound_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint8_t> omega_phi_;
  std::vector<std::uint8_t> bigomega_phi_;
  std::vector<std::uint32_t> primes_;
};

/// Primes <= N ascending (plain Eratosthenes, odd-only bitmap).
std::vector<std::uint64_t> primes_up_to(std::uint64_t N);

/// Entry n holds omega_q(n) = #{p | n : p = 1 mod q}; indices 0 and 1 are 0.
/// Throws invalid_argument for q < 2.
std::vector<std::uint8_t> omega_q_table(const FunctionTable& t, std::uint64_t q);
/// Same, refilling a caller-owned scratch array.
void omega_q_table(const FunctionTable& t, std::uint64_t q,
                   std::vector<std::uint8_t>& out);

struct PrimePower {
  std::uint64_t q;     // p^k
  std::uint64_t p;
  double mangoldt;     // log p
};

/// Prime powers q <= X, ascending, with Lambda(q).
std::vector<PrimePower> prime_power_list(double X);

}  // namespace multsub

#endif  // MULTSUB_SIEVE_HPP
