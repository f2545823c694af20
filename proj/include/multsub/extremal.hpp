#ifndef MULTSUB_EXTREMAL_HPP
#define MULTSUB_EXTREMAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "multsub/ekstats.hpp"
#include "multsub/multgroup.hpp"

namespace multsub {

class FunctionTable;

enum class Provenance { scan, construction };

struct ExtremalRecord {
  std::string n;      // decimal
  Which which = Which::G;
  double value = 0;   // log G(n) or log I(n)
  double normalized = 0;  // value loglog n / (log n)^2 for G, value loglog n / log n for I
  Provenance provenance = Provenance::scan;
};

/// value * loglog n / (log n)^2 (G) or value * loglog n / log n (I).
double normalize_extremal(double value, double log_n, Which which);

/// argmax over 3 <= n <= N, ties to the smaller n. Requires 3 <= N <= table.bound().
ExtremalRecord scan_max(std::uint32_t N, Which which, const FunctionTable& table,
                        unsigned threads = 0);
/// Same over precomputed counts (index n holds n's values).
ExtremalRecord scan_max(std::span<const LogCounts> counts, std::uint32_t N, Which which);

/// theta(V; p, 1) = sum of log q over primes q <= V with q = 1 (mod p).
double theta_progression(double V, std::uint64_t p);

struct GConstruction {
  ExtremalRecord record;
  double x = 0;
  double bv_exponent = 0;
  double V = 0;
  double Q = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> primes;  // the q <= V with q = 1 (mod p)
  mpz_class n;
  unsigned omega_p = 0;   // omega_p(n)
  unsigned lambda_p = 0;  // lambda_p(n)
  double claimed_lower_bound = 0;  // (log p/4) omega_p^2 - c lambda_p log p
  bool below_x = false;
  bool bound_holds = false;
};

/// Pinned c in |log N_p(alpha) - main term| <= c alpha_1 log p.
inline constexpr double kLogCountSlack = 2.7756;

/// V = (log x)^2 / (loglog x)^{2b+1} (1 - 1/loglog x), Q = log x / (loglog x)^{2b+1};
/// p is the prime in (Q, 2Q) minimizing |theta(V; p, 1) - V/(p-1)|, and n is
/// the product of the primes q <= V with q = 1 (mod p).
/// Throws construction_failed when (Q, 2Q) has no prime.
GConstruction construct_G_extremal(double x, double bv_exponent = 0.0);

struct IConstruction {
  ExtremalRecord record;
  double x = 0;
  double U = 0;
  std::uint64_t m = 0;     // product of the primes <= U
  unsigned pi_U = 0;
  std::uint64_t k = 0;     // q = 1 + k m
  std::uint64_t q = 0;
  unsigned omega_phi_q = 0;
  mpz_class I;
  bool below_x = false;
  bool omega_claim_holds = false;  // omega(q - 1) >= pi(U)
  bool lower_bound_holds = false;  // I(q) >= 2^omega(q - 1)
};

inline constexpr std::uint64_t kDefaultCandidateCap = 10'000'000;

/// U = log x / 5 - loglog x, m = prod_{p <= U} p, q the least prime 1 + k m.
/// Throws construction_failed when no prime appears within the candidate cap
/// or when m k overflows 64 bits.
IConstruction construct_I_extremal(double x, std::uint64_t candidate_cap = kDefaultCandidateCap);

/// Smallest slack s with max_{n <= N} log G(n) <= (1/4)(log N)^2/loglog N (1 + s)
/// for every N checked while pinning.
inline constexpr double kPinnedSlack = 0.17;

struct UpperBoundReport {
  std::uint32_t N = 0;
  double slack = 0;
  double max_log_G = 0;
  std::uint64_t argmax_G = 0;
  double G_bound = 0;
  bool G_ok = false;
  std::uint64_t I_violations = 0;          // log I(n) >= pi sqrt(2/3) sum sqrt(k_p)
  std::uint64_t first_I_violation = 0;
  double min_I_margin = 0;                 // min over n of bound - log I(n)
  std::uint64_t partition_violations = 0;  // I_p > sum P(j) or sum P(j) > (k+1) P(k)
  bool passed() const { return G_ok && I_violations == 0 && partition_violations == 0; }
};

/// Requires 100 <= N <= table.bound().
UpperBoundReport upper_bound_check(std::uint32_t N, const FunctionTable& table,
                                   double slack = kPinnedSlack, unsigned threads = 0);

/// (k+1) P(k) < exp(pi sqrt(2k/3)), compared in logs.
bool partition_bound_holds(unsigned k);

}  // namespace multsub

#endif  // MULTSUB_EXTREMAL_HPP
