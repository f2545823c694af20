#ifndef MULTSUB_EKSTATS_HPP
#define MULTSUB_EKSTATS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace multsub {

class FunctionTable;

/// omega_q for a prime power q >= 2, or omega_0 = omega o phi.
struct AdditiveFunctionId {
  enum class Kind { omega_q, omega_0 };
  Kind kind = Kind::omega_0;
  std::uint64_t q = 0;

  /// Throws invalid_argument unless q is a prime power.
  static AdditiveFunctionId omega(std::uint64_t q);
  static AdditiveFunctionId omega0() { return {}; }

  /// g(p) at a prime p: [p = 1 mod q], or omega(p - 1).
  unsigned at_prime(std::uint64_t p, const FunctionTable* table = nullptr) const;
  std::string name() const;
};

/// X = (log log x)^{1/2} (log log log x)^2. Requires x > e^e.
double truncation_parameter(double x);

/// sum_{p <= x} f(p)/p in ascending p. The table, when it reaches x,
/// supplies the primes and omega(p - 1).
double mu(const AdditiveFunctionId& f, double x, const FunctionTable* table = nullptr);
mpq_class mu_exact(const AdditiveFunctionId& f, std::uint64_t x);

/// 1 - 1/p if p | a, else -1/p.
mpq_class f_p(std::uint64_t p, std::uint64_t a);
/// Completely multiplicative extension in the subscript; f_1 = 1.
mpq_class f_r(std::uint64_t r, std::uint64_t a);

/// F_g(a) = sum_{p <= x} g(p) f_p(a), summed prime by prime.
double F(const AdditiveFunctionId& g, std::uint64_t a, double x,
         const FunctionTable* table = nullptr);
mpq_class F_exact(const AdditiveFunctionId& g, std::uint64_t a, std::uint64_t x);

/// Multiplicative, H(p^g) = (1/p)(1 - 1/p)^g + (-1/p)^g (1 - 1/p).
mpq_class H(std::uint64_t m);

/// sum_{n <= x} f_r(n), exact, by inclusion-exclusion over the primes of r.
mpq_class f_r_sum(std::uint64_t r, std::uint64_t x);

/// sum_{p <= z} g1(p) g2(p) (1/p)(1 - 1/p).
double covariance(const AdditiveFunctionId& g1, const AdditiveFunctionId& g2, double z,
                  const FunctionTable* table = nullptr);

/// log 2 * omega(phi(n)) + (1/4) sum_{q <= X(x)} omega_q(n)^2 Lambda(q).
/// Throws invalid_argument for x <= e^e or n > x.
double P_n(std::uint64_t n, double x, const FunctionTable& table);

/// P_n with every function of n replaced by its mean.
double D(double x, const FunctionTable& table);

struct MomentRow {
  unsigned h;
  double x;
  double value;       // M_h(x)
  double normalized;  // M_h / (C^{h/2} x (log log x)^{3h/2})
};

inline constexpr unsigned kMaxMomentOrder = 8;

/// M_h(x) = sum_{n <= x} (P_n(x) - D(x))^h for every requested h, in one pass
/// with compensated per-chunk sums. Needs table.bound() >= x.
std::vector<MomentRow> moments(std::span<const unsigned> orders, double x,
                               const FunctionTable& table, double C, unsigned threads = 0);

/// M_1 computed as sum_n P_n - floor(x) D(x), the second route.
double first_moment_by_totals(double x, const FunctionTable& table, unsigned threads = 0);

enum class Which { G, I };

struct DistributionReport {
  double x = 0;
  Which which = Which::G;
  std::uint64_t sample_count = 0;
  std::map<unsigned, double> empirical_moments;  // h -> mean of z^h
  double ks_distance = 0;
  double mean_coefficient = 0;
  double variance_coefficient = 0;
};

/// Standardizes log G(n) (or log I(n)) for e^e < n <= x by the per-n
/// loglog n normalization and compares with the standard normal. For Which::I
/// the coefficients passed in are ignored in favour of log2/2 and log2/3.
DistributionReport distribution_report(double x, Which which, const FunctionTable& table,
                                       double mean_coefficient, double variance_coefficient,
                                       std::vector<double>* samples = nullptr,
                                       unsigned threads = 0);

/// 0.5 erfc(-z / sqrt 2).
double normal_cdf(double z);

/// sup |F_n - Phi| over the sample; sorts a copy.
double ks_distance(std::vector<double> samples);

}  // namespace multsub

#endif  // MULTSUB_EKSTATS_HPP
