#ifndef MULTSUB_CONSTANTS_HPP
#define MULTSUB_CONSTANTS_HPP

#include <cstdint>
#include <optional>

namespace multsub {

/// Rosser-Schoenfeld: theta(t) < 1.01624 t for all t > 0. Every tail bound
/// below is derived from this by partial summation.
inline constexpr double kThetaRatio = 1.01624;

struct ConstantEstimate {
  double value = 0;
  std::uint64_t prime_limit = 0;
  double tail_bound = 0;  // |true - value| <= tail_bound
};

/// (1/4) sum_{p <= P} p^2 log p / ((p-1)^3 (p+1)). Requires P >= 100.
ConstantEstimate compute_A0(std::uint64_t prime_limit);

struct BEstimate {
  /// The form obtained by expanding the variance computation prime by prime.
  ConstantEstimate derived;
  /// Closed form with numerator p^4 - p^3 - p^2 - p - 1.
  double corrected_closed_form = 0;
  /// Closed form with the numerator as printed, p^4 - 2p^3 - p - 1.
  double printed_closed_form = 0;
  /// max over p <= P of |derived term - corrected term| / derived term.
  double max_relative_term_delta = 0;
  double printed_minus_derived = 0;
};

/// Requires P >= 100.
BEstimate compute_B(std::uint64_t prime_limit);

/// (log 2)^2/3 + 2 A0 log 2 + 4 A0^2 + B, with the tails propagated.
ConstantEstimate assemble_C(const ConstantEstimate& A0, const ConstantEstimate& B);
ConstantEstimate compute_C(std::uint64_t prime_limit);

struct InfiniteSumReport {
  double X = 0;
  std::uint64_t prime_power_count = 0;
  double single_sum = 0;  // (1/4) sum_{q <= X} Lambda(q) / phi(q)^2
  double A0 = 0;
  std::optional<double> double_sum;  // (1/4) sum sum Lambda Lambda / (phi phi phi(lcm))
  double four_A0_sq_plus_B = 0;
};

/// Prime-power sums over q <= X against the prime-limit-P constants.
/// Requires X >= 2; the O(rho(X)^2) double sum is skipped unless asked for.
InfiniteSumReport infinite_sum_checks(std::uint64_t prime_limit, double X,
                                      bool with_double_sum = true);

}  // namespace multsub

#endif  // MULTSUB_CONSTANTS_HPP
