#include "multsub/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "multsub/errors.hpp"
#include "multsub/numeric.hpp"
#include "multsub/sieve.hpp"

namespace multsub {

namespace {

void require_limit(std::uint64_t P) {
  if (P < 100) throw invalid_argument("prime limit must be at least 100");
}

double a0_term(double p) {
  return 0.25 * p * p * std::log(p) / ((p - 1) * (p - 1) * (p - 1) * (p + 1));
}

double b_derived_term(double p) {
  const double x = 1.0 / p, x2 = x * x, x3 = x2 * x;
  const double r = p / (p - 1);
  const double lp = std::log(p);
  const double sq = x2 / (1 - x2);
  const double negative = r * r * r * r * sq * sq;
  const double positive = r * r * r * (1 + x2) / (1 - x2) * x3 / (1 - x3);
  return 0.25 * lp * lp * (positive - negative);
}

double b_closed_term(double p, double numerator) {
  const double lp = std::log(p);
  const double pm = p - 1, pp = p + 1;
  const double denom = pm * pm * pm * pm * pm * pm * pp * pp * (p * p + p + 1);
  return 0.25 * p * p * p * numerator * lp * lp / denom;
}

}  // namespace

ConstantEstimate compute_A0(std::uint64_t P) {
  require_limit(P);
  CompensatedSum s;
  for (auto p : primes_up_to(P)) s.add(a0_term(static_cast<double>(p)));
  // Beyond P each term is (1/4)(log p / p^2) g(p) with g(p) = p^4/((p-1)^3(p+1))
  // decreasing, and sum_{p>P} log p / p^2 <= 2 kThetaRatio / P.
  const double dp = static_cast<double>(P);
  const double g = dp * dp * dp * dp / ((dp - 1) * (dp - 1) * (dp - 1) * (dp + 1));
  return {s.value(), P, 0.25 * g * 2 * kThetaRatio / dp};
}

BEstimate compute_B(std::uint64_t P) {
  require_limit(P);
  CompensatedSum derived, corrected, printed;
  double worst = 0;
  for (auto prime : primes_up_to(P)) {
    const double p = static_cast<double>(prime);
    const double d = b_derived_term(p);
    const double c = b_closed_term(p, p * p * p * p - p * p * p - p * p - p - 1);
    derived.add(d);
    corrected.add(c);
    printed.add(b_closed_term(p, p * p * p * p - 2 * p * p * p - p - 1));
    worst = std::max(worst, std::fabs(d - c) / std::fabs(d));
  }
  // The tail is squeezed between 0 and its positive part, (1/4)(log p)^2 h(p)/p^3
  // with h decreasing; sum_{p>P} (log p)^2/p^3 <= kThetaRatio (3 log P/(2P^2) + 1/(4P^2)).
  const double dp = static_cast<double>(P);
  const double x = 1.0 / dp, x2 = x * x;
  const double r = dp / (dp - 1);
  const double h = r * r * r * (1 + x2) / (1 - x2) / (1 - x2 * x);
  const double tail = 0.25 * h * kThetaRatio *
                      (3 * std::log(dp) / (2 * dp * dp) + 1 / (4 * dp * dp));
  BEstimate b;
  b.derived = {derived.value(), P, tail};
  b.corrected_closed_form = corrected.value();
  b.printed_closed_form = printed.value();
  b.max_relative_term_delta = worst;
  b.printed_minus_derived = b.printed_closed_form - b.derived.value;
  return b;
}

ConstantEstimate assemble_C(const ConstantEstimate& A0, const ConstantEstimate& B) {
  const double l2 = std::numbers::ln2;
  const double a = A0.value, ta = A0.tail_bound;
  ConstantEstimate c;
  c.value = l2 * l2 / 3 + 2 * a * l2 + 4 * a * a + B.value;
  c.prime_limit = std::min(A0.prime_limit, B.prime_limit);
  c.tail_bound = 2 * l2 * ta + 4 * (2 * std::fabs(a) * ta + ta * ta) + B.tail_bound;
  return c;
}

ConstantEstimate compute_C(std::uint64_t P) {
  return assemble_C(compute_A0(P), compute_B(P).derived);
}

InfiniteSumReport infinite_sum_checks(std::uint64_t P, double X, bool with_double_sum) {
  if (!(X >= 2)) throw invalid_argument("X must be at least 2");
  const auto list = prime_power_list(X);
  std::vector<double> phi(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    phi[i] = static_cast<double>(totient_prime_power(list[i].q, list[i].p));

  InfiniteSumReport r;
  r.X = X;
  r.prime_power_count = list.size();
  CompensatedSum single;
  for (std::size_t i = 0; i < list.size(); ++i)
    single.add(0.25 * list[i].mangoldt / (phi[i] * phi[i]));
  r.single_sum = single.value();

  const auto a0 = compute_A0(P);
  const auto b = compute_B(P);
  r.A0 = a0.value;
  r.four_A0_sq_plus_B = 4 * a0.value * a0.value + b.derived.value;

  if (with_double_sum) {
    CompensatedSum dbl;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        double phi_lcm;
        if (list[i].p == list[j].p)
          phi_lcm = std::max(phi[i], phi[j]);
        else
          phi_lcm = phi[i] * phi[j];
        dbl.add(0.25 * list[i].mangoldt * list[j].mangoldt / (phi[i] * phi[j] * phi_lcm));
      }
    }
    r.double_sum = dbl.value();
  }
  return r;
}

}  // namespace multsub
