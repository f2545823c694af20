#include "multsub/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "multsub/errors.hpp"
#include "multsub/numeric.hpp"
#include "multsub/parallel.hpp"
#include "multsub/sieve.hpp"

namespace multsub {

namespace {

constexpr double kPi = std::numbers::pi;

bool improves(double candidate, double best) {
  // Distinct counts differ in log by far more than the rounding of a log sum.
  return candidate > best + 1e-12 * std::max(1.0, std::fabs(best));
}

}  // namespace

double normalize_extremal(double value, double log_n, Which which) {
  if (value == 0) return 0;
  const double ll = std::log(log_n);
  return which == Which::G ? value * ll / (log_n * log_n) : value * ll / log_n;
}

ExtremalRecord scan_max(std::span<const LogCounts> counts, std::uint32_t N, Which which) {
  if (N < 3 || counts.size() <= N) throw invalid_argument("scan needs 3 <= N within the counts");
  std::uint64_t best_n = 3;
  auto value_of = [&](std::uint64_t n) { return which == Which::G ? counts[n].log_G : counts[n].log_I; };
  double best = value_of(3);
  for (std::uint64_t n = 4; n <= N; ++n) {
    if (improves(value_of(n), best)) {
      best = value_of(n);
      best_n = n;
    }
  }
  ExtremalRecord r;
  r.n = std::to_string(best_n);
  r.which = which;
  r.value = best;
  r.normalized = normalize_extremal(best, std::log(static_cast<double>(best_n)), which);
  r.provenance = Provenance::scan;
  return r;
}

ExtremalRecord scan_max(std::uint32_t N, Which which, const FunctionTable& table, unsigned threads) {
  if (N < 3 || N > table.bound()) throw invalid_argument("scan needs 3 <= N <= sieve bound");
  const auto counts = log_counts_table(N, table, threads);
  return scan_max(counts, N, which);
}

double theta_progression(double V, std::uint64_t p) {
  CompensatedSum s;
  for (auto q : primes_up_to(static_cast<std::uint64_t>(std::floor(V))))
    if ((q - 1) % p == 0) s.add(std::log(static_cast<double>(q)));
  return s.value();
}

GConstruction construct_G_extremal(double x, double bv_exponent) {
  if (!(x >= 1e6)) throw invalid_argument("construction needs x >= 1e6");
  if (!(bv_exponent >= 0)) throw invalid_argument("bv exponent must be nonnegative");
  GConstruction c;
  c.x = x;
  c.bv_exponent = bv_exponent;
  const double lx = std::log(x), llx = std::log(lx);
  const double power = std::pow(llx, 2 * bv_exponent + 1);
  c.V = lx * lx / power * (1 - 1 / llx);
  c.Q = lx / power;

  double best = std::numeric_limits<double>::infinity();
  for (auto p : primes_up_to(static_cast<std::uint64_t>(std::ceil(2 * c.Q)))) {
    const double dp = static_cast<double>(p);
    if (!(dp > c.Q && dp < 2 * c.Q)) continue;
    const double gap = std::fabs(theta_progression(c.V, p) - c.V / (dp - 1));
    if (gap < best) {
      best = gap;
      c.p = p;
    }
  }
  if (c.p == 0)
    throw construction_failed("no prime in (Q, 2Q) with Q = " + std::to_string(c.Q));

  Factorization f;
  for (auto q : primes_up_to(static_cast<std::uint64_t>(std::floor(c.V)))) {
    if ((q - 1) % c.p != 0) continue;
    c.primes.push_back(q);
    f.factors.push_back({q, 1});
  }
  c.n = f.value();
  c.omega_p = omega_q(f, c.p);
  c.lambda_p = lambda_p(f, c.p);
  const double log_G = log_of(count_subgroups(f));
  const double lp = std::log(static_cast<double>(c.p));
  c.claimed_lower_bound = lp / 4 * c.omega_p * c.omega_p - kLogCountSlack * c.lambda_p * lp;
  c.below_x = mpz_cmp_d(c.n.get_mpz_t(), x) < 0;
  c.bound_holds = log_G >= c.claimed_lower_bound;

  c.record.n = c.n.get_str();
  c.record.which = Which::G;
  c.record.value = log_G;
  c.record.normalized = normalize_extremal(log_G, log_of(c.n), Which::G);
  c.record.provenance = Provenance::construction;
  return c;
}

IConstruction construct_I_extremal(double x, std::uint64_t candidate_cap) {
  if (!(x >= 1e6)) throw invalid_argument("construction needs x >= 1e6");
  IConstruction c;
  c.x = x;
  const double lx = std::log(x);
  c.U = lx / 5 - std::log(lx);
  c.m = 1;
  const auto small = c.U >= 2 ? primes_up_to(static_cast<std::uint64_t>(std::floor(c.U)))
                              : std::vector<std::uint64_t>{};
  for (auto p : small) {
    if (c.m > std::numeric_limits<std::uint64_t>::max() / p)
      throw construction_failed("primorial up to U overflows 64 bits");
    c.m *= p;
  }
  c.pi_U = static_cast<unsigned>(small.size());

  for (std::uint64_t k = 1; k <= candidate_cap; ++k) {
    if (c.m > (std::numeric_limits<std::uint64_t>::max() - 1) / k)
      throw construction_failed("candidate 1 + k m overflows 64 bits");
    const std::uint64_t q = 1 + k * c.m;
    if (!is_prime_u64(q)) continue;
    c.k = k;
    c.q = q;
    break;
  }
  if (c.q == 0)
    throw construction_failed("no prime 1 + k m within " + std::to_string(candidate_cap) +
                              " candidates");

  // q - 1 = k m with m squarefree over the primes <= U.
  std::map<std::uint64_t, unsigned> exps;
  for (auto p : small) ++exps[p];
  for (const auto& [p, e] : factorize(c.k).factors) exps[p] += e;
  c.I = 1;
  for (const auto& [p, e] : exps) c.I *= count_subpartitions(Partition{e});
  c.omega_phi_q = static_cast<unsigned>(exps.size());

  c.below_x = static_cast<double>(c.q) < x;
  c.omega_claim_holds = c.omega_phi_q >= c.pi_U;
  mpz_class floor_bound;
  mpz_ui_pow_ui(floor_bound.get_mpz_t(), 2, c.omega_phi_q);
  c.lower_bound_holds = c.I >= floor_bound;

  const double value = log_of(c.I);
  c.record.n = std::to_string(c.q);
  c.record.which = Which::I;
  c.record.value = value;
  c.record.normalized = normalize_extremal(value, std::log(static_cast<double>(c.q)), Which::I);
  c.record.provenance = Provenance::construction;
  return c;
}

bool partition_bound_holds(unsigned k) {
  const auto P = partition_numbers(k);
  return log_of(mpz_class(P[k] * (k + 1))) < kPi * std::sqrt(2.0 * k / 3.0);
}

UpperBoundReport upper_bound_check(std::uint32_t N, const FunctionTable& table, double slack,
                                   unsigned threads) {
  if (N < 100 || N > table.bound()) throw invalid_argument("bound check needs 100 <= N <= sieve bound");
  const auto P = partition_numbers(64);
  std::vector<mpz_class> prefix(P.size());
  mpz_class run = 0;
  for (std::size_t j = 0; j < P.size(); ++j) prefix[j] = run += P[j];
  const double c_I = kPi * std::sqrt(2.0 / 3.0);

  struct Partial {
    double max_log_G = -1;
    std::uint64_t argmax = 0;
    std::uint64_t I_violations = 0, first_I_violation = 0, partition_violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
  };
  auto parts = map_chunks(1, std::uint64_t{N} + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    Partial part;
    SubgroupCounter counter;
    for (std::uint64_t n = lo; n < hi; ++n) {
      const auto d = sylow_decomposition(factorize(n, &table), &table);
      const double log_G = counter.log_count(d);
      if (improves(log_G, part.max_log_G)) {
        part.max_log_G = log_G;
        part.argmax = n;
      }
      double bound = 0;
      for (const auto& [p, alpha] : d) {
        const unsigned k = alpha.weight();
        bound += std::sqrt(static_cast<double>(k));
        const mpz_class Ip = count_subpartitions(alpha);
        if (k >= P.size() || Ip > prefix[k] || prefix[k] > (k + 1) * P[k]) ++part.partition_violations;
      }
      bound *= c_I;
      const double log_I = counter.log_isoclasses(d);
      const double margin = bound - log_I;
      // Strict for nontrivial groups; n = 1, 2 give 0 < 0 on both sides.
      const bool ok = d.empty() ? log_I == 0 : margin > 0;
      if (!ok && part.I_violations++ == 0) part.first_I_violation = n;
      if (!d.empty()) part.min_margin = std::min(part.min_margin, margin);
    }
    return part;
  });

  UpperBoundReport r;
  r.N = N;
  r.slack = slack;
  r.min_I_margin = std::numeric_limits<double>::infinity();
  r.max_log_G = -1;
  for (const auto& part : parts) {
    if (improves(part.max_log_G, r.max_log_G)) {
      r.max_log_G = part.max_log_G;
      r.argmax_G = part.argmax;
    }
    if (part.I_violations && r.I_violations == 0) r.first_I_violation = part.first_I_violation;
    r.I_violations += part.I_violations;
    r.partition_violations += part.partition_violations;
    r.min_I_margin = std::min(r.min_I_margin, part.min_margin);
  }
  const double lN = std::log(static_cast<double>(N));
  r.G_bound = 0.25 * lN * lN / std::log(lN) * (1 + slack);
  r.G_ok = r.max_log_G <= r.G_bound;
  return r;
}

}  // namespace multsub
