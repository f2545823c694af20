#include "multsub/ekstats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "multsub/errors.hpp"
#include "multsub/multgroup.hpp"
#include "multsub/numeric.hpp"
#include "multsub/parallel.hpp"
#include "multsub/sieve.hpp"

namespace multsub {

namespace {

constexpr double kLog2 = std::numbers::ln2;

void require_above_ee(double x) {
  if (!(x > std::exp(std::numbers::e)))
    throw invalid_argument("x must exceed e^e so that log log log x > 0");
}

// Primes <= x, from the table when it reaches that far.
std::vector<std::uint64_t> primes_to(double x, const FunctionTable* table) {
  const auto limit = static_cast<std::uint64_t>(std::floor(x));
  if (table && table->bound() >= limit) {
    std::vector<std::uint64_t> out;
    for (auto p : table->primes()) {
      if (p > limit) break;
      out.push_back(p);
    }
    return out;
  }
  return primes_up_to(limit);
}

mpq_class integer_pow(const mpq_class& b, unsigned e) {
  mpq_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

AdditiveFunctionId AdditiveFunctionId::omega(std::uint64_t q) {
  const auto f = factorize(q);
  if (q < 2 || f.factors.size() != 1)
    throw invalid_argument("omega_q needs a prime power q, got " + std::to_string(q));
  return {Kind::omega_q, q};
}

unsigned AdditiveFunctionId::at_prime(std::uint64_t p, const FunctionTable* table) const {
  if (kind == Kind::omega_q) return (p - 1) % q == 0 ? 1 : 0;
  if (table && table->contains(p)) return table->omega_phi(static_cast<std::uint32_t>(p));
  return p <= 2 ? 0 : static_cast<unsigned>(factorize(p - 1).factors.size());
}

std::string AdditiveFunctionId::name() const {
  return kind == Kind::omega_0 ? "omega_0" : "omega_" + std::to_string(q);
}

double truncation_parameter(double x) {
  require_above_ee(x);
  const double ll = loglog(x);
  const double lll = std::log(ll);
  return std::sqrt(ll) * lll * lll;
}

double mu(const AdditiveFunctionId& f, double x, const FunctionTable* table) {
  CompensatedSum s;
  for (auto p : primes_to(x, table)) {
    const unsigned v = f.at_prime(p, table);
    if (v) s.add(v / static_cast<double>(p));
  }
  return s.value();
}

mpq_class mu_exact(const AdditiveFunctionId& f, std::uint64_t x) {
  mpq_class s = 0;
  for (auto p : primes_up_to(x)) {
    const unsigned v = f.at_prime(p);
    if (v) s += mpq_class(v, p);
  }
  return s;
}

mpq_class f_p(std::uint64_t p, std::uint64_t a) {
  const mpq_class inv(1ul, p);
  return a % p == 0 ? mpq_class(1 - inv) : mpq_class(-inv);
}

mpq_class f_r(std::uint64_t r, std::uint64_t a) {
  if (r == 0) throw invalid_argument("f_r needs r >= 1");
  mpq_class v = 1;
  for (const auto& [p, e] : factorize(r).factors) v *= integer_pow(f_p(p, a), e);
  return v;
}

double F(const AdditiveFunctionId& g, std::uint64_t a, double x, const FunctionTable* table) {
  CompensatedSum s;
  for (auto p : primes_to(x, table)) {
    const unsigned v = g.at_prime(p, table);
    if (!v) continue;
    const double fp = (a % p == 0 ? 1.0 : 0.0) - 1.0 / static_cast<double>(p);
    s.add(v * fp);
  }
  return s.value();
}

mpq_class F_exact(const AdditiveFunctionId& g, std::uint64_t a, std::uint64_t x) {
  mpq_class s = 0;
  for (auto p : primes_up_to(x)) {
    const unsigned v = g.at_prime(p);
    if (v) s += v * f_p(p, a);
  }
  return s;
}

mpq_class H(std::uint64_t m) {
  if (m == 0) throw invalid_argument("H needs m >= 1");
  mpq_class v = 1;
  for (const auto& [p, g] : factorize(m).factors) {
    const mpq_class inv(1, p);
    const mpq_class keep = 1 - inv;
    v *= inv * integer_pow(keep, g) + integer_pow(-inv, g) * keep;
  }
  return v;
}

mpq_class f_r_sum(std::uint64_t r, std::uint64_t x) {
  const auto f = factorize(r).factors;
  const std::size_t k = f.size();
  if (k > 20) throw invalid_argument("too many prime factors for f_r_sum");
  // exact[T]: #{n <= x : among the primes of r, exactly those in T divide n}.
  std::vector<mpz_class> multiples(std::size_t{1} << k);
  for (std::size_t U = 0; U < multiples.size(); ++U) {
    mpz_class d = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (U >> i & 1) d *= f[i].prime;
    multiples[U] = mpz_class(x) / d;
  }
  mpq_class total = 0;
  for (std::size_t T = 0; T < multiples.size(); ++T) {
    mpz_class exact = 0;
    for (std::size_t U = T; U < multiples.size(); U = (U + 1) | T) {
      if (std::popcount(U ^ T) % 2) exact -= multiples[U];
      else exact += multiples[U];
    }
    mpq_class value = 1;
    for (std::size_t i = 0; i < k; ++i) {
      value *= integer_pow(f_p(f[i].prime, (T >> i & 1) ? f[i].prime : 1), f[i].exponent);
    }
    total += value * exact;
  }
  return total;
}

double covariance(const AdditiveFunctionId& g1, const AdditiveFunctionId& g2, double z,
                  const FunctionTable* table) {
  CompensatedSum s;
  for (auto p : primes_to(z, table)) {
    const unsigned a = g1.at_prime(p, table);
    if (!a) continue;
    const unsigned b = g2.at_prime(p, table);
    if (!b) continue;
    const double pd = static_cast<double>(p);
    s.add(a * b / pd * (1.0 - 1.0 / pd));
  }
  return s.value();
}

double P_n(std::uint64_t n, double x, const FunctionTable& table) {
  require_above_ee(x);
  if (n == 0 || static_cast<double>(n) > x) throw invalid_argument("P_n needs 1 <= n <= x");
  if (!table.contains(n)) throw invalid_argument("n exceeds the sieve bound");
  const auto nn = static_cast<std::uint32_t>(n);
  double value = n <= 2 ? 0.0 : kLog2 * table.omega_phi(nn);
  const auto f = factorize(n, &table);
  for (const auto& pp : prime_power_list(truncation_parameter(x))) {
    const double w = omega_q(f, pp.q);
    value += 0.25 * w * w * pp.mangoldt;
  }
  return value;
}

double D(double x, const FunctionTable& table) {
  require_above_ee(x);
  double value = kLog2 * mu(AdditiveFunctionId::omega0(), x, &table);
  for (const auto& pp : prime_power_list(truncation_parameter(x))) {
    const double m = mu(AdditiveFunctionId::omega(pp.q), x, &table);
    value += 0.25 * m * m * pp.mangoldt;
  }
  return value;
}

namespace {

// P_n for every n in [0, N]; index 0 unused.
std::vector<double> bulk_P(std::uint32_t N, double x, const FunctionTable& table) {
  std::vector<double> P(std::size_t{N} + 1, 0.0);
  for (std::uint32_t n = 3; n <= N; ++n) P[n] = kLog2 * table.omega_phi(n);
  std::vector<std::uint8_t> scratch;
  for (const auto& pp : prime_power_list(truncation_parameter(x))) {
    omega_q_table(table, pp.q, scratch);
    for (std::uint32_t n = 2; n <= N; ++n)
      if (scratch[n]) P[n] += 0.25 * scratch[n] * scratch[n] * pp.mangoldt;
  }
  return P;
}

std::uint32_t checked_bound(double x, const FunctionTable& table) {
  require_above_ee(x);
  const double fx = std::floor(x);
  if (fx > table.bound()) throw invalid_argument("x exceeds the sieve bound");
  return static_cast<std::uint32_t>(fx);
}

}  // namespace

std::vector<MomentRow> moments(std::span<const unsigned> orders, double x,
                               const FunctionTable& table, double C, unsigned threads) {
  for (unsigned h : orders)
    if (h == 0 || h > kMaxMomentOrder)
      throw invalid_argument("moment order must be in 1.." + std::to_string(kMaxMomentOrder));
  if (!(C > 0)) throw invalid_argument("variance constant must be positive");
  const std::uint32_t N = checked_bound(x, table);
  const auto P = bulk_P(N, x, table);
  const double d = D(x, table);

  auto partials = map_chunks(1, std::uint64_t{N} + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<CompensatedSum> sums(kMaxMomentOrder + 1);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double dev = P[n] - d;
      double pw = 1.0;
      for (unsigned h = 1; h <= kMaxMomentOrder; ++h) {
        pw *= dev;
        sums[h].add(pw);
      }
    }
    return sums;
  });
  std::vector<CompensatedSum> total(kMaxMomentOrder + 1);
  for (const auto& part : partials)
    for (unsigned h = 1; h <= kMaxMomentOrder; ++h) total[h].add(part[h]);

  const double ll = loglog(x);
  std::vector<MomentRow> rows;
  for (unsigned h : orders) {
    const double scale = std::pow(C, h / 2.0) * x * std::pow(ll, 1.5 * h);
    rows.push_back({h, x, total[h].value(), total[h].value() / scale});
  }
  return rows;
}

double first_moment_by_totals(double x, const FunctionTable& table, unsigned threads) {
  const std::uint32_t N = checked_bound(x, table);
  const auto P = bulk_P(N, x, table);
  auto partials = map_chunks(1, std::uint64_t{N} + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    CompensatedSum s;
    for (std::uint64_t n = lo; n < hi; ++n) s.add(P[n]);
    return s;
  });
  CompensatedSum total;
  for (const auto& s : partials) total.add(s);
  return total.value() - static_cast<double>(N) * D(x, table);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double ks_distance(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = normal_cdf(samples[i]);
    worst = std::max({worst, (i + 1) / n - cdf, cdf - i / n});
  }
  return std::clamp(worst, 0.0, 1.0);
}

DistributionReport distribution_report(double x, Which which, const FunctionTable& table,
                                       double mean_coefficient, double variance_coefficient,
                                       std::vector<double>* samples, unsigned threads) {
  if (!(x >= 100)) throw invalid_argument("distribution report needs x >= 100");
  const std::uint32_t N = checked_bound(x, table);
  if (which == Which::I) {
    mean_coefficient = kLog2 / 2;
    variance_coefficient = kLog2 / 3;
  }
  if (!(variance_coefficient > 0)) throw invalid_argument("variance constant must be positive");

  // loglog n must be positive with room to spare: start past e^e.
  const auto first = static_cast<std::uint64_t>(std::floor(std::exp(std::numbers::e))) + 1;
  auto parts = map_chunks(first, std::uint64_t{N} + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    SubgroupCounter counter;
    std::vector<double> z;
    z.reserve(hi - lo);
    for (const auto& lc : log_counts(lo, hi, table, counter)) z.push_back(which == Which::G ? lc.log_G : lc.log_I);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const double ll = loglog(static_cast<double>(n));
      double& v = z[n - lo];
      v = (v - mean_coefficient * ll * ll) / std::sqrt(variance_coefficient * ll * ll * ll);
    }
    return z;
  });

  std::vector<double> z;
  z.reserve(N);
  for (auto& p : parts) z.insert(z.end(), p.begin(), p.end());

  DistributionReport r;
  r.x = x;
  r.which = which;
  r.sample_count = z.size();
  r.mean_coefficient = mean_coefficient;
  r.variance_coefficient = variance_coefficient;
  for (unsigned h = 1; h <= 4; ++h) {
    CompensatedSum s;
    for (double v : z) s.add(std::pow(v, h));
    r.empirical_moments[h] = z.empty() ? 0.0 : s.value() / static_cast<double>(z.size());
  }
  r.ks_distance = ks_distance(z);
  if (samples) *samples = std::move(z);
  return r;
}

}  // namespace multsub
