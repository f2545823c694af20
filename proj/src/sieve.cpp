#include "multsub/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "multsub/errors.hpp"

namespace multsub {

std::size_t FunctionTable::estimated_bytes(std::uint32_t N) {
  const std::size_t n = std::size_t{N} + 1;
  // spf + phi + two byte columns + prime list (pi(N) < 1.26 N / ln N).
  const double logn = std::log(std::max(3.0, static_cast<double>(N)));
  const auto prime_slots = static_cast<std::size_t>(1.26 * N / logn) + 16;
  return n * (4 + 4 + 1 + 1) + prime_slots * 4;
}

FunctionTable FunctionTable::build(std::uint32_t N, std::size_t memory_budget) {
  if (N < 2) throw invalid_argument("sieve bound must be at least 2");
  if (estimated_bytes(N) > memory_budget)
    throw resource_error("sieve to " + std::to_string(N) + " needs " +
                         std::to_string(estimated_bytes(N)) +
                         " bytes, over budget " + std::to_string(memory_budget));
  FunctionTable t;
  t.bound_ = N;
  t.spf_.assign(std::size_t{N} + 1, 0);
  t.phi_.assign(std::size_t{N} + 1, 0);
  t.primes_.reserve(static_cast<std::size_t>(1.26 * N / std::log(std::max(3.0, double(N)))) + 16);
  t.phi_[1] = 1;
  t.spf_[1] = 1;
  for (std::uint32_t i = 2; i <= N; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = i;
      t.phi_[i] = i - 1;
      t.primes_.push_back(i);
    }
    for (std::uint32_t p : t.primes_) {
      const std::uint64_t m = std::uint64_t{p} * i;
      if (p > t.spf_[i] || m > N) break;
      t.spf_[m] = p;
      t.phi_[m] = (p == t.spf_[i]) ? t.phi_[i] * p : t.phi_[i] * (p - 1);
    }
  }

  // phi(n) <= n <= N, so phi(n) factors through the same spf column.
  t.omega_phi_.assign(std::size_t{N} + 1, 0);
  t.bigomega_phi_.assign(std::size_t{N} + 1, 0);
  for (std::uint32_t n = 2; n <= N; ++n) {
    std::uint32_t m = t.phi_[n];
    unsigned distinct = 0, total = 0;
    while (m > 1) {
      const std::uint32_t p = t.spf_[m];
      ++distinct;
      do {
        m /= p;
        ++total;
      } while (m % p == 0);
    }
    t.omega_phi_[n] = static_cast<std::uint8_t>(distinct);
    t.bigomega_phi_[n] = static_cast<std::uint8_t>(total);
  }
  return t;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t N) {
  std::vector<std::uint64_t> out;
  if (N < 2) return out;
  out.push_back(2);
  // bit i stands for the odd number 2i+1
  const std::uint64_t half = (N - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::uint64_t j = p * p / 2; j < half && p * p <= N; j += p) composite[j] = true;
  }
  return out;
}

void omega_q_table(const FunctionTable& t, std::uint64_t q, std::vector<std::uint8_t>& out) {
  if (q < 2) throw invalid_argument("omega_q_table needs q >= 2");
  const std::uint32_t N = t.bound();
  out.assign(std::size_t{N} + 1, 0);
  for (std::uint32_t p : t.primes()) {
    if ((p - 1) % q != 0) continue;
    for (std::uint64_t m = p; m <= N; m += p) ++out[m];
  }
}

std::vector<std::uint8_t> omega_q_table(const FunctionTable& t, std::uint64_t q) {
  std::vector<std::uint8_t> out;
  omega_q_table(t, q, out);
  return out;
}

std::vector<PrimePower> prime_power_list(double X) {
  std::vector<PrimePower> out;
  if (X < 2) return out;
  const auto limit = static_cast<std::uint64_t>(std::floor(X));
  for (std::uint64_t p : primes_up_to(limit)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= limit; q *= p) {
      out.push_back({q, p, lp});
      if (q > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

}  // namespace multsub
