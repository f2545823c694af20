#include "multsub/multgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "multsub/errors.hpp"
#include "multsub/numeric.hpp"
#include "multsub/parallel.hpp"
#include "multsub/pgroup.hpp"
#include "multsub/sieve.hpp"

namespace multsub {

namespace {

unsigned valuation_u64(std::uint64_t m, std::uint64_t p) {
  if (m == 0) return 0;
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

void add_factor(std::map<std::uint64_t, unsigned>& acc, const Factorization& f) {
  for (const auto& [p, e] : f.factors) acc[p] += e;
}

Factorization from_map(const std::map<std::uint64_t, unsigned>& acc) {
  Factorization f;
  for (const auto& [p, e] : acc)
    if (e > 0) f.factors.push_back({p, e});
  return f;
}

bool divides_totient(const Factorization& n, std::uint64_t p) {
  if (n.valuation(p) >= 2) return true;
  for (const auto& [q, e] : n.factors)
    if (q != p && (q - 1) % p == 0) return true;
  return false;
}

std::uint64_t checked_uint(std::uint64_t n) {
  if (n == 0) throw invalid_argument("n must be positive");
  return n;
}

}  // namespace

unsigned Factorization::valuation(std::uint64_t p) const {
  for (const auto& pe : factors)
    if (pe.prime == p) return pe.exponent;
  return 0;
}

mpz_class Factorization::value() const {
  mpz_class v = 1, t;
  for (const auto& [p, e] : factors) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, e);
    v *= t;
  }
  return v;
}

Factorization factorize(std::uint64_t n, const FunctionTable* table) {
  checked_uint(n);
  Factorization f;
  if (table && table->contains(n)) {
    auto m = static_cast<std::uint32_t>(n);
    while (m > 1) {
      const std::uint32_t p = table->smallest_prime_factor(m);
      unsigned e = 0;
      do {
        m /= p;
        ++e;
      } while (m % p == 0);
      f.factors.push_back({p, e});
    }
    return f;
  }
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.factors.push_back({p, e});
  };
  take(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) take(d);
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

Factorization totient_factorization(const Factorization& n, const FunctionTable* table) {
  std::map<std::uint64_t, unsigned> acc;
  for (const auto& [p, e] : n.factors) {
    if (e > 1) acc[p] += e - 1;
    if (p > 2) add_factor(acc, factorize(p - 1, table));
  }
  return from_map(acc);
}

unsigned omega_q(const Factorization& n, std::uint64_t q) {
  if (q == 0) throw invalid_argument("q must be positive");
  unsigned c = 0;
  for (const auto& pe : n.factors)
    if ((pe.prime - 1) % q == 0) ++c;
  return c;
}

unsigned omega_q(std::uint64_t n, std::uint64_t q) { return omega_q(factorize(n), q); }

unsigned omega_bar(const Factorization& n, std::uint64_t p, unsigned r) {
  if (r == 0) throw invalid_argument("omega_bar needs r >= 1");
  // omega_{p^r}(n) without forming p^r: primes q | n with p^r | q - 1.
  unsigned w = 0;
  for (const auto& pe : n.factors)
    if (pe.prime != p && valuation_u64(pe.prime - 1, p) >= r) ++w;
  const unsigned nu = n.valuation(p);
  if (p != 2) return w + (nu >= r + 1 ? 1 : 0);
  if (r == 1) {
    if (nu >= 3) return w + 2;
    if (nu == 2) return w + 1;
    return w;
  }
  return w + (nu >= r + 2 ? 1 : 0);
}

unsigned omega_bar(std::uint64_t n, std::uint64_t p, unsigned r) {
  return omega_bar(factorize(n), p, r);
}

unsigned lambda_p(const Factorization& n, std::uint64_t p) {
  const unsigned nu = n.valuation(p);
  unsigned from_n;
  if (p == 2) {
    // max{0, nu - 2} as printed, except (Z/4)^x = Z_2 also counts when 4 || n.
    from_n = nu >= 3 ? nu - 2 : (nu == 2 ? 1 : 0);
  } else {
    from_n = nu >= 1 ? nu - 1 : 0;
  }
  unsigned from_primes = 0;
  for (const auto& pe : n.factors)
    if (pe.prime != p) from_primes = std::max(from_primes, valuation_u64(pe.prime - 1, p));
  return std::max(from_n, from_primes);
}

unsigned lambda_p(std::uint64_t n, std::uint64_t p) { return lambda_p(factorize(n), p); }

mpz_class carmichael(const Factorization& n) {
  mpz_class result = 1, t;
  for (const auto& [p, e] : n.factors) {
    mpz_class lam;
    if (p == 2) {
      lam = e == 1 ? 1 : (e == 2 ? 2 : 0);
      if (e >= 3) mpz_ui_pow_ui(lam.get_mpz_t(), 2, e - 2);
    } else {
      mpz_ui_pow_ui(t.get_mpz_t(), p, e - 1);
      lam = t * (p - 1);
    }
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), lam.get_mpz_t());
  }
  return result;
}

Partition sylow_partition(const Factorization& n, std::uint64_t p) {
  if (!is_prime_u64(p)) throw invalid_argument(std::to_string(p) + " is not prime");
  if (!divides_totient(n, p))
    throw invalid_argument(std::to_string(p) + " does not divide phi(n)");
  const unsigned lam = lambda_p(n, p);
  std::vector<unsigned> a;
  a.reserve(lam);
  for (unsigned j = 1; j <= lam; ++j) a.push_back(omega_bar(n, p, j));
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0 || (j > 0 && a[j] > a[j - 1]))
      throw internal_consistency_error("omega_bar sequence for p=" + std::to_string(p) +
                                       " is not a partition");
  }
  if (a.empty())
    throw internal_consistency_error("lambda_p vanished although p divides phi(n)");
  return conjugate(Partition(std::move(a)));
}

Partition sylow_partition(std::uint64_t n, std::uint64_t p) {
  return sylow_partition(factorize(n), p);
}

SylowDecomposition sylow_decomposition(const Factorization& n, const FunctionTable* table) {
  SylowDecomposition d;
  for (const auto& pe : totient_factorization(n, table).factors)
    d.emplace(pe.prime, sylow_partition(n, pe.prime));
  return d;
}

SylowDecomposition sylow_decomposition_crt(const Factorization& n,
                                           const FunctionTable* table) {
  std::map<std::uint64_t, std::vector<unsigned>> cyclic;
  auto add_cyclic = [&](const Factorization& order) {
    for (const auto& [p, e] : order.factors) cyclic[p].push_back(e);
  };
  for (const auto& [q, e] : n.factors) {
    if (q == 2) {
      if (e == 2) add_cyclic(Factorization{{{2, 1}}});
      if (e >= 3) {
        add_cyclic(Factorization{{{2, 1}}});
        add_cyclic(Factorization{{{2, e - 2}}});
      }
      continue;
    }
    std::map<std::uint64_t, unsigned> order;
    add_factor(order, factorize(q - 1, table));
    if (e > 1) order[q] += e - 1;
    add_cyclic(from_map(order));
  }
  SylowDecomposition d;
  for (auto& [p, parts] : cyclic) d.emplace(p, Partition::from_unordered(std::move(parts)));
  return d;
}

mpz_class SubgroupCounter::count(const SylowDecomposition& d) {
  mpz_class r = 1;
  for (const auto& [p, alpha] : d) r *= pgroup_count(p, alpha);
  return r;
}

mpz_class SubgroupCounter::isoclasses(const SylowDecomposition& d) {
  mpz_class r = 1;
  for (const auto& [p, alpha] : d) r *= subpartition_count(alpha);
  return r;
}

double SubgroupCounter::log_count(const SylowDecomposition& d) {
  double s = 0.0;
  for (const auto& [p, alpha] : d) s += log_of(pgroup_count(p, alpha));
  return s;
}

double SubgroupCounter::log_isoclasses(const SylowDecomposition& d) {
  double s = 0.0;
  for (const auto& [p, alpha] : d) s += log_of(subpartition_count(alpha));
  return s;
}

const mpz_class& SubgroupCounter::pgroup_count(std::uint64_t p, const Partition& alpha) {
  auto key = std::make_pair(p, alpha);
  auto it = counts_.find(key);
  if (it == counts_.end())
    it = counts_.emplace(std::move(key), subgroup_count(PGroupType(p, alpha))).first;
  return it->second;
}

const mpz_class& SubgroupCounter::subpartition_count(const Partition& alpha) {
  auto it = subpartitions_.find(alpha);
  if (it == subpartitions_.end())
    it = subpartitions_.emplace(alpha, count_subpartitions(alpha)).first;
  return it->second;
}

mpz_class count_subgroups(const Factorization& n, const FunctionTable* table) {
  mpz_class r = 1;
  for (const auto& [p, alpha] : sylow_decomposition(n, table))
    r *= subgroup_count(PGroupType(p, alpha));
  return r;
}

mpz_class count_subgroups(std::uint64_t n, const FunctionTable* table) {
  return count_subgroups(factorize(n, table), table);
}

mpz_class count_subgroup_isoclasses(const Factorization& n, const FunctionTable* table) {
  mpz_class r = 1;
  for (const auto& [p, alpha] : sylow_decomposition(n, table)) r *= count_subpartitions(alpha);
  return r;
}

mpz_class count_subgroup_isoclasses(std::uint64_t n, const FunctionTable* table) {
  return count_subgroup_isoclasses(factorize(n, table), table);
}

std::vector<LogCounts> log_counts(std::uint64_t lo, std::uint64_t hi,
                                  const FunctionTable& table, SubgroupCounter& counter) {
  if (hi > lo && hi - 1 > table.bound())
    throw invalid_argument("log_counts range exceeds the sieve bound");
  std::vector<LogCounts> out;
  out.reserve(hi > lo ? hi - lo : 0);
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (n == 0) {
      out.push_back({});
      continue;
    }
    const auto d = sylow_decomposition(factorize(n, &table), &table);
    out.push_back({counter.log_count(d), counter.log_isoclasses(d)});
  }
  return out;
}

std::vector<LogCounts> log_counts_table(std::uint32_t N, const FunctionTable& table,
                                        unsigned threads) {
  auto parts = map_chunks(0, std::uint64_t{N} + 1, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    SubgroupCounter counter;
    return log_counts(lo, hi, table, counter);
  });
  std::vector<LogCounts> out;
  out.reserve(std::size_t{N} + 1);
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

std::vector<std::uint32_t> units_mod(std::uint64_t n) {
  std::vector<std::uint32_t> u;
  for (std::uint64_t a = 0; a < n; ++a)
    if (gcd_u64(a, n) == 1) u.push_back(static_cast<std::uint32_t>(a));
  if (n == 1) u = {0};
  return u;
}

void check_oracle_size(std::uint64_t n, std::uint64_t cap) {
  checked_uint(n);
  std::uint64_t phi = 0;
  for (std::uint64_t a = 1; a <= n; ++a)
    if (gcd_u64(a, n) == 1) ++phi;
  if (phi > cap)
    throw oracle_too_large("phi(" + std::to_string(n) + ") = " + std::to_string(phi) +
                           " exceeds oracle cap " + std::to_string(cap));
}

}  // namespace

std::vector<ResidueSet> enumerate_subgroups_oracle(std::uint64_t n, std::uint64_t cap) {
  check_oracle_size(n, cap);
  const auto units = units_mod(n);
  const std::uint32_t one = static_cast<std::uint32_t>(1 % n);
  auto mul = [n](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % n);
  };

  std::set<ResidueSet> seen;
  std::deque<ResidueSet> queue;
  seen.insert(ResidueSet{one});
  queue.push_back(ResidueSet{one});
  std::vector<char> in_h(n, 0), covered(n, 0);

  while (!queue.empty()) {
    ResidueSet h = std::move(queue.front());
    queue.pop_front();
    std::fill(in_h.begin(), in_h.end(), 0);
    std::fill(covered.begin(), covered.end(), 0);
    for (auto e : h) in_h[e] = covered[e] = 1;

    for (auto g : units) {
      if (covered[g]) continue;
      // <H, g> is the union of the cosets H g^k up to the first power in H.
      ResidueSet k;
      std::uint32_t power = one;
      do {
        for (auto e : h) k.push_back(mul(e, power));
        power = mul(power, g);
      } while (!in_h[power]);
      for (auto e : h) covered[mul(e, g)] = 1;
      std::sort(k.begin(), k.end());
      if (seen.insert(k).second) queue.push_back(std::move(k));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t classify_isoclasses_oracle(std::uint64_t n, std::uint64_t cap) {
  const auto subgroups = enumerate_subgroups_oracle(n, cap);
  std::vector<std::uint32_t> order(n, 0);
  const std::uint32_t one = static_cast<std::uint32_t>(1 % n);
  for (auto u : units_mod(n)) {
    std::uint32_t k = 1, x = u;
    while (x != one) {
      x = static_cast<std::uint32_t>(std::uint64_t{x} * u % n);
      ++k;
    }
    order[u] = k;
  }
  // A finite abelian group is determined by how many elements it has of each order.
  std::set<std::map<std::uint32_t, std::uint32_t>> types;
  for (const auto& h : subgroups) {
    std::map<std::uint32_t, std::uint32_t> hist;
    for (auto e : h) ++hist[order[e]];
    types.insert(std::move(hist));
  }
  return types.size();
}

}  // namespace multsub
