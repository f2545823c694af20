#include "multsub/pgroup.hpp"

#include <cmath>
#include <map>

#include "multsub/errors.hpp"
#include "multsub/numeric.hpp"

namespace multsub {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw invalid_argument(std::to_string(p) + " is not prime");
}

mpz_class power(std::uint64_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

// [k, l]_p with p already validated.
mpz_class gaussian_binomial_unchecked(unsigned k, int l, std::uint64_t p) {
  if (l < 0 || static_cast<unsigned>(l) > k) return 0;
  mpz_class r = 1;
  const auto ul = static_cast<unsigned>(l);
  for (unsigned j = 1; j <= ul; ++j) {
    // After step j, r = [k-l+j, j]_p, so the division is exact.
    r *= power(p, k - ul + j) - 1;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), mpz_class(power(p, j) - 1).get_mpz_t());
  }
  return r;
}

// a_j with the trailing-zero convention (1-based j).
unsigned at(const Partition& a, unsigned j) { return a[j - 1]; }

}  // namespace

PGroupType::PGroupType(std::uint64_t prime, Partition type)
    : p(prime), alpha(std::move(type)) {
  require_prime(p);
}

mpz_class gaussian_binomial(unsigned k, int l, std::uint64_t p) {
  require_prime(p);
  return gaussian_binomial_unchecked(k, l, p);
}

mpz_class subgroup_count_of_type(const PGroupType& g, const Partition& beta) {
  if (!is_subpartition(beta, g.alpha)) return 0;
  const Partition a = conjugate(g.alpha);
  const Partition b = conjugate(beta);
  mpz_class r = 1;
  for (unsigned j = 1; j <= g.alpha.largest(); ++j) {
    const unsigned aj = at(a, j), bj = at(b, j), bn = at(b, j + 1);
    r *= power(g.p, static_cast<unsigned long>(aj - bj) * bn);
    r *= gaussian_binomial_unchecked(aj - bn, static_cast<int>(bj) - static_cast<int>(bn), g.p);
  }
  return r;
}

mpz_class subgroup_count(const PGroupType& g) {
  const unsigned len = g.alpha.largest();
  if (len == 0) return 1;
  const Partition a = conjugate(g.alpha);

  std::map<std::pair<unsigned, int>, mpz_class> gauss;
  auto gb = [&](unsigned k, int l) -> const mpz_class& {
    auto [it, fresh] = gauss.try_emplace({k, l});
    if (fresh) it->second = gaussian_binomial_unchecked(k, l, g.p);
    return it->second;
  };

  // below[w] = sum over admissible tails (b_{j+1}, ...) with b_{j+1} = w.
  std::vector<mpz_class> below(1, 1);  // b_{len+1} = 0
  for (unsigned j = len; j >= 1; --j) {
    const unsigned aj = at(a, j);
    const unsigned a_next = at(a, j + 1);
    std::vector<mpz_class> here(aj + 1, 0);
    for (unsigned v = 0; v <= aj; ++v) {
      const unsigned wmax = std::min(v, a_next);
      for (unsigned w = 0; w <= wmax && w < below.size(); ++w) {
        if (below[w] == 0) continue;
        mpz_class term = power(g.p, static_cast<unsigned long>(aj - v) * w);
        term *= gb(aj - w, static_cast<int>(v) - static_cast<int>(w));
        here[v] += term * below[w];
      }
    }
    below = std::move(here);
  }
  mpz_class total = 0;
  for (const auto& t : below) total += t;
  return total;
}

double log_subgroup_count_main_term(const PGroupType& g) {
  const Partition a = conjugate(g.alpha);
  double sq = 0.0;
  for (unsigned v : a.parts()) sq += static_cast<double>(v) * v;
  return std::log(static_cast<double>(g.p)) / 4.0 * sq;
}

}  // namespace multsub
