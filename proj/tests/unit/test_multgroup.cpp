#include <doctest.h>

#include <cmath>

#include "multsub/errors.hpp"
#include "multsub/multgroup.hpp"
#include "multsub/pgroup.hpp"
#include "multsub/sieve.hpp"

using namespace multsub;

namespace {

mpz_class pow_z(std::uint64_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

const FunctionTable& table_1e5() {
  static const FunctionTable t = FunctionTable::build(100000);
  return t;
}

}  // namespace

TEST_CASE("factorize") {
  using F = std::vector<PrimeExponent>;
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(8).factors == F{{2, 3}});
  CHECK(factorize(360).factors == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1000000000039ull).factors == F{{1000000000039ull, 1}});
  CHECK(factorize(600851475143ull).factors == F{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK(factorize(360).value() == 360);
  CHECK(factorize(360, &table_1e5()) == factorize(360));
}

TEST_CASE("omega_q examples") {
  CHECK(omega_q(12, 2) == 1);
  CHECK(omega_q(1, 5) == 0);
  CHECK(omega_q(91, 3) == 2);
  CHECK(omega_q(360, 1) == 3);
}

TEST_CASE("omega_bar examples") {
  CHECK(omega_bar(8, 2, 1) == 2);
  CHECK(omega_bar(7, 3, 1) == 1);
  CHECK(omega_bar(27, 3, 1) == 1);
  CHECK(omega_bar(12, 2, 1) == 2);  // 4 || 12 and 3 = 1 mod 2
  CHECK(omega_bar(6, 2, 1) == 1);   // 2^2 does not divide 6
  CHECK(omega_bar(32, 2, 3) == 1);  // 2^5 | 32
  CHECK(omega_bar(16, 2, 3) == 0);
}

TEST_CASE("lambda_p examples") {
  CHECK(lambda_p(8, 2) == 1);
  CHECK(lambda_p(7, 3) == 1);
  CHECK(lambda_p(5, 7) == 0);
  CHECK(lambda_p(4, 2) == 1);  // (Z/4)^x = Z_2
  CHECK(lambda_p(2, 2) == 0);
  CHECK(carmichael(factorize(8)) == 2);
  CHECK(carmichael(factorize(7)) == 6);
}

TEST_CASE("sylow_partition examples") {
  CHECK(sylow_partition(8, 2) == Partition{1, 1});
  CHECK(sylow_partition(7, 2) == Partition{1});
  CHECK(sylow_partition(15, 2) == Partition{2, 1});
  CHECK(sylow_partition(4, 2) == Partition{1});
  CHECK_THROWS_AS(sylow_partition(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(sylow_partition(7, 4), std::invalid_argument);
  CHECK(sylow_decomposition(factorize(1)).empty());
  CHECK(sylow_decomposition(factorize(2)).empty());
}

TEST_CASE("count examples") {
  CHECK(count_subgroups(8) == 5);
  CHECK(count_subgroups(1) == 1);
  CHECK(count_subgroups(2) == 1);
  CHECK(count_subgroups(15) == 8);
  CHECK(count_subgroups(16) == 8);
  CHECK(count_subgroup_isoclasses(8) == 3);
  CHECK(count_subgroup_isoclasses(1) == 1);
  CHECK(count_subgroup_isoclasses(15) == 5);
  CHECK(count_subgroup_isoclasses(16) == 5);
}

TEST_CASE("oracle examples") {
  CHECK(enumerate_subgroups_oracle(8).size() == 5);
  CHECK(enumerate_subgroups_oracle(3).size() == 2);
  CHECK(enumerate_subgroups_oracle(16).size() == 8);
  CHECK(enumerate_subgroups_oracle(1).size() == 1);
  CHECK(classify_isoclasses_oracle(8) == 3);
  CHECK(classify_isoclasses_oracle(3) == 2);
  CHECK(classify_isoclasses_oracle(16) == count_subgroup_isoclasses(16));
  CHECK_THROWS_AS(enumerate_subgroups_oracle(2053), oracle_too_large);
  for (const auto& h : enumerate_subgroups_oracle(21)) {
    CHECK(std::is_sorted(h.begin(), h.end()));
    CHECK(24 % h.size() == 0);
  }
}

TEST_CASE("formulas equal the closure oracle for n <= 300") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    REQUIRE(count_subgroups(n) == enumerate_subgroups_oracle(n).size());
    REQUIRE(count_subgroup_isoclasses(n) == classify_isoclasses_oracle(n));
  }
}

TEST_CASE("structural invariants for n <= 1e5") {
  const auto& t = table_1e5();
  SubgroupCounter counter;
  for (std::uint32_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n, &t);
    const auto d = sylow_decomposition(f, &t);
    REQUIRE(d == sylow_decomposition_crt(f, &t));

    const mpz_class lambda = carmichael(f);
    mpz_class prod = 1, rest;
    for (const auto& [p, alpha] : d) {
      unsigned sum_bar = 0, sum_omega = 0;
      const unsigned lam = lambda_p(f, p);
      for (unsigned j = 1; j <= lam; ++j) sum_bar += omega_bar(f, p, j);
      // sum_j omega_{p^j}(n) = sum over primes q | n of nu_p(q - 1)
      for (const auto& [q, e] : f.factors)
        for (std::uint64_t m = q - 1; m > 0 && m % p == 0; m /= p) ++sum_omega;
      REQUIRE(sum_bar == alpha.weight());
      prod *= pow_z(p, sum_bar);

      REQUIRE(lam <= std::max(f.valuation(p), sum_omega));
      const mpz_class pz(p);
      REQUIRE(lam == mpz_remove(rest.get_mpz_t(), lambda.get_mpz_t(), pz.get_mpz_t()));
      if (alpha.weight() == 1) REQUIRE(subgroup_count(PGroupType(p, alpha)) == 2);
    }
    REQUIRE(prod == t.totient(n));

    const mpz_class I = counter.isoclasses(d);
    REQUIRE(I >= pow_z(2, t.omega_phi(n)));
    REQUIRE(I <= pow_z(2, t.bigomega_phi(n)));
    REQUIRE(I <= counter.count(d));
  }
}

TEST_CASE("log counts agree with exact counts") {
  const auto& t = table_1e5();
  const auto logs = log_counts_table(2000, t, 2);
  for (std::uint32_t n = 1; n <= 2000; ++n) {
    REQUIRE(logs[n].log_G == doctest::Approx(std::log(count_subgroups(n).get_d())).epsilon(1e-12));
    REQUIRE(logs[n].log_I == doctest::Approx(std::log(count_subgroup_isoclasses(n).get_d())).epsilon(1e-12));
  }
}
