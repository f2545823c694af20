#include <doctest.h>

#include <cmath>

#include "../fixtures.hpp"
#include "multsub/constants.hpp"
#include "multsub/errors.hpp"
#include "multsub/numeric.hpp"

using namespace multsub;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("constants at prime limit 1e7") {
  const auto a0 = compute_A0(10000000);
  const auto b = compute_B(10000000);
  const auto c = assemble_C(a0, b.derived);
  CHECK(std::fabs(a0.value - fixtures::kA0) <= 1e-9);
  CHECK(std::fabs(a0.value + kLog2 / 2 - fixtures::kA) <= 1e-9);
  CHECK(std::fabs(a0.value + kLog2 / 2 - 0.72109) <= 2e-5);
  CHECK(std::fabs(b.derived.value - fixtures::kB) <= 1e-9);
  CHECK(std::fabs(c.value - fixtures::kC) <= 1e-8);
  CHECK(std::fabs(b.printed_closed_form - fixtures::kBPrinted) <= 1e-9);
  CHECK(b.max_relative_term_delta < 1e-12);
  CHECK(std::fabs(b.corrected_closed_form - b.derived.value) <= b.derived.tail_bound + 1e-12);
  CHECK(std::fabs(b.printed_minus_derived - (b.printed_closed_form - b.derived.value)) < 1e-15);
  CHECK(a0.tail_bound > 0);
  CHECK(a0.tail_bound < 1e-7);
  CHECK(c.tail_bound >= 2 * kLog2 * a0.tail_bound);
}

TEST_CASE("prime limit 1e6 stays inside the reported tails") {
  const auto lo = compute_A0(1000000), hi = compute_A0(10000000);
  CHECK(std::fabs(lo.value - hi.value) <= lo.tail_bound);
  CHECK(hi.tail_bound < lo.tail_bound);
  const auto blo = compute_B(1000000), bhi = compute_B(10000000);
  CHECK(std::fabs(blo.derived.value - bhi.derived.value) <= blo.derived.tail_bound);
  CHECK(std::fabs(blo.corrected_closed_form - blo.derived.value) <= blo.derived.tail_bound + 1e-12);
  const auto clo = compute_C(1000000), chi = compute_C(10000000);
  CHECK(std::fabs(clo.value - chi.value) <= clo.tail_bound);
}

TEST_CASE("partial sums of C increase with the prime limit") {
  double prev = 0;
  for (std::uint64_t P : {100, 1000, 10000, 100000}) {
    const double v = compute_C(P).value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("assemble_C with zero sums") {
  const ConstantEstimate zero{};
  CHECK(assemble_C(zero, zero).value == doctest::Approx(kLog2 * kLog2 / 3));
}

TEST_CASE("small prime limits rejected") {
  CHECK_THROWS_AS(compute_A0(99), std::invalid_argument);
  CHECK_THROWS_AS(compute_B(10), std::invalid_argument);
  CHECK_THROWS_AS(infinite_sum_checks(1000, 1.5), std::invalid_argument);
}

TEST_CASE("prime power sum converges to A0 at rate 1/X") {
  const double A0 = compute_A0(10000000).value;
  auto check = [&](double X) {
    const auto r = infinite_sum_checks(100, X, false);
    INFO("X = " << X);
    REQUIRE(std::fabs(r.single_sum - A0) * X <= fixtures::kInfiniteSumC);
  };
  for (int X = 100; X <= 1000; ++X) check(X);
  for (int i = 0; i <= 40; ++i) check(std::floor(1000 * std::pow(100.0, i / 40.0)));
}

TEST_CASE("infinite sum at X = 2") {
  const auto r = infinite_sum_checks(1000, 2.0);
  CHECK(r.prime_power_count == 1);
  CHECK(r.single_sum == doctest::Approx(kLog2 / 4));
  REQUIRE(r.double_sum.has_value());
  // only the diagonal q1 = q2 = 2: Lambda(2)^2 / (phi(2)^3) / 4
  CHECK(*r.double_sum == doctest::Approx(kLog2 * kLog2 / 4));
}

TEST_CASE("double sum approaches 4 A0^2 + B") {
  const auto r = infinite_sum_checks(10000000, 20000.0);
  REQUIRE(r.double_sum.has_value());
  CHECK(std::fabs(*r.double_sum - r.four_A0_sq_plus_B) < 0.05);
}
