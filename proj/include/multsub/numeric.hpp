#ifndef MULTSUB_NUMERIC_HPP
#define MULTSUB_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace multsub {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Natural log of a positive big integer, accurate to double precision.
double log_of(const mpz_class& v);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; the 12 prime bases are exact for all 64-bit input.
bool is_prime_u64(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient of a prime power q = p^k.
inline std::uint64_t totient_prime_power(std::uint64_t q, std::uint64_t p) {
  return q / p * (p - 1);
}

/// log log x, with the convention that x must exceed e.
inline double loglog(double x) { return std::log(std::log(x)); }

}  // namespace multsub

#endif  // MULTSUB_NUMERIC_HPP
