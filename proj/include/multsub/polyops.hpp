#ifndef MULTSUB_POLYOPS_HPP
#define MULTSUB_POLYOPS_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace multsub {

/// A 2-to-1 map {1..k} -> {1..k/2}; images[i-1] is the image of i.
struct TwoToOneMap {
  unsigned k = 0;
  std::vector<unsigned> images;

  friend bool operator==(const TwoToOneMap&, const TwoToOneMap&) = default;
  friend auto operator<=>(const TwoToOneMap& a, const TwoToOneMap& b) {
    return a.images <=> b.images;
  }
};

inline constexpr unsigned kMaxTwoToOneK = 8;
inline constexpr unsigned kMaxPhiDegree = 6;

/// All of T_k in lexicographic order of the image sequence.
/// Throws invalid_argument unless k is even with 2 <= k <= 8.
std::vector<TwoToOneMap> enumerate_two_to_one(unsigned k);

/// sigma[i-1] = sigma(i), a permutation of {1..k}.
using Permutation = std::vector<unsigned>;

/// tau_0 o sigma^{-1} with tau_0(j) = ceil(j/2). Throws invalid_argument for
/// odd k or a non-permutation.
TwoToOneMap psi(const Permutation& sigma);

/// coefficient * y_{y_indices} * x_{x_indices}; indices are multisets kept sorted.
struct MultiMonomial {
  mpq_class coefficient;
  std::vector<unsigned> x_indices;
  std::vector<unsigned> y_indices;
};

/*
 * Polynomial in the ordered-pair variables z_ij (z_ij and z_ji distinct)
 * with y-monomial coefficients carried through untouched. Zero terms are
 * never stored, so == is polynomial equality.
 */
class ZPolynomial {
 public:
  using ZVar = std::pair<unsigned, unsigned>;
  struct Key {
    std::vector<unsigned> y;
    std::vector<ZVar> z;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  void add_term(Key key, const mpq_class& coefficient);
  ZPolynomial& operator+=(const ZPolynomial& other);
  ZPolynomial operator*(const ZPolynomial& other) const;
  ZPolynomial scaled(const mpq_class& c) const;

  const std::map<Key, mpq_class>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

  /// e.g. "1/6*z12*z00 - 7/2*z11*z12"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<Key, mpq_class> terms_;
};

/// Phi_h extended linearly. Throws invalid_argument for odd h, h > 6, or a
/// monomial whose x-degree differs from h.
ZPolynomial phi_h(const std::vector<MultiMonomial>& poly, unsigned h);

/// h! / (2^{h/2} (h/2)!). Throws invalid_argument for odd h.
mpq_class s_h(unsigned h);

/// (sum_i r_i x_i)^h collected by x-multiset with multinomial weights.
std::vector<MultiMonomial> expand_linear_power(const std::vector<mpq_class>& r, unsigned h);

/// (sum_{i,j} r_i r_j z_ij)^e.
ZPolynomial quadratic_form_power(const std::vector<mpq_class>& r, unsigned e);

}  // namespace multsub

#endif  // MULTSUB_POLYOPS_HPP
