#include "multsub/polyops.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "multsub/errors.hpp"

namespace multsub {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

std::vector<TwoToOneMap> enumerate_two_to_one(unsigned k) {
  if (k == 0 || k % 2 || k > kMaxTwoToOneK)
    throw invalid_argument("k must be even and between 2 and 8");
  const unsigned half = k / 2;
  std::vector<TwoToOneMap> out;
  std::vector<unsigned> images, used(half + 1, 0);
  std::function<void()> rec = [&] {
    if (images.size() == k) {
      out.push_back({k, images});
      return;
    }
    for (unsigned v = 1; v <= half; ++v) {
      if (used[v] == 2) continue;
      ++used[v];
      images.push_back(v);
      rec();
      images.pop_back();
      --used[v];
    }
  };
  rec();
  return out;
}

TwoToOneMap psi(const Permutation& sigma) {
  const auto k = static_cast<unsigned>(sigma.size());
  if (k == 0 || k % 2) throw invalid_argument("psi needs a permutation of even degree");
  std::vector<unsigned> inverse(k + 1, 0);
  for (unsigned i = 1; i <= k; ++i) {
    const unsigned v = sigma[i - 1];
    if (v < 1 || v > k || inverse[v]) throw invalid_argument("sigma is not a permutation");
    inverse[v] = i;
  }
  TwoToOneMap tau{k, std::vector<unsigned>(k)};
  for (unsigned i = 1; i <= k; ++i) tau.images[i - 1] = (inverse[i] + 1) / 2;
  return tau;
}

void ZPolynomial::add_term(Key key, const mpq_class& coefficient) {
  if (coefficient == 0) return;
  std::sort(key.y.begin(), key.y.end());
  std::sort(key.z.begin(), key.z.end());
  auto [it, fresh] = terms_.try_emplace(std::move(key), coefficient);
  if (!fresh) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

ZPolynomial ZPolynomial::operator*(const ZPolynomial& other) const {
  ZPolynomial out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      Key key = ka;
      key.y.insert(key.y.end(), kb.y.begin(), kb.y.end());
      key.z.insert(key.z.end(), kb.z.begin(), kb.z.end());
      out.add_term(std::move(key), ca * cb);
    }
  }
  return out;
}

ZPolynomial ZPolynomial::scaled(const mpq_class& c) const {
  ZPolynomial out;
  for (const auto& [key, v] : terms_) out.add_term(key, v * c);
  return out;
}

std::string ZPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += mag.get_str();
    for (auto y : key.y) out += "*y" + std::to_string(y);
    for (const auto& [i, j] : key.z) out += "*z" + std::to_string(i) + std::to_string(j);
  }
  return out;
}

ZPolynomial phi_h(const std::vector<MultiMonomial>& poly, unsigned h) {
  if (h == 0 || h % 2 || h > kMaxPhiDegree)
    throw invalid_argument("phi_h needs even h between 2 and 6");
  const mpz_class hfact = factorial(h);
  ZPolynomial out;
  for (const auto& mono : poly) {
    if (mono.x_indices.size() != h)
      throw invalid_argument("monomial x-degree differs from h");
    if (mono.coefficient == 0) continue;
    std::map<std::vector<ZPolynomial::ZVar>, unsigned long> counts;
    std::vector<unsigned> order(h);
    std::iota(order.begin(), order.end(), 0u);
    do {
      std::vector<ZPolynomial::ZVar> z;
      for (unsigned i = 0; i < h; i += 2)
        z.emplace_back(mono.x_indices[order[i]], mono.x_indices[order[i + 1]]);
      std::sort(z.begin(), z.end());
      ++counts[z];
    } while (std::next_permutation(order.begin(), order.end()));
    for (auto& [z, count] : counts) {
      mpq_class c = mono.coefficient * mpq_class(count) / mpq_class(hfact);
      out.add_term({mono.y_indices, z}, c);
    }
  }
  return out;
}

mpq_class s_h(unsigned h) {
  if (h % 2) throw invalid_argument("s_h needs even h");
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, h / 2);
  denom *= factorial(h / 2);
  mpq_class r(factorial(h), denom);
  r.canonicalize();
  return r;
}

std::vector<MultiMonomial> expand_linear_power(const std::vector<mpq_class>& r, unsigned h) {
  std::map<std::vector<unsigned>, mpq_class> acc;
  const auto width = static_cast<unsigned>(r.size());
  // Multisets i_1 <= ... <= i_h with weight h!/prod(mult!) * prod r.
  std::vector<unsigned> idx;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (idx.size() == h) {
      mpz_class ways = factorial(h);
      mpq_class coeff = 1;
      for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        ways /= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      for (auto i : idx) coeff *= r[i];
      coeff *= ways;
      if (coeff != 0) acc[idx] += coeff;
      return;
    }
    for (unsigned i = start; i < width; ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  std::vector<MultiMonomial> out;
  for (auto& [x, c] : acc) out.push_back({c, x, {}});
  return out;
}

ZPolynomial quadratic_form_power(const std::vector<mpq_class>& r, unsigned e) {
  ZPolynomial form;
  for (unsigned i = 0; i < r.size(); ++i)
    for (unsigned j = 0; j < r.size(); ++j) form.add_term({{}, {{i, j}}}, r[i] * r[j]);
  ZPolynomial out;
  out.add_term({}, 1);
  for (unsigned k = 0; k < e; ++k) out = out * form;
  return out;
}

}  // namespace multsub
