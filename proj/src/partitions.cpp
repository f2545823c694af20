#include "multsub/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "multsub/errors.hpp"

namespace multsub {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw invalid_argument("partition parts must be nonincreasing");
  }
}

Partition Partition::from_unordered(std::vector<unsigned> parts) {
  std::erase(parts, 0u);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw invalid_argument("partition must look like [3,1,1]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<unsigned> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw invalid_argument("bad partition part '" + std::string(token) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<unsigned> out(p.largest(), 0);
  for (unsigned part : p.parts())
    for (unsigned j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool is_subpartition(const Partition& beta, const Partition& alpha) {
  if (beta.length() > alpha.length()) return false;
  for (std::size_t i = 0; i < beta.length(); ++i)
    if (beta[i] > alpha[i]) return false;
  return true;
}

std::vector<Partition> enumerate_subpartitions(const Partition& alpha, unsigned cap) {
  if (alpha.weight() > cap)
    throw enumeration_too_large("subpartition enumeration of " + alpha.to_string() +
                                " exceeds cap " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Preorder DFS with increasing part values emits lexicographic order.
  std::function<void(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned bound) {
    out.emplace_back(current);
    if (i >= alpha.length()) return;
    const unsigned top = std::min(bound, alpha[i]);
    for (unsigned v = 1; v <= top; ++v) {
      current.push_back(v);
      visit(i + 1, v);
      current.pop_back();
    }
  };
  visit(0, alpha.largest());
  return out;
}

mpz_class count_subpartitions(const Partition& alpha) {
  // ways[v]: number of admissible prefixes whose latest entry is v (0 allowed,
  // after which every later entry is 0 too).
  const unsigned top = alpha.largest();
  std::vector<mpz_class> ways(top + 1, 0);
  ways[top] = 1;
  for (unsigned a : alpha.parts()) {
    std::vector<mpz_class> next(top + 1, 0);
    mpz_class suffix = 0;
    for (unsigned v = top + 1; v-- > 0;) {
      suffix += ways[v];
      if (v <= a) next[v] = suffix;
    }
    ways = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned maxpart) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned v = std::min(remaining, maxpart); v >= 1; --v) {
      current.push_back(v);
      rec(remaining - v, v);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<mpz_class> partition_numbers(unsigned m) {
  std::vector<mpz_class> P(m + 1, 0);
  P[0] = 1;
  for (unsigned part = 1; part <= m; ++part)
    for (unsigned total = part; total <= m; ++total) P[total] += P[total - part];
  return P;
}

}  // namespace multsub
