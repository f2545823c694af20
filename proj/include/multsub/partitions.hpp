#ifndef MULTSUB_PARTITIONS_HPP
#define MULTSUB_PARTITIONS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace multsub {

/*
 * An integer partition stored as its nonzero parts in nonincreasing order.
 * Reading past the last part yields 0, so (3,1) and (3,1,0,0,...) are the
 * same value. The empty partition is the partition of 0.
 */
class Partition {
 public:
  Partition() = default;
  /// Throws invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts)
      : Partition(std::vector<unsigned>(parts)) {}

  /// Drops zeros and sorts; for building a type from unordered cyclic factors.
  static Partition from_unordered(std::vector<unsigned> parts);
  /// Parses "[3,1,1]" / "[]".
  static Partition parse(std::string_view text);

  std::span<const unsigned> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }
  unsigned weight() const;

  unsigned operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Partition& a,
                                         const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
};

inline constexpr unsigned kDefaultEnumerationCap = 64;

/// Transpose of the Ferrers diagram: result[j] = #{i : p[i] >= j+1}.
Partition conjugate(const Partition& p);

/// beta <= alpha componentwise, missing parts read as 0.
bool is_subpartition(const Partition& beta, const Partition& alpha);

/// Every beta <= alpha exactly once, in lexicographic order.
/// Throws enumeration_too_large when alpha.weight() exceeds cap.
std::vector<Partition> enumerate_subpartitions(
    const Partition& alpha, unsigned cap = kDefaultEnumerationCap);

/// Number of subpartitions of alpha, by a DP over parts (no enumeration).
mpz_class count_subpartitions(const Partition& alpha);

/// All partitions of m, in lexicographically decreasing order.
std::vector<Partition> partitions_of(unsigned m);

/// P(0), ..., P(m) by the standard O(m^2) part-size DP.
std::vector<mpz_class> partition_numbers(unsigned m);

}  // namespace multsub

#endif  // MULTSUB_PARTITIONS_HPP
