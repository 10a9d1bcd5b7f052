#ifndef BRAUER_PARTITION_HPP
#define BRAUER_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros.  The empty partition is the zero partition.
///
/// The same type doubles as a dominant weight (a weakly decreasing element of
/// Z^f).  Module labels and weights are related by transposition; functions
/// that take module labels say so explicitly.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless `parts` is weakly decreasing and
  /// non-negative; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int degree() const noexcept { return degree_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Zero-padded part access, 0-indexed.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Young-diagram inclusion: this ⊇ other.
  bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Ordering used for every emitted collection: degree ascending, then parts
/// in decreasing lexicographic order (so (4,2,1,1) precedes (3,3,2)).
bool label_less(const Partition& a, const Partition& b) noexcept;

Partition transpose(const Partition& p);

struct Box {
  int row;     // 1-indexed
  int column;  // 1-indexed
  int content() const noexcept { return column - row; }
  friend bool operator==(const Box&, const Box&) = default;
};

struct SkewBoxes {
  std::vector<Box> boxes;   // row-major order
  std::vector<int> contents;  // sorted ascending
};

/// Boxes of lambda/mu.  Throws NotSubpartition if mu is not contained in lambda.
SkewBoxes skew(const Partition& lambda, const Partition& mu);

/// mu ⊆ lambda is delta-balanced.
bool is_balanced_pair(const Partition& mu, const Partition& lambda, long delta);

/// lambda and mu are delta-balanced, i.e. lambda∩mu ⊂ lambda and
/// lambda∩mu ⊂ mu are both balanced pairs.
bool is_balanced(const Partition& lambda, const Partition& mu, long delta);

Partition intersection(const Partition& a, const Partition& b);
Partition union_of(const Partition& a, const Partition& b);

/// Partitions obtained by adding one box, in label order.
std::vector<Partition> addable(const Partition& p);
/// Partitions obtained by removing one box, in label order.
std::vector<Partition> removable(const Partition& p);

/// All partitions of n, in label order.
std::vector<Partition> partitions_of(int n);
/// All partitions of degree <= max_degree, in label order.
std::vector<Partition> partitions_up_to(int max_degree);

/// Number of standard Young tableaux of shape p (hook length formula).
long long count_standard_tableaux(const Partition& p);

/// Comma-joined parts; the empty partition is "0".
std::string to_string(const Partition& p);
/// Compact display label: digits concatenated when every part is below 10,
/// runs of three or more equal parts written as a^k ("521^3", "4^4").
/// Falls back to the comma form otherwise.
std::string compact_label(const Partition& p);
/// Accepts "0", comma lists ("5,2,1,1,1"), compact digit strings ("53211"),
/// and exponent notation in either form ("521^3", "5,2,1^3").
/// Throws ParseError.
Partition parse_partition(std::string_view text);

}  // namespace brauer

#endif  // BRAUER_PARTITION_HPP
