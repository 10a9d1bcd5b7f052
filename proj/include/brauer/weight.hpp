#ifndef BRAUER_WEIGHT_HPP
#define BRAUER_WEIGHT_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "brauer/partition.hpp"

namespace brauer {

/// Finite-support integer sequence, indexed from 1 in the mathematics and
/// from 0 here.  Trailing zeros are not stored.  Unlike Partition, entries may
/// be negative or increasing (dot-action images need not be dominant).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> entries);
  Weight(const Partition& p) : Weight(p.parts()) {}  // NOLINT: dominant weights are weights

  const std::vector<int>& entries() const noexcept { return entries_; }
  int support() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : 0; }
  long degree() const noexcept;

  bool dominant() const noexcept;
  /// Throws NotInDominantChamber when the weight is not dominant.
  Partition to_partition() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

std::string to_string(const Weight& w);

/// lambda + rho_delta, stored in doubled coordinates so that odd delta stays
/// integral: doubled[i] = 2*lambda_i - 2i - delta (0-indexed i).
/// Entries beyond the window follow the rho tail and are not stored.
class ShiftedPoint {
 public:
  ShiftedPoint(std::vector<long> doubled, long delta);

  long delta() const noexcept { return delta_; }
  int window() const noexcept { return static_cast<int>(doubled_.size()); }
  const std::vector<long>& doubled() const noexcept { return doubled_; }

  /// Doubled entry at 0-indexed position i, including the implicit tail.
  long at(std::size_t i) const noexcept {
    return i < doubled_.size() ? doubled_[i] : tail_entry(i, delta_);
  }
  static long tail_entry(std::size_t i, long delta) noexcept {
    return -(2 * static_cast<long>(i) + delta);
  }

  /// Copy with the window enlarged to n (no-op if already at least n).
  ShiftedPoint extended(int n) const;
  /// Smallest window containing every modulus coincidence and every
  /// deviation from the rho tail.
  int canonical_window() const;
  ShiftedPoint canonical() const;

  bool strictly_decreasing() const noexcept;

  /// Entries as halved decimals ("1.5,-0.5,...") over the window.
  std::string display() const;

  friend bool operator==(const ShiftedPoint& a, const ShiftedPoint& b);

 private:
  std::vector<long> doubled_;
  long delta_;
};

ShiftedPoint shift(const Weight& lambda, long delta);
/// Inverse of shift.  Throws ParityMismatch if some doubled entry has the
/// wrong parity for delta.
Weight unshift(const ShiftedPoint& x);

/// Smallest window n >= support(lambda) such that every entry of the rho tail
/// beyond n has modulus larger than every entry inside the window.
int canonical_window(const Weight& lambda, long delta);

struct Reflection {
  enum class Kind { Plain, Minus };
  Kind kind;
  int i;  // 1-indexed
  int j;  // 1-indexed

  static Reflection plain(int i, int j);
  static Reflection minus(int i, int j);
  /// Acts on a doubled vector in place; the vector must be long enough.
  void apply(std::vector<long>& x) const;
  std::string to_string() const;
  friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// w ._delta lambda where w = word[0] word[1] ... (applied right to left).
Weight dot_action(std::span<const Reflection> word, const Weight& lambda, long delta);

/// Number of unordered coordinate pairs {i,j} with |x_i| = |x_j|, x = lambda + rho_delta.
int singularity_degree(const Weight& lambda, long delta);
int singularity_degree(const ShiftedPoint& x);
bool is_regular(const Weight& lambda, long delta);

struct Singleton {
  int index;  // 1-indexed
  friend bool operator==(const Singleton&, const Singleton&) = default;
};
struct Doubleton {
  int first;   // 1-indexed, first < second
  int second;
  friend bool operator==(const Doubleton&, const Doubleton&) = default;
};
using FacetSlot = std::variant<Singleton, Doubleton>;

/// Coordinates ordered by increasing modulus over a window; beyond the window
/// the pattern continues with singletons in index order.
struct FacetSignature {
  std::vector<FacetSlot> slots;
  int window = 0;
  friend bool operator==(const FacetSignature&, const FacetSignature&) = default;
  std::string to_string() const;
};

/// Signature of an arbitrary strictly decreasing vector (any scale).
/// Throws NotInDominantChamber otherwise.
FacetSignature facet_signature(std::span<const long> values);
FacetSignature facet_signature(const ShiftedPoint& x);

/// Both weights dominant; compares signatures over a common window.
bool same_facet(const Weight& lambda, const Weight& mu, long delta);

/// lambda_1 + lambda_2 <= delta (requires delta >= 1, lambda dominant).
bool in_fundamental_alcove(const Weight& lambda, long delta);

/// Entrywise order: y - x has only non-negative entries.
bool weight_leq(const Weight& x, const Weight& y) noexcept;

/// Number of (ij)_- hyperplanes strictly between the fundamental alcove and
/// lambda + rho_delta, i.e. #{i<j : x_i + x_j > 0}.  Throws NotRegular.
int length(const Weight& lambda, long delta);
int length(const ShiftedPoint& x);

}  // namespace brauer

#endif  // BRAUER_WEIGHT_HPP
