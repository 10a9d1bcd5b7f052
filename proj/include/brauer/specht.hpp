#ifndef BRAUER_SPECHT_HPP
#define BRAUER_SPECHT_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "brauer/partition.hpp"

namespace brauer {

/// Standard tableau stored as the row (0-indexed) of each entry 0..m-1.
using Tableau = std::vector<int>;

std::vector<Tableau> standard_tableaux(const Partition& shape);

/// Specht module S^lambda of the symmetric group on m letters in Young's
/// seminormal form, with an invariant symmetric form that is diagonal in
/// the tableau basis.
class SpechtModule {
 public:
  explicit SpechtModule(const Partition& shape);

  const Partition& shape() const noexcept { return shape_; }
  int degree() const noexcept { return shape_.degree(); }
  int dimension() const noexcept { return static_cast<int>(tableaux_.size()); }
  const std::vector<Tableau>& tableaux() const noexcept { return tableaux_; }
  int index_of(const Tableau& t) const;

  /// Content (column - row) of entry k in tableau t.
  static int content(const Tableau& t, int k);

  /// v <- s_i v, s_i swapping letters i and i+1 (0-indexed).
  void apply_simple(int i, std::vector<mpq_class>& v) const;
  /// v <- g v for a permutation in one-line notation (g(k) = perm[k]).
  void apply_permutation(const std::vector<int>& perm, std::vector<mpq_class>& v) const;
  /// Dense matrix of g (row-major, dimension x dimension).
  std::vector<mpq_class> matrix(const std::vector<int>& perm) const;

  /// Diagonal of the invariant form, normalised to 1 on the row-reading tableau.
  const std::vector<mpq_class>& form_weights() const noexcept { return weights_; }

 private:
  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::map<Tableau, int> index_;
  // For each simple reflection and tableau: partner index (-1 if none) and
  // the axial distance r = c(i+1) - c(i).
  std::vector<std::vector<int>> partner_;
  std::vector<std::vector<int>> axial_;
  std::vector<mpq_class> weights_;
};

/// Reduced word (s_{j1}, s_{j2}, ...) with perm = s_{jk} ... s_{j1} as maps,
/// i.e. apply s_{j1} first.
std::vector<int> permutation_word(const std::vector<int>& perm);

}  // namespace brauer

#endif  // BRAUER_SPECHT_HPP
