#ifndef BRAUER_CELL_MODULE_HPP
#define BRAUER_CELL_MODULE_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauer/blocks.hpp"
#include "brauer/diagram.hpp"
#include "brauer/kl.hpp"
#include "brauer/partition.hpp"
#include "brauer/specht.hpp"

namespace brauer {

/// Partial one-row diagram: t disjoint arcs on n northern nodes, the other
/// n-2t nodes free (0-indexed throughout).
struct PartialOneRow {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // each pair (i < j), sorted by i
  std::vector<int> free_nodes;            // increasing

  int t() const noexcept { return static_cast<int>(arcs.size()); }
  /// The (n, n-2t) diagram: arcs on top, free node k joined to southern k.
  Diagram half() const;
  std::string to_string() const;
  friend bool operator==(const PartialOneRow&, const PartialOneRow&) = default;
};

/// V_{n,t} in lexicographic order of the arc lists.
std::vector<PartialOneRow> partial_one_rows(int n, int t);
long long count_partial_one_rows(int n, int t);

struct CellBasisVector {
  PartialOneRow w;
  Tableau tab;
};

/// C(n,2t) (2t-1)!! f^lambda.  Throws BadDegree unless n - |lambda| is even
/// and non-negative.
long long cell_dimension(int n, const Partition& lambda);

struct GramMatrix {
  int dim = 0;
  mpq_class delta;
  std::vector<mpq_class> entries;  // row-major

  const mpq_class& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
  bool symmetric() const;
};

/// Standard module Delta_n(lambda) = I_n^t (x) S^lambda over Q with loops
/// evaluated at delta.  Basis index = w_index * f^lambda + tableau_index.
class CellModule {
 public:
  CellModule(int n, const Partition& lambda, const mpq_class& delta);

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  const Partition& lambda() const noexcept { return lambda_; }
  const mpq_class& delta() const noexcept { return delta_; }
  int dimension() const noexcept { return static_cast<int>(rows_.size()) * specht_.dimension(); }
  const std::vector<PartialOneRow>& one_rows() const noexcept { return rows_; }
  const SpechtModule& specht() const noexcept { return specht_; }
  std::vector<CellBasisVector> basis() const;
  int index_of(const PartialOneRow& w) const;

  /// d . v for a square diagram d on n strands.  Throws SizeMismatch.
  std::vector<mpq_class> act(const Diagram& d, const std::vector<mpq_class>& v) const;
  std::vector<mpq_class> act(const Diagram& d, int basis_index) const;

  /// Cellular form <u, v>.
  mpq_class form(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) const;
  GramMatrix gram() const;

 private:
  // Pairing of one-row halves a, b: loops and the induced permutation on the
  // free nodes, or nullopt-like (loops = -1) when lines are lost.
  struct Pairing {
    int loops = -1;
    std::vector<int> perm;
  };
  Pairing pair(int a, int b) const;
  // rho(D_p) for the permutation diagram p (north k -> south p[k]).
  std::vector<mpq_class> diagram_matrix(const std::vector<int>& perm) const;

  int n_;
  int t_;
  Partition lambda_;
  mpq_class delta_;
  std::vector<PartialOneRow> rows_;
  std::vector<Diagram> halves_;
  std::map<std::vector<std::pair<int, int>>, int> row_index_;
  SpechtModule specht_;
};

/// Throws BadDegree, ZeroDelta.
GramMatrix gram_matrix(int n, const Partition& lambda, const mpq_class& delta);
/// Rank of the Gram matrix over Q, i.e. dim L_n(lambda).
long simple_dim(int n, const Partition& lambda, const mpq_class& delta);

struct VerifyEntry {
  int n = 0;
  long delta = 0;
  Partition lambda;
  long long dim_delta = 0;
  long long predicted_sum = 0;
  bool pass = false;
  std::map<Partition, long long> multiplicities;  // simple label -> predicted multiplicity (non-zero only)
};

struct VerifyReport {
  int n = 0;
  long delta = 0;
  std::vector<VerifyEntry> entries;
  std::map<Partition, long> simple_dims;
  bool all_pass() const;
};

/// Checks dim Delta_n(lambda) = sum_mu [Delta:L(mu)] dim L_n(mu) over the
/// labels of `block` that lie in Lambda_n.  Block members are weights; the
/// module labels are their transposes.
VerifyReport verify_block(int n, long delta, const BlockSet& block, const KLTable& predictions);

}  // namespace brauer

#endif  // BRAUER_CELL_MODULE_HPP
