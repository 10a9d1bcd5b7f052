#ifndef BRAUER_KL_HPP
#define BRAUER_KL_HPP

#include <map>
#include <optional>
#include <vector>

#include "brauer/laurent.hpp"
#include "brauer/partition.hpp"
#include "brauer/weight.hpp"

namespace brauer {

struct KLOptions {
  /// Apply pr_+ to the first term of the bracket only (alternative reading,
  /// kept for comparison).  Default: pr_+ multiplies the whole bracket.
  bool project_first_term_only = false;
};

using KLRow = std::map<Partition, LaurentPoly>;  // column weight -> n_{nu,column}

/// n_{nu,lambda} for the dominant regular weights of one orbit, up to a
/// degree bound.  Rows are the larger weight.
struct KLTable {
  long delta = 0;
  int degree_bound = 0;
  Partition root;
  std::vector<Partition> weights;  // label order
  std::map<Partition, KLRow> rows;
  std::map<Partition, int> lengths;
  std::map<Partition, Partition> descent;  // the mu used for each nu != root

  LaurentPoly entry(const Partition& nu, const Partition& lambda) const;
};

/// Number of (ij)_- hyperplanes separating two strictly decreasing points.
int separating_hyperplanes(const ShiftedPoint& x, const ShiftedPoint& y);

/// The dominant member of the orbit of lambda lying in the fundamental
/// alcove.  lambda must be regular.
Partition orbit_root(const Partition& lambda, long delta);

/// Regular dominant mu = (ij)_- . nu with mu < nu in adjacent alcoves,
/// ordered by degree then label order.
std::vector<Partition> admissible_descents(const Partition& nu, long delta);

/// kappa_lambda(nu, mu): transport of mu along the signed permutation taking
/// shift(nu) to shift(lambda).  The result may be non-dominant.
Weight kappa(const Partition& lambda, const Partition& nu, const Partition& mu, long delta);

/// Builds the table for the orbit of root (default 0), delta >= 1.
KLTable kl_polynomials(long delta, int max_degree, const Partition& root = Partition{}, KLOptions options = {});

/// N(nu) computed through a chosen descent mu, using the rows of `table`
/// for everything below nu.  Used to check that the descent does not matter.
KLRow kl_row_via(const KLTable& table, const Partition& nu, const Partition& mu, KLOptions options = {});

/// Predicted [Delta(standard) : L(simple)] = n_{simple^T, standard^T}(1) for
/// module labels.  Throws NotRegular, DifferentBlocks.
long long predict_decomposition(const Partition& standard, const Partition& simple, long delta);
/// Same, reading from an existing table.
long long predict_decomposition(const KLTable& table, const Partition& standard, const Partition& simple);

}  // namespace brauer

#endif  // BRAUER_KL_HPP
