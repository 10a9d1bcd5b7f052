#ifndef BRAUER_BLOCKS_HPP
#define BRAUER_BLOCKS_HPP

#include <map>
#include <vector>

#include "brauer/partition.hpp"
#include "brauer/weight.hpp"

namespace brauer {

/// Orbit invariant for the type D-infinity group (permutations and even sign
/// changes) acting on a shifted point, taken over a finite window.  Keys over
/// different windows are compared after extending the shorter one by the rho
/// tail, which is why the key remembers delta.  scale > 1 is used for sums
/// of shifted points (edge midpoints), whose tail is scaled accordingly.
struct BlockKey {
  long delta = 0;
  long scale = 1;
  int window = 0;
  std::vector<long> abs_multiset;  // sorted ascending, doubled coordinates
  int neg_parity = 0;
  bool has_zero = false;

  BlockKey extended(int n) const;
  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Key of x over max(window, canonical window of x).
BlockKey orbit_key(const ShiftedPoint& x, int window = 0);
BlockKey block_key(const Weight& lambda, long delta, int window = 0);

/// Same orbit: equal moduli and, unless a zero entry is present, equal sign
/// parity.  Keys must share delta.
bool same_orbit(const BlockKey& a, const BlockKey& b);
/// Weights (not module labels) in the same orbit.
bool same_orbit(const Weight& lambda, const Weight& mu, long delta);

/// Module labels lambda, mu lie in the same block of B_n(delta): the
/// transposed weights lie in the same orbit.
bool same_block(const Partition& lambda, const Partition& mu, long delta);

struct BlockSet {
  long delta = 0;
  Weight root;
  int degree_bound = 0;
  std::vector<Partition> members;  // dominant weights, label order
};

/// Dominant weights of degree <= max_degree in the orbit of lambda.
BlockSet enumerate_block(const Partition& lambda, long delta, int max_degree);
/// Dominant weights of degree <= max_degree whose shift (with x's delta) lies
/// in the orbit of x.  x need not come from a dominant weight.
std::vector<Partition> enumerate_orbit(const ShiftedPoint& x, int max_degree);

/// One-box additions and removals, label order.
std::vector<Partition> supp(const Partition& lambda);
/// supp applied twice, with multiplicities.
std::map<Partition, int> supp2(const Partition& lambda);

/// |B(lambda')∩supp(lambda)| = 1 and |B(lambda)∩supp(lambda')| = 1.
/// Throws NotAdjacent unless lambda' ∈ supp(lambda).
bool translation_equivalent(const Partition& lambda, const Partition& lambda_prime, long delta);

/// lambda' separates lower and upper (lower of smaller degree).
bool separates(const Partition& lambda_prime, const Partition& lower, const Partition& upper, long delta);

/// Chain from lambda to mu through one facet, each step moving one singleton
/// coordinate by a box or one doubleton pair by a box in opposite directions.
/// Throws DifferentFacet.
std::vector<Partition> translation_chain(const Partition& lambda, const Partition& mu, long delta);

/// For delta = -2m the unique block member with at most m parts; for
/// delta = -2m+1 the unique member with at most m+1 parts and last part <= 1.
/// Throws TooSingular if lambda is more than m-singular.
Partition canonical_negative_rep(const Partition& lambda, long delta);

}  // namespace brauer

#endif  // BRAUER_BLOCKS_HPP
