#ifndef BRAUER_BAREISS_HPP
#define BRAUER_BAREISS_HPP

#include <gmpxx.h>

#include <vector>

namespace brauer {

/// Rank over Q by fraction-free (Bareiss) elimination.  Rows are consumed.
long rank_fraction_free(std::vector<std::vector<mpz_class>> rows);

/// Rank of a dense row-major rational matrix; each row is scaled to an
/// integer row first.
long rank_rational(const std::vector<mpq_class>& entries, int rows, int cols);

}  // namespace brauer

#endif  // BRAUER_BAREISS_HPP
