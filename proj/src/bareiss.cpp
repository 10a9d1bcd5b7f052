#include "brauer/bareiss.hpp"

#include <utility>

#include "brauer/parallel.hpp"

namespace brauer {

long rank_fraction_free(std::vector<std::vector<mpz_class>> rows) {
  const std::size_t m = rows.size();
  if (m == 0) return 0;
  const std::size_t n = rows.front().size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    // Smallest non-zero pivot keeps the intermediate minors short.
    std::size_t pivot = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (rows[i][col] == 0) continue;
      if (pivot == m || mpz_sizeinbase(rows[i][col].get_mpz_t(), 2) < mpz_sizeinbase(rows[pivot][col].get_mpz_t(), 2)) {
        pivot = i;
      }
    }
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::vector<mpz_class>& top = rows[rank];
    const std::size_t below = m - rank - 1;
    parallel_for(below, [&](std::size_t k) {
      std::vector<mpz_class>& row = rows[rank + 1 + k];
      const mpz_class factor = row[col];
      if (factor == 0) {
        // (p*x - 0)/prev: still scale so every row carries the same minors.
        for (std::size_t j = col + 1; j < n; ++j) {
          if (row[j] == 0) continue;
          mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), top[col].get_mpz_t());
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        }
        return;
      }
      mpz_class t;
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), top[col].get_mpz_t());
        mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), top[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    });
    prev = top[col];
    ++rank;
  }
  return static_cast<long>(rank);
}

long rank_rational(const std::vector<mpq_class>& entries, int rows, int cols) {
  std::vector<std::vector<mpz_class>> scaled(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) {
      const mpq_class& q = entries[static_cast<std::size_t>(i) * cols + j];
      if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (int j = 0; j < cols; ++j) {
      const mpq_class& q = entries[static_cast<std::size_t>(i) * cols + j];
      scaled[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }
  return rank_fraction_free(std::move(scaled));
}

}  // namespace brauer
