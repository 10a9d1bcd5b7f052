#include "brauer/specht.hpp"

#include <deque>

#include "brauer/error.hpp"

namespace brauer {

namespace {

void grow(const Partition& shape, std::vector<int>& filled, Tableau& current, std::vector<Tableau>& out) {
  if (static_cast<int>(current.size()) == shape.degree()) {
    out.push_back(current);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    if (filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r])) {
      ++filled[r];
      current.push_back(r);
      grow(shape, filled, current, out);
      current.pop_back();
      --filled[r];
    }
  }
}

int column_of(const Tableau& t, int k) {
  int col = 0;
  for (int j = 0; j < k; ++j) col += t[j] == t[k];
  return col;
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  std::vector<int> filled(shape.length(), 0);
  Tableau current;
  grow(shape, filled, current, out);
  return out;
}

int SpechtModule::content(const Tableau& t, int k) { return column_of(t, k) - t[k]; }

SpechtModule::SpechtModule(const Partition& shape) : shape_(shape), tableaux_(standard_tableaux(shape)) {
  const int f = dimension();
  const int m = degree();
  for (int k = 0; k < f; ++k) index_.emplace(tableaux_[k], k);
  partner_.assign(std::max(m - 1, 0), std::vector<int>(f, -1));
  axial_.assign(std::max(m - 1, 0), std::vector<int>(f, 0));
  for (int i = 0; i + 1 < m; ++i) {
    for (int k = 0; k < f; ++k) {
      const Tableau& t = tableaux_[k];
      if (t[i] == t[i + 1]) {
        axial_[i][k] = 1;
      } else if (column_of(t, i) == column_of(t, i + 1)) {
        axial_[i][k] = -1;
      } else {
        Tableau swapped = t;
        std::swap(swapped[i], swapped[i + 1]);
        partner_[i][k] = index_.at(swapped);
        axial_[i][k] = content(t, i + 1) - content(t, i);
      }
    }
  }

  // Invariant form: s_i self-adjoint forces g(T')/g(T) = (r-1)/(r+1).
  weights_.assign(f, 0);
  if (f == 0) return;
  Tableau superstandard;
  for (int r = 0; r < shape.length(); ++r) superstandard.insert(superstandard.end(), shape[r], r);
  const int start = index_.at(superstandard);
  weights_[start] = 1;
  std::vector<char> seen(f, 0);
  seen[start] = 1;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < m; ++i) {
      const int p = partner_[i][k];
      if (p < 0 || seen[p]) continue;
      const int r = axial_[i][k];
      mpq_class ratio(r - 1, r + 1);
      ratio.canonicalize();  // r + 1 may be negative
      weights_[p] = weights_[k] * ratio;
      seen[p] = 1;
      queue.push_back(p);
    }
  }
}

int SpechtModule::index_of(const Tableau& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

void SpechtModule::apply_simple(int i, std::vector<mpq_class>& v) const {
  if (i < 0 || i + 1 >= degree()) throw Error(ErrorCode::InvalidArgument, "simple reflection out of range");
  std::vector<mpq_class> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const int p = partner_[i][k];
    const int r = axial_[i][k];
    if (p < 0) {
      out[k] += r > 0 ? v[k] : mpq_class(-v[k]);
    } else {
      mpq_class inv(1, r);
      inv.canonicalize();
      out[k] += v[k] * inv;
      out[p] += v[k] * (1 + inv);
    }
  }
  v = std::move(out);
}

std::vector<int> permutation_word(const std::vector<int>& perm) {
  std::vector<int> a = perm;
  std::vector<int> word;
  const int m = static_cast<int>(a.size());
  for (int pass = 0; pass < m; ++pass) {
    bool swapped = false;
    for (int j = 0; j + 1 < m; ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        word.push_back(j);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return word;
}

void SpechtModule::apply_permutation(const std::vector<int>& perm, std::vector<mpq_class>& v) const {
  for (int j : permutation_word(perm)) apply_simple(j, v);
}

std::vector<mpq_class> SpechtModule::matrix(const std::vector<int>& perm) const {
  const int f = dimension();
  std::vector<mpq_class> out(static_cast<std::size_t>(f) * f);
  const std::vector<int> word = permutation_word(perm);
  for (int col = 0; col < f; ++col) {
    std::vector<mpq_class> v(f);
    v[col] = 1;
    for (int j : word) apply_simple(j, v);
    for (int row = 0; row < f; ++row) out[static_cast<std::size_t>(row) * f + col] = v[row];
  }
  return out;
}

}  // namespace brauer
