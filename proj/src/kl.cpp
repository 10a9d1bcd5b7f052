#include "brauer/kl.hpp"

#include <algorithm>
#include <cstdlib>

#include "brauer/blocks.hpp"
#include "brauer/error.hpp"

namespace brauer {

LaurentPoly KLTable::entry(const Partition& nu, const Partition& lambda) const {
  auto row = rows.find(nu);
  if (row == rows.end()) return {};
  auto it = row->second.find(lambda);
  return it == row->second.end() ? LaurentPoly{} : it->second;
}

namespace {

int sign_of(long x) { return (x > 0) - (x < 0); }

int common_window(std::initializer_list<const ShiftedPoint*> points) {
  int n = 0;
  for (const ShiftedPoint* p : points) n = std::max({n, p->window(), p->canonical_window()});
  return n;
}

void require_regular(const Partition& lambda, long delta) {
  if (!is_regular(lambda, delta)) throw Error(ErrorCode::NotRegular, to_string(lambda) + " is not regular for delta " + std::to_string(delta));
}

}  // namespace

int separating_hyperplanes(const ShiftedPoint& x, const ShiftedPoint& y) {
  const int n = common_window({&x, &y});
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sign_of(x.at(i) + x.at(j)) != sign_of(y.at(i) + y.at(j))) ++count;
    }
  }
  return count;
}

Partition orbit_root(const Partition& lambda, long delta) {
  require_regular(lambda, delta);
  const BlockKey key = block_key(lambda, delta);
  std::vector<long> x;
  for (std::size_t k = 0; k < key.abs_multiset.size(); ++k) x.push_back(k == 0 ? key.abs_multiset[0] : -key.abs_multiset[k]);
  if (!key.has_zero) {
    const int negatives = static_cast<int>(std::count_if(x.begin(), x.end(), [](long e) { return e < 0; }));
    if ((negatives & 1) != key.neg_parity) x[0] = -x[0];
  }
  return unshift(ShiftedPoint(x, delta)).to_partition();
}

std::vector<Partition> admissible_descents(const Partition& nu, long delta) {
  require_regular(nu, delta);
  const ShiftedPoint x = shift(nu, delta);
  const int n = common_window({&x});
  const std::vector<long> base = x.extended(n).doubled();
  std::vector<Partition> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (base[i] + base[j] <= 0) continue;
      std::vector<long> y = base;
      Reflection::minus(i + 1, j + 1).apply(y);
      const ShiftedPoint py(y, delta);
      if (!py.strictly_decreasing()) continue;
      if (separating_hyperplanes(x, py) != 1) continue;
      out.push_back(unshift(py).to_partition());
    }
  }
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

Weight kappa(const Partition& lambda, const Partition& nu, const Partition& mu, long delta) {
  const ShiftedPoint xn = shift(nu, delta);
  const ShiftedPoint xm = shift(mu, delta);
  const ShiftedPoint xl = shift(lambda, delta);
  if (singularity_degree(xn) != 0) throw Error(ErrorCode::NotRegular, to_string(nu) + " is not regular");
  const int n = common_window({&xn, &xm, &xl});

  std::vector<int> differ;
  for (int i = 0; i < n; ++i) {
    if (xn.at(i) != xm.at(i)) differ.push_back(i);
  }
  if (differ.size() != 2 || xm.at(differ[0]) != -xn.at(differ[1]) || xm.at(differ[1]) != -xn.at(differ[0])) {
    throw Error(ErrorCode::NotAdjacent, to_string(mu) + " is not a reflection of " + to_string(nu));
  }

  // w sends coordinate i of shift(nu) to coordinate target[i] with sign sign[i].
  std::vector<int> target(n, -1);
  std::vector<int> sign(n, 1);
  int zero_at = -1;
  int flips = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::labs(xl.at(j)) == std::labs(xn.at(i))) {
        target[i] = j;
        break;
      }
    }
    if (target[i] < 0) throw Error(ErrorCode::NotInOrbit, to_string(lambda) + " is not in the orbit of " + to_string(nu));
    if (xn.at(i) == 0) {
      zero_at = i;
    } else {
      sign[i] = sign_of(xl.at(target[i])) * sign_of(xn.at(i));
      if (sign[i] < 0) ++flips;
    }
  }
  if (zero_at >= 0) {
    sign[zero_at] = flips % 2 == 0 ? 1 : -1;
  } else if (flips % 2 != 0) {
    throw Error(ErrorCode::NotInOrbit, to_string(lambda) + " is not in the orbit of " + to_string(nu));
  }
  std::vector<long> y(n);
  for (int i = 0; i < n; ++i) y[target[i]] = sign[i] * xm.at(i);
  return unshift(ShiftedPoint(y, delta));
}

namespace {

// l(kappa) - l(lambda) for kappa and lambda related by one reflection, from
// the side of that reflection's hyperplane each lies on.
int length_step(const Weight& kappa_w, const Partition& lambda, long delta) {
  const ShiftedPoint k = shift(kappa_w, delta);
  const ShiftedPoint l = shift(lambda, delta);
  const int n = common_window({&k, &l});
  std::vector<int> differ;
  for (int i = 0; i < n; ++i) {
    if (k.at(i) != l.at(i)) differ.push_back(i);
  }
  if (differ.size() != 2) throw Error(ErrorCode::NotAdjacent, "kappa and lambda are not related by a reflection");
  const int i = differ[0];
  const int j = differ[1];
  bool kappa_lower;
  if (l.at(i) == -k.at(j) && l.at(j) == -k.at(i)) {
    kappa_lower = k.at(i) + k.at(j) < 0;
  } else {
    kappa_lower = k.at(i) > k.at(j);
  }
  return kappa_lower ? -1 : 1;
}

}  // namespace

KLRow kl_row_via(const KLTable& table, const Partition& nu, const Partition& mu, KLOptions options) {
  const long delta = table.delta;
  KLRow hat;
  for (const Partition& lambda : table.weights) {
    const Weight k = kappa(lambda, nu, mu, delta);
    if (k == Weight(lambda)) {
      throw Error(ErrorCode::InvalidArgument, "kappa equals lambda for nu=" + to_string(nu) + ", lambda=" + to_string(lambda));
    }
    const bool dominant = k.dominant();
    LaurentPoly first;
    int step;
    if (dominant) {
      const Partition kp = k.to_partition();
      first = table.entry(mu, kp);
      step = length(kp, delta) - length(lambda, delta);
      if (std::abs(step) != 1 || step != length_step(k, lambda, delta)) {
        throw Error(ErrorCode::InvalidArgument, "length difference is not +-1 at nu=" + to_string(nu));
      }
    } else {
      step = length_step(k, lambda, delta);
    }
    const LaurentPoly second = table.entry(mu, lambda).shifted(step);
    LaurentPoly value;
    if (options.project_first_term_only) value = first + second;
    else if (dominant) value = first + second;
    if (!value.is_zero()) hat.emplace(lambda, std::move(value));
  }

  KLRow row = hat;
  for (const auto& [lambda, value] : hat) {
    if (lambda == nu) continue;
    const long long c = value.constant_term();
    if (c == 0) continue;
    auto below = table.rows.find(lambda);
    if (below == table.rows.end()) throw Error(ErrorCode::InvalidArgument, "row " + to_string(lambda) + " is not available");
    for (const auto& [col, poly] : below->second) {
      row[col] -= c * poly;
      if (row[col].is_zero()) row.erase(col);
    }
  }
  return row;
}

KLTable kl_polynomials(long delta, int max_degree, const Partition& root, KLOptions options) {
  require_nonzero_delta(delta);
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "KL tables need delta >= 1");
  KLTable table;
  table.delta = delta;
  table.degree_bound = max_degree;
  table.root = orbit_root(root, delta);
  table.weights = enumerate_orbit(shift(table.root, delta), max_degree);
  for (const Partition& w : table.weights) table.lengths.emplace(w, length(w, delta));
  for (const Partition& nu : table.weights) {
    if (nu == table.root) {
      table.rows[nu].emplace(nu, LaurentPoly::constant(1));
      continue;
    }
    const std::vector<Partition> descents = admissible_descents(nu, delta);
    if (descents.empty()) throw Error(ErrorCode::NoDescent, "no descent below " + to_string(nu));
    table.descent.emplace(nu, descents.front());
    table.rows.emplace(nu, kl_row_via(table, nu, descents.front(), options));
  }
  return table;
}

long long predict_decomposition(const KLTable& table, const Partition& standard, const Partition& simple) {
  return table.entry(transpose(simple), transpose(standard)).at_one();
}

long long predict_decomposition(const Partition& standard, const Partition& simple, long delta) {
  require_nonzero_delta(delta);
  const Partition lw = transpose(standard);
  const Partition mw = transpose(simple);
  require_regular(lw, delta);
  require_regular(mw, delta);
  if (!same_orbit(lw, mw, delta)) {
    throw Error(ErrorCode::DifferentBlocks, to_string(standard) + " and " + to_string(simple) + " lie in different blocks");
  }
  const KLTable table = kl_polynomials(delta, std::max(lw.degree(), mw.degree()), lw);
  return predict_decomposition(table, standard, simple);
}

}  // namespace brauer
