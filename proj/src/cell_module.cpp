#include "brauer/cell_module.hpp"

#include <algorithm>

#include "brauer/bareiss.hpp"
#include "brauer/error.hpp"
#include "brauer/parallel.hpp"

namespace brauer {

namespace {

void build_rows(int n, int arcs_left, std::vector<char>& used, PartialOneRow& current, std::vector<PartialOneRow>& out) {
  int first = 0;
  while (first < n && used[first]) ++first;
  const int unused = static_cast<int>(std::count(used.begin(), used.end(), 0));
  if (first == n) {
    if (arcs_left == 0) out.push_back(current);
    return;
  }
  if (unused < 2 * arcs_left) return;
  used[first] = 1;
  if (arcs_left > 0) {
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current.arcs.emplace_back(first, j);
      build_rows(n, arcs_left - 1, used, current, out);
      current.arcs.pop_back();
      used[j] = 0;
    }
  }
  if (unused - 1 >= 2 * arcs_left) {
    current.free_nodes.push_back(first);
    build_rows(n, arcs_left, used, current, out);
    current.free_nodes.pop_back();
  }
  used[first] = 0;
}

int arcs_for(int n, const Partition& lambda) {
  const int rest = n - lambda.degree();
  if (n < 0 || rest < 0 || rest % 2 != 0) {
    throw Error(ErrorCode::BadDegree, to_string(lambda) + " does not label a cell module of B_" + std::to_string(n));
  }
  return rest / 2;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = static_cast<int>(k);
  return q;
}

}  // namespace

Diagram PartialOneRow::half() const {
  const int m = static_cast<int>(free_nodes.size());
  std::vector<int> p(n + m);
  for (auto [i, j] : arcs) {
    p[i] = j;
    p[j] = i;
  }
  for (int k = 0; k < m; ++k) {
    p[free_nodes[k]] = n + k;
    p[n + k] = free_nodes[k];
  }
  return Diagram(n, m, std::move(p));
}

std::string PartialOneRow::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(arcs[k].first + 1) + "-" + std::to_string(arcs[k].second + 1);
  }
  return out + "}";
}

std::vector<PartialOneRow> partial_one_rows(int n, int t) {
  if (n < 0 || t < 0 || 2 * t > n) throw Error(ErrorCode::BadDegree, "no partial one-row diagrams with these sizes");
  std::vector<PartialOneRow> out;
  std::vector<char> used(n, 0);
  PartialOneRow current;
  current.n = n;
  build_rows(n, t, used, current, out);
  return out;
}

long long count_partial_one_rows(int n, int t) {
  if (n < 0 || t < 0 || 2 * t > n) return 0;
  long long c = 1;
  for (int k = 1; k <= 2 * t; ++k) c = c * (n - 2 * t + k) / k;
  for (int k = 2 * t - 1; k > 1; k -= 2) c *= k;
  return c;
}

long long cell_dimension(int n, const Partition& lambda) {
  return count_partial_one_rows(n, arcs_for(n, lambda)) * count_standard_tableaux(lambda);
}

bool GramMatrix::symmetric() const {
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

CellModule::CellModule(int n, const Partition& lambda, const mpq_class& delta)
    : n_(n), t_(arcs_for(n, lambda)), lambda_(lambda), delta_(delta), rows_(partial_one_rows(n, t_)), specht_(lambda) {
  if (delta_ == 0) throw Error(ErrorCode::ZeroDelta, "delta must be non-zero");
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    halves_.push_back(rows_[a].half());
    row_index_.emplace(rows_[a].arcs, static_cast<int>(a));
  }
}

std::vector<CellBasisVector> CellModule::basis() const {
  std::vector<CellBasisVector> out;
  for (const PartialOneRow& w : rows_) {
    for (const Tableau& tab : specht_.tableaux()) out.push_back({w, tab});
  }
  return out;
}

int CellModule::index_of(const PartialOneRow& w) const {
  auto it = row_index_.find(w.arcs);
  return it == row_index_.end() ? -1 : it->second;
}

std::vector<mpq_class> CellModule::act(const Diagram& d, const std::vector<mpq_class>& v) const {
  if (d.top() != n_ || d.bottom() != n_) throw Error(ErrorCode::SizeMismatch, "diagram size does not match the module");
  if (static_cast<int>(v.size()) != dimension()) throw Error(ErrorCode::SizeMismatch, "vector length does not match the module");
  const int f = specht_.dimension();
  const int m = n_ - 2 * t_;
  std::vector<mpq_class> out(v.size());
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    std::vector<mpq_class> x(v.begin() + a * f, v.begin() + (a + 1) * f);
    if (std::all_of(x.begin(), x.end(), [](const mpq_class& q) { return q == 0; })) continue;
    const Composite r = compose(d, halves_[a]);
    if (r.diagram.propagating_lines() < m) continue;
    // Read off the new one-row part and the permutation of the free strands.
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> perm;
    const std::vector<int>& p = r.diagram.partner();
    for (int i = 0; i < n_; ++i) {
      if (p[i] >= n_) perm.push_back(p[i] - n_);
      else if (i < p[i]) arcs.emplace_back(i, p[i]);
    }
    const int target = row_index_.at(arcs);
    specht_.apply_permutation(inverse(perm), x);
    mpq_class scale = 1;
    for (int k = 0; k < r.loops; ++k) scale *= delta_;
    for (int k = 0; k < f; ++k) out[static_cast<std::size_t>(target) * f + k] += scale * x[k];
  }
  return out;
}

std::vector<mpq_class> CellModule::act(const Diagram& d, int basis_index) const {
  std::vector<mpq_class> v(dimension());
  v.at(basis_index) = 1;
  return act(d, v);
}

CellModule::Pairing CellModule::pair(int a, int b) const {
  const Composite r = compose(halves_[a].flip(), halves_[b]);
  const int m = n_ - 2 * t_;
  Pairing out;
  if (r.diagram.propagating_lines() < m) return out;
  out.loops = r.loops;
  out.perm.resize(m);
  for (int j = 0; j < m; ++j) out.perm[j] = r.diagram.partner()[j] - m;
  return out;
}

std::vector<mpq_class> CellModule::diagram_matrix(const std::vector<int>& perm) const {
  return specht_.matrix(inverse(perm));
}

mpq_class CellModule::form(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) const {
  if (static_cast<int>(u.size()) != dimension() || static_cast<int>(v.size()) != dimension()) {
    throw Error(ErrorCode::SizeMismatch, "vector length does not match the module");
  }
  const int f = specht_.dimension();
  const std::vector<mpq_class>& g = specht_.form_weights();
  mpq_class total = 0;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Pairing pr = pair(static_cast<int>(a), static_cast<int>(b));
      if (pr.loops < 0) continue;
      std::vector<mpq_class> y(v.begin() + b * f, v.begin() + (b + 1) * f);
      specht_.apply_permutation(inverse(pr.perm), y);
      mpq_class s = 0;
      for (int k = 0; k < f; ++k) s += u[a * f + k] * g[k] * y[k];
      for (int k = 0; k < pr.loops; ++k) s *= delta_;
      total += s;
    }
  }
  return total;
}

GramMatrix CellModule::gram() const {
  const int rows = static_cast<int>(rows_.size());
  const int f = specht_.dimension();
  GramMatrix out;
  out.dim = dimension();
  out.delta = delta_;
  out.entries.assign(static_cast<std::size_t>(out.dim) * out.dim, mpq_class(0));
  if (out.dim == 0) return out;

  std::vector<Pairing> pairs(static_cast<std::size_t>(rows) * rows);
  parallel_for(rows, [&](std::size_t a) {
    for (int b = 0; b < rows; ++b) pairs[a * rows + b] = pair(static_cast<int>(a), b);
  });
  std::map<std::vector<int>, int> perm_index;
  std::vector<std::vector<int>> perms;
  int max_loops = 0;
  for (const Pairing& pr : pairs) {
    if (pr.loops < 0) continue;
    max_loops = std::max(max_loops, pr.loops);
    if (perm_index.emplace(pr.perm, static_cast<int>(perms.size())).second) perms.push_back(pr.perm);
  }
  std::vector<std::vector<mpq_class>> mats(perms.size());
  parallel_for(perms.size(), [&](std::size_t k) { mats[k] = diagram_matrix(perms[k]); });
  std::vector<mpq_class> powers(max_loops + 1, mpq_class(1));
  for (int k = 1; k <= max_loops; ++k) powers[k] = powers[k - 1] * delta_;

  const std::vector<mpq_class>& g = specht_.form_weights();
  parallel_for(rows, [&](std::size_t a) {
    for (int b = 0; b < rows; ++b) {
      const Pairing& pr = pairs[a * rows + b];
      if (pr.loops < 0) continue;
      const std::vector<mpq_class>& mat = mats[perm_index.at(pr.perm)];
      for (int i = 0; i < f; ++i) {
        for (int j = 0; j < f; ++j) {
          const mpq_class& x = mat[static_cast<std::size_t>(i) * f + j];
          if (x == 0) continue;
          out.entries[(a * f + i) * out.dim + static_cast<std::size_t>(b) * f + j] = powers[pr.loops] * g[i] * x;
        }
      }
    }
  });
  return out;
}

GramMatrix gram_matrix(int n, const Partition& lambda, const mpq_class& delta) {
  return CellModule(n, lambda, delta).gram();
}

long simple_dim(int n, const Partition& lambda, const mpq_class& delta) {
  const GramMatrix g = gram_matrix(n, lambda, delta);
  return rank_rational(g.entries, g.dim, g.dim);
}

bool VerifyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

VerifyReport verify_block(int n, long delta, const BlockSet& block, const KLTable& predictions) {
  VerifyReport report;
  report.n = n;
  report.delta = delta;
  std::vector<Partition> labels;
  for (const Partition& w : block.members) {
    const int d = w.degree();
    if (d <= n && (n - d) % 2 == 0) labels.push_back(transpose(w));
  }
  std::sort(labels.begin(), labels.end(), label_less);
  for (const Partition& mu : labels) report.simple_dims.emplace(mu, simple_dim(n, mu, mpq_class(delta)));
  for (const Partition& lambda : labels) {
    VerifyEntry e;
    e.n = n;
    e.delta = delta;
    e.lambda = lambda;
    e.dim_delta = cell_dimension(n, lambda);
    for (const Partition& mu : labels) {
      const long long mult = predict_decomposition(predictions, lambda, mu);
      if (mult == 0) continue;
      e.multiplicities.emplace(mu, mult);
      e.predicted_sum += mult * report.simple_dims.at(mu);
    }
    e.pass = e.predicted_sum == e.dim_delta;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace brauer
