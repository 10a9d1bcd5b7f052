#include "brauer/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

long Weight::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool Weight::dominant() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int next = i + 1 < entries_.size() ? entries_[i + 1] : 0;
    if (entries_[i] < next) return false;
  }
  return true;
}

Partition Weight::to_partition() const {
  if (!dominant()) throw Error(ErrorCode::NotInDominantChamber, "weight " + brauer::to_string(*this) + " is not dominant");
  return Partition(entries_);
}

std::string to_string(const Weight& w) {
  if (w.entries().empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < w.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.entries()[i]);
  }
  return out;
}

ShiftedPoint::ShiftedPoint(std::vector<long> doubled, long delta) : doubled_(std::move(doubled)), delta_(delta) {}

ShiftedPoint ShiftedPoint::extended(int n) const {
  if (n <= window()) return *this;
  std::vector<long> d = doubled_;
  for (int i = window(); i < n; ++i) d.push_back(tail_entry(i, delta_));
  return ShiftedPoint(std::move(d), delta_);
}

int ShiftedPoint::canonical_window() const {
  int n = 0;
  for (int i = 0; i < window(); ++i) {
    if (doubled_[i] != tail_entry(i, delta_)) n = i + 1;
  }
  long max_abs = 0;
  for (int i = 0; i < n; ++i) max_abs = std::max(max_abs, std::labs(doubled_[i]));
  while (!(2L * n + delta_ > max_abs)) {
    max_abs = std::max(max_abs, std::labs(at(n)));
    ++n;
  }
  return n;
}

ShiftedPoint ShiftedPoint::canonical() const {
  const int n = canonical_window();
  if (n >= window()) return extended(n);
  return ShiftedPoint(std::vector<long>(doubled_.begin(), doubled_.begin() + n), delta_);
}

bool ShiftedPoint::strictly_decreasing() const noexcept {
  for (int i = 0; i < window(); ++i) {
    if (at(i) <= at(i + 1)) return false;
  }
  return true;
}

std::string ShiftedPoint::display() const {
  std::ostringstream out;
  for (int i = 0; i < window(); ++i) {
    if (i) out << ',';
    const long d = doubled_[i];
    if (d % 2 == 0) out << d / 2;
    else out << (d < 0 ? "-" : "") << std::labs(d) / 2 << ".5";
  }
  return out.str();
}

bool operator==(const ShiftedPoint& a, const ShiftedPoint& b) {
  if (a.delta_ != b.delta_) return false;
  const int n = std::max(a.window(), b.window());
  for (int i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

ShiftedPoint shift(const Weight& lambda, long delta) {
  require_nonzero_delta(delta);
  std::vector<long> d;
  d.reserve(lambda.support());
  for (int i = 0; i < lambda.support(); ++i) d.push_back(2L * lambda[i] + ShiftedPoint::tail_entry(i, delta));
  return ShiftedPoint(std::move(d), delta).canonical();
}

Weight unshift(const ShiftedPoint& x) {
  std::vector<int> entries;
  entries.reserve(x.window());
  for (int i = 0; i < x.window(); ++i) {
    const long twice = x.at(i) - ShiftedPoint::tail_entry(i, x.delta());
    if (twice % 2 != 0) {
      throw Error(ErrorCode::ParityMismatch, "doubled entry " + std::to_string(x.at(i)) + " has the wrong parity for delta " +
                                                 std::to_string(x.delta()));
    }
    entries.push_back(static_cast<int>(twice / 2));
  }
  return Weight(std::move(entries));
}

int canonical_window(const Weight& lambda, long delta) { return shift(lambda, delta).window(); }

Reflection Reflection::plain(int i, int j) {
  if (i == j || i < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "reflection indices must be distinct and positive");
  return {Kind::Plain, i, j};
}

Reflection Reflection::minus(int i, int j) {
  if (i == j || i < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "reflection indices must be distinct and positive");
  return {Kind::Minus, i, j};
}

void Reflection::apply(std::vector<long>& x) const {
  long& a = x[i - 1];
  long& b = x[j - 1];
  if (kind == Kind::Plain) {
    std::swap(a, b);
  } else {
    const long old_a = a;
    a = -b;
    b = -old_a;
  }
}

std::string Reflection::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")" + (kind == Kind::Minus ? "-" : "");
}

Weight dot_action(std::span<const Reflection> word, const Weight& lambda, long delta) {
  ShiftedPoint x = shift(lambda, delta);
  int n = x.window();
  for (const Reflection& r : word) n = std::max({n, r.i, r.j});
  std::vector<long> v = x.extended(n).doubled();
  for (auto it = word.rbegin(); it != word.rend(); ++it) it->apply(v);
  return unshift(ShiftedPoint(std::move(v), delta));
}

int singularity_degree(const ShiftedPoint& x) {
  const ShiftedPoint c = x.extended(x.canonical_window());
  std::vector<long> moduli;
  for (int i = 0; i < c.window(); ++i) moduli.push_back(std::labs(c.at(i)));
  std::sort(moduli.begin(), moduli.end());
  int pairs = 0;
  for (std::size_t i = 0; i < moduli.size();) {
    std::size_t j = i;
    while (j < moduli.size() && moduli[j] == moduli[i]) ++j;
    const int run = static_cast<int>(j - i);
    pairs += run * (run - 1) / 2;
    i = j;
  }
  return pairs;
}

int singularity_degree(const Weight& lambda, long delta) { return singularity_degree(shift(lambda, delta)); }

bool is_regular(const Weight& lambda, long delta) { return singularity_degree(lambda, delta) == 0; }

std::string FacetSignature::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (k) out += ' ';
    if (const auto* s = std::get_if<Singleton>(&slots[k])) {
      out += std::to_string(s->index);
    } else {
      const auto& d = std::get<Doubleton>(slots[k]);
      out += "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
    }
  }
  return out;
}

FacetSignature facet_signature(std::span<const long> values) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] <= values[i + 1]) {
      throw Error(ErrorCode::NotInDominantChamber, "facet signatures are defined on strictly decreasing vectors");
    }
  }
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::labs(values[a]) < std::labs(values[b]); });
  FacetSignature sig;
  sig.window = static_cast<int>(values.size());
  for (std::size_t k = 0; k < order.size();) {
    if (k + 1 < order.size() && std::labs(values[order[k]]) == std::labs(values[order[k + 1]])) {
      const int a = std::min(order[k], order[k + 1]) + 1;
      const int b = std::max(order[k], order[k + 1]) + 1;
      sig.slots.push_back(Doubleton{a, b});
      k += 2;
    } else {
      sig.slots.push_back(Singleton{order[k] + 1});
      k += 1;
    }
  }
  return sig;
}

FacetSignature facet_signature(const ShiftedPoint& x) {
  if (!x.strictly_decreasing()) {
    throw Error(ErrorCode::NotInDominantChamber, "point " + x.display() + " is not strictly decreasing");
  }
  const ShiftedPoint c = x.extended(x.canonical_window());
  return facet_signature(std::span<const long>(c.doubled()));
}

bool same_facet(const Weight& lambda, const Weight& mu, long delta) {
  const ShiftedPoint x = shift(lambda, delta);
  const ShiftedPoint y = shift(mu, delta);
  const int n = std::max(x.window(), y.window());
  const ShiftedPoint xe = x.extended(n);
  const ShiftedPoint ye = y.extended(n);
  if (!xe.strictly_decreasing() || !ye.strictly_decreasing()) {
    throw Error(ErrorCode::NotInDominantChamber, "same_facet requires dominant weights");
  }
  return facet_signature(std::span<const long>(xe.doubled())) == facet_signature(std::span<const long>(ye.doubled()));
}

bool in_fundamental_alcove(const Weight& lambda, long delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "the fundamental alcove is defined for delta >= 1");
  if (!lambda.dominant()) throw Error(ErrorCode::NotInDominantChamber, "weight must be dominant");
  return lambda[0] + lambda[1] <= delta;
}

bool weight_leq(const Weight& x, const Weight& y) noexcept {
  const int n = std::max(x.support(), y.support());
  for (int i = 0; i < n; ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

int length(const ShiftedPoint& x) {
  if (singularity_degree(x) != 0) throw Error(ErrorCode::NotRegular, "length is defined for regular points only");
  const ShiftedPoint c = x.extended(x.canonical_window());
  int count = 0;
  for (int i = 0; i < c.window(); ++i) {
    for (int j = i + 1; j < c.window(); ++j) {
      if (c.at(i) + c.at(j) > 0) ++count;
    }
  }
  return count;
}

int length(const Weight& lambda, long delta) { return length(shift(lambda, delta)); }

}  // namespace brauer
