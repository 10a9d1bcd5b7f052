#include "brauer/diagram.hpp"

#include <numeric>

#include "brauer/error.hpp"

namespace brauer {

Diagram::Diagram(int top, int bottom, std::vector<int> partner) : top_(top), bottom_(bottom), partner_(std::move(partner)) {
  const int total = top_ + bottom_;
  if (top_ < 0 || bottom_ < 0 || static_cast<int>(partner_.size()) != total) {
    throw Error(ErrorCode::InvalidArgument, "partner array has the wrong length");
  }
  for (int k = 0; k < total; ++k) {
    const int p = partner_[k];
    if (p < 0 || p >= total || p == k || partner_[p] != k) {
      throw Error(ErrorCode::InvalidArgument, "partner array is not a perfect matching");
    }
  }
}

Diagram Diagram::identity(int n) {
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + k;
    p[n + k] = k;
  }
  return Diagram(n, n, std::move(p));
}

Diagram Diagram::arc_pair(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorCode::InvalidArgument, "bad arc indices");
  Diagram d = identity(n);
  d.partner_[i] = j;
  d.partner_[j] = i;
  d.partner_[n + i] = n + j;
  d.partner_[n + j] = n + i;
  return d;
}

Diagram Diagram::transposition(int n, int i, int j) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm.at(i), perm.at(j));
  return permutation(perm);
}

Diagram Diagram::permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> p(2 * n);
  for (int k = 0; k < n; ++k) {
    p[k] = n + perm[k];
    p[n + perm[k]] = k;
  }
  return Diagram(n, n, std::move(p));
}

int Diagram::propagating_lines() const {
  int count = 0;
  for (int k = 0; k < top_; ++k) count += partner_[k] >= top_;
  return count;
}

Diagram Diagram::flip() const {
  const int total = top_ + bottom_;
  auto swap_side = [&](int k) { return k < top_ ? bottom_ + k : k - top_; };
  std::vector<int> p(total);
  for (int k = 0; k < total; ++k) p[swap_side(k)] = swap_side(partner_[k]);
  return Diagram(bottom_, top_, std::move(p));
}

std::string Diagram::to_string() const {
  auto name = [&](int k) { return k < top_ ? std::to_string(k + 1) : std::to_string(k - top_ + 1) + "'"; };
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < top_ + bottom_; ++k) {
    if (partner_[k] < k) continue;
    if (!first) out += ",";
    first = false;
    out += name(k) + "-" + name(partner_[k]);
  }
  return out + "}";
}

Composite compose(const Diagram& a, const Diagram& b) {
  if (a.bottom() != b.top()) {
    throw Error(ErrorCode::SizeMismatch, "cannot stack a diagram with " + std::to_string(a.bottom()) +
                                             " southern nodes on one with " + std::to_string(b.top()) + " northern nodes");
  }
  const int m = a.bottom();
  const int at = a.top();
  const int bt = b.top();
  const int bb = b.bottom();
  // Walk from each outer node through alternating middle links.  Middle node
  // k is a's southern k and b's northern k.
  std::vector<int> partner(at + bb, -1);
  std::vector<char> middle_seen(m, 0);
  auto walk = [&](bool in_a, int node) {
    // node is an index in the diagram (a or b) we are currently in.
    while (true) {
      const int next = in_a ? a.partner()[node] : b.partner()[node];
      if (in_a) {
        if (next < at) return next;  // reached a's northern side
        const int mid = next - at;
        middle_seen[mid] = 1;
        in_a = false;
        node = mid;  // b's northern mid
      } else {
        if (next >= bt) return at + (next - bt);  // reached b's southern side
        middle_seen[next] = 1;
        in_a = true;
        node = at + next;  // a's southern next
      }
    }
  };
  for (int k = 0; k < at; ++k) {
    if (partner[k] == -1) {
      const int end = walk(true, k);
      partner[k] = end;
      partner[end] = k;
    }
  }
  for (int k = 0; k < bb; ++k) {
    if (partner[at + k] == -1) {
      const int end = walk(false, bt + k);
      partner[at + k] = end;
      partner[end] = at + k;
    }
  }
  int loops = 0;
  for (int k = 0; k < m; ++k) {
    if (middle_seen[k]) continue;
    ++loops;
    int node = k;  // b's northern k; follow until we return
    do {
      middle_seen[node] = 1;
      const int via_b = b.partner()[node];  // stays in middle (b northern)
      middle_seen[via_b] = 1;
      node = a.partner()[at + via_b] - at;  // a's southern -> a's southern
    } while (node != k);
  }
  return {loops, Diagram(at, bb, std::move(partner))};
}

DiagramCombo::DiagramCombo(const Diagram& d, const mpq_class& c) { add(d, c); }

void DiagramCombo::add(const Diagram& d, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiagramCombo& DiagramCombo::operator+=(const DiagramCombo& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

DiagramCombo& DiagramCombo::operator-=(const DiagramCombo& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

DiagramCombo operator*(const mpq_class& c, const DiagramCombo& a) {
  DiagramCombo out;
  for (const auto& [d, x] : a.terms_) out.add(d, c * x);
  return out;
}

DiagramCombo multiply(const DiagramCombo& a, const DiagramCombo& b, const mpq_class& delta) {
  DiagramCombo out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      const Composite r = compose(da, db);
      mpq_class c = ca * cb;
      for (int k = 0; k < r.loops; ++k) c *= delta;
      out.add(r.diagram, c);
    }
  }
  return out;
}

DiagramCombo multiply(const Diagram& a, const Diagram& b, const mpq_class& delta) {
  return multiply(DiagramCombo(a), DiagramCombo(b), delta);
}

B2Idempotents b2_idempotents(const mpq_class& delta) {
  if (delta == 0) throw Error(ErrorCode::ZeroDelta, "delta must be non-zero");
  const DiagramCombo one(Diagram::identity(2));
  const DiagramCombo sigma(Diagram::transposition(2, 0, 1));
  const DiagramCombo x(Diagram::arc_pair(2, 0, 1));
  B2Idempotents out;
  out.e = mpq_class(1) / delta * x;
  out.minus = mpq_class(1, 2) * (one - sigma);
  out.plus = mpq_class(1, 2) * (one + sigma) - out.e;
  return out;
}

}  // namespace brauer
