#include "brauer/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "brauer/error.hpp"

namespace brauer {

BlockKey BlockKey::extended(int n) const {
  if (n <= window) return *this;
  BlockKey k = *this;
  for (int i = window; i < n; ++i) {
    const long e = scale * ShiftedPoint::tail_entry(i, delta);
    k.abs_multiset.push_back(std::labs(e));
    if (e < 0) k.neg_parity ^= 1;
    if (e == 0) k.has_zero = true;
  }
  std::sort(k.abs_multiset.begin(), k.abs_multiset.end());
  k.window = n;
  return k;
}

BlockKey orbit_key(const ShiftedPoint& x, int window) {
  const int n = std::max(window, std::max(x.window(), x.canonical_window()));
  BlockKey k;
  k.delta = x.delta();
  k.window = n;
  k.abs_multiset.reserve(n);
  for (int i = 0; i < n; ++i) {
    const long e = x.at(i);
    k.abs_multiset.push_back(std::labs(e));
    if (e < 0) k.neg_parity ^= 1;
    if (e == 0) k.has_zero = true;
  }
  std::sort(k.abs_multiset.begin(), k.abs_multiset.end());
  return k;
}

BlockKey block_key(const Weight& lambda, long delta, int window) { return orbit_key(shift(lambda, delta), window); }

bool same_orbit(const BlockKey& a, const BlockKey& b) {
  if (a.delta != b.delta || a.scale != b.scale) {
    throw Error(ErrorCode::InvalidArgument, "orbit keys for different delta");
  }
  const int n = std::max(a.window, b.window);
  const BlockKey x = a.extended(n);
  const BlockKey y = b.extended(n);
  if (x.abs_multiset != y.abs_multiset) return false;
  return x.has_zero || x.neg_parity == y.neg_parity;
}

bool same_orbit(const Weight& lambda, const Weight& mu, long delta) {
  return same_orbit(block_key(lambda, delta), block_key(mu, delta));
}

bool same_block(const Partition& lambda, const Partition& mu, long delta) {
  require_nonzero_delta(delta);
  return same_orbit(Weight(transpose(lambda)), Weight(transpose(mu)), delta);
}

std::vector<Partition> enumerate_orbit(const ShiftedPoint& x, int max_degree) {
  const BlockKey key = orbit_key(x);
  std::vector<Partition> members;
  for (int d = 0; d <= max_degree; ++d) {
    for (Partition& p : partitions_of(d)) {
      if (same_orbit(key, block_key(p, x.delta()))) members.push_back(std::move(p));
    }
  }
  return members;
}

BlockSet enumerate_block(const Partition& lambda, long delta, int max_degree) {
  require_nonzero_delta(delta);
  BlockSet result;
  result.delta = delta;
  result.root = Weight(lambda);
  result.degree_bound = max_degree;
  result.members = enumerate_orbit(shift(lambda, delta), max_degree);
  return result;
}

std::vector<Partition> supp(const Partition& lambda) {
  std::vector<Partition> out = addable(lambda);
  std::vector<Partition> down = removable(lambda);
  out.insert(out.end(), down.begin(), down.end());
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::map<Partition, int> supp2(const Partition& lambda) {
  std::map<Partition, int> out;
  for (const Partition& mid : supp(lambda)) {
    for (const Partition& p : supp(mid)) ++out[p];
  }
  return out;
}

namespace {

int count_in_block(const std::vector<Partition>& candidates, const BlockKey& key, long delta) {
  int n = 0;
  for (const Partition& p : candidates) {
    if (same_orbit(key, block_key(p, delta))) ++n;
  }
  return n;
}

bool in_supp(const Partition& target, const Partition& of) {
  const auto s = supp(of);
  return std::find(s.begin(), s.end(), target) != s.end();
}

}  // namespace

bool translation_equivalent(const Partition& lambda, const Partition& lambda_prime, long delta) {
  require_nonzero_delta(delta);
  if (!in_supp(lambda_prime, lambda)) {
    throw Error(ErrorCode::NotAdjacent, to_string(lambda_prime) + " is not in supp(" + to_string(lambda) + ")");
  }
  return count_in_block(supp(lambda), block_key(lambda_prime, delta), delta) == 1 &&
         count_in_block(supp(lambda_prime), block_key(lambda, delta), delta) == 1;
}

bool separates(const Partition& lambda_prime, const Partition& lower, const Partition& upper, long delta) {
  require_nonzero_delta(delta);
  if (!in_supp(lambda_prime, lower) || !in_supp(lambda_prime, upper)) return false;
  const BlockKey prime_key = block_key(lambda_prime, delta);
  if (count_in_block(supp(lower), prime_key, delta) != 1) return false;
  if (count_in_block(supp(upper), prime_key, delta) != 1) return false;
  const BlockKey lower_key = block_key(lower, delta);
  std::vector<Partition> hits;
  for (const Partition& p : supp(lambda_prime)) {
    if (same_orbit(lower_key, block_key(p, delta))) hits.push_back(p);
  }
  std::vector<Partition> expected{lower, upper};
  std::sort(hits.begin(), hits.end());
  std::sort(expected.begin(), expected.end());
  return hits == expected;
}

namespace {

std::vector<long> doubled_over(const Partition& p, long delta, int window) {
  return shift(p, delta).extended(window).doubled();
}

}  // namespace

std::vector<Partition> translation_chain(const Partition& lambda, const Partition& mu, long delta) {
  require_nonzero_delta(delta);
  if (!same_facet(lambda, mu, delta)) {
    throw Error(ErrorCode::DifferentFacet, to_string(lambda) + " and " + to_string(mu) + " lie in different facets");
  }
  if (lambda == mu) return {lambda};
  const int window = std::max(shift(lambda, delta).window(), shift(mu, delta).window()) + 1;
  const FacetSignature target = facet_signature(std::span<const long>(doubled_over(lambda, delta, window)));

  // Breadth-first search inside a box around the two endpoints, widening the
  // box if the facet bends out of it.
  for (int slack = 0; slack <= 4; ++slack) {
    std::vector<int> lo(window), hi(window);
    for (int i = 0; i < window; ++i) {
      lo[i] = std::max(0, std::min(lambda[i], mu[i]) - slack);
      hi[i] = std::max(lambda[i], mu[i]) + slack;
    }
    std::map<Partition, Partition> parent;
    std::deque<Partition> queue{lambda};
    parent.emplace(lambda, lambda);
    while (!queue.empty()) {
      const Partition cur = queue.front();
      queue.pop_front();
      if (cur == mu) {
        std::vector<Partition> chain{mu};
        for (Partition p = mu; !(p == lambda);) {
          p = parent.at(p);
          chain.push_back(p);
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      const std::vector<long> x = doubled_over(cur, delta, window);
      const FacetSignature sig = facet_signature(std::span<const long>(x));
      std::vector<std::vector<int>> moves;
      for (const FacetSlot& slot : sig.slots) {
        if (const auto* s = std::get_if<Singleton>(&slot)) {
          for (int step : {1, -1}) {
            std::vector<int> delta_vec(window, 0);
            delta_vec[s->index - 1] = step;
            moves.push_back(std::move(delta_vec));
          }
        } else {
          const auto& d = std::get<Doubleton>(slot);
          for (int step : {1, -1}) {
            std::vector<int> delta_vec(window, 0);
            delta_vec[d.first - 1] = step;
            delta_vec[d.second - 1] = -step;
            moves.push_back(std::move(delta_vec));
          }
        }
      }
      for (const auto& mv : moves) {
        std::vector<int> parts(window);
        bool ok = true;
        for (int i = 0; i < window && ok; ++i) {
          parts[i] = cur[i] + mv[i];
          ok = parts[i] >= lo[i] && parts[i] <= hi[i];
          if (i > 0 && parts[i] > parts[i - 1]) ok = false;
        }
        if (!ok) continue;
        Partition next(parts);
        if (parent.count(next)) continue;
        const std::vector<long> y = doubled_over(next, delta, window);
        if (facet_signature(std::span<const long>(y)) != target) continue;
        parent.emplace(next, cur);
        queue.push_back(std::move(next));
      }
    }
  }
  throw Error(ErrorCode::DifferentFacet, "no chain found between " + to_string(lambda) + " and " + to_string(mu));
}

Partition canonical_negative_rep(const Partition& lambda, long delta) {
  if (delta >= 0) throw Error(ErrorCode::InvalidArgument, "canonical_negative_rep needs delta < 0");
  const bool even = delta % 2 == 0;
  const int m = static_cast<int>(even ? -delta / 2 : (1 - delta) / 2);
  const int s = singularity_degree(lambda, delta);
  if (s > m) {
    throw Error(ErrorCode::TooSingular, to_string(lambda) + " is " + std::to_string(s) + "-singular, more than " +
                                            std::to_string(m));
  }
  const int window = std::max(shift(lambda, delta).window(), m + 1);
  const BlockKey key = block_key(lambda, delta, window);

  // The representative's tail (from position m) contributes the moduli
  // 0,2,4,... (delta even) or 1,3,5,... (delta odd); whatever remains
  // are the first m entries.
  std::multiset<long> moduli(key.abs_multiset.begin(), key.abs_multiset.end());
  for (int i = 0; i < window - m; ++i) {
    const long value = even ? 2L * i : 2L * i + 1;
    auto it = moduli.find(value);
    if (it == moduli.end()) throw Error(ErrorCode::TooSingular, "block of " + to_string(lambda) + " has no such representative");
    moduli.erase(it);
  }
  std::vector<long> head(moduli.rbegin(), moduli.rend());
  std::vector<long> doubled(head.begin(), head.end());
  for (int i = m; i < window; ++i) doubled.push_back(ShiftedPoint::tail_entry(i, delta));
  if (!even) {
    int negatives = 0;
    for (long e : doubled) negatives += e < 0;
    if ((negatives & 1) != key.neg_parity) doubled[m] = -doubled[m];
  }
  const Weight w = unshift(ShiftedPoint(doubled, delta));
  if (!w.dominant()) throw Error(ErrorCode::TooSingular, "block of " + to_string(lambda) + " has no such representative");
  return w.to_partition();
}

}  // namespace brauer
