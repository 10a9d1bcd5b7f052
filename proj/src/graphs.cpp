#include "brauer/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "brauer/error.hpp"

namespace brauer {

int ColouredDigraph::index_of(const Partition& p) const {
  auto it = std::find(vertices.begin(), vertices.end(), p);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

bool ColouredDigraph::has_edge(int source, int target) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const GraphEdge& e) { return e.source == source && e.target == target; });
}

bool ColouredDigraph::coloured() const {
  return std::all_of(edges.begin(), edges.end(), [](const GraphEdge& e) { return e.colour.has_value(); });
}

namespace {

std::optional<int> unique_source(const ColouredDigraph& g) {
  std::vector<int> indegree(g.vertices.size(), 0);
  for (const GraphEdge& e : g.edges) ++indegree[e.target];
  std::optional<int> root;
  for (std::size_t i = 0; i < indegree.size(); ++i) {
    if (indegree[i] == 0) {
      if (root) return std::nullopt;
      root = static_cast<int>(i);
    }
  }
  return root;
}

}  // namespace

ColouredDigraph ColouredDigraph::induced(const std::vector<int>& keep) const {
  ColouredDigraph out;
  out.kind = kind;
  out.delta = delta;
  out.degree_bound = degree_bound;
  std::vector<int> remap(vertices.size(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    remap[keep[k]] = static_cast<int>(k);
    out.vertices.push_back(vertices[keep[k]]);
  }
  for (const GraphEdge& e : edges) {
    if (remap[e.source] >= 0 && remap[e.target] >= 0) out.edges.push_back({remap[e.source], remap[e.target], e.colour});
  }
  out.root = unique_source(out);
  return out;
}

std::vector<std::pair<int, int>> cover_edges(const std::vector<Partition>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a].degree() < weights[b].degree(); });
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && weights[a].degree() < weights[b].degree() && weight_leq(weights[a], weights[b])) below[a][b] = 1;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int a : order) {
    for (int b : order) {
      if (!below[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (below[a][c] && below[c][b]) cover = false;
      }
      if (cover) edges.emplace_back(a, b);
    }
  }
  return edges;
}

ColouredDigraph mbs_graph(const Partition& lambda, long delta, int max_degree) {
  require_nonzero_delta(delta);
  ColouredDigraph g;
  g.kind = "mbs";
  g.delta = delta;
  g.degree_bound = max_degree;
  for (int d = lambda.degree() % 2; d <= max_degree; d += 2) {
    for (Partition& p : partitions_of(d)) {
      if (is_balanced(lambda, p, delta)) g.vertices.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(g.vertices.size());
  // sub[a][b]: vertex a is a proper balanced subpartition of vertex b.
  std::vector<std::vector<char>> sub(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Partition& mu = g.vertices[a];
      const Partition& tau = g.vertices[b];
      if (mu.degree() < tau.degree() && tau.contains(mu) && is_balanced_pair(mu, tau, delta)) sub[a][b] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!sub[a][b]) continue;
      bool maximal = true;
      for (int c = 0; c < n && maximal; ++c) {
        if (c != a && sub[c][b] && g.vertices[c].contains(g.vertices[a]) &&
            g.vertices[a].degree() < g.vertices[c].degree()) {
          maximal = false;
        }
      }
      if (maximal) g.edges.push_back({a, b, std::nullopt});
    }
  }
  g.root = unique_source(g);
  return g;
}

BlockKey edge_colour_key(const ShiftedPoint& x, const ShiftedPoint& y) {
  if (x.delta() != y.delta()) throw Error(ErrorCode::NotAdjacent, "points carry different delta");
  if (singularity_degree(x) != 0 || singularity_degree(y) != 0) {
    throw Error(ErrorCode::NotRegular, "edge colours are defined between regular points");
  }
  const int n = std::max({x.window(), y.window(), x.canonical_window(), y.canonical_window()});
  std::vector<int> differ;
  for (int i = 0; i < n; ++i) {
    if (x.at(i) != y.at(i)) differ.push_back(i);
  }
  if (differ.size() != 2 || y.at(differ[0]) != -x.at(differ[1]) || y.at(differ[1]) != -x.at(differ[0])) {
    throw Error(ErrorCode::NotAdjacent, x.display() + " and " + y.display() + " are not related by one reflection");
  }
  BlockKey k;
  k.delta = x.delta();
  k.scale = 2;
  k.window = n;
  for (int i = 0; i < n; ++i) {
    const long s = x.at(i) + y.at(i);
    k.abs_multiset.push_back(std::labs(s));
    if (s < 0) k.neg_parity ^= 1;
    if (s == 0) k.has_zero = true;
  }
  std::sort(k.abs_multiset.begin(), k.abs_multiset.end());
  return k;
}

ColouredDigraph orbit_graph(const ShiftedPoint& v, int max_degree) {
  ColouredDigraph g;
  g.kind = "orbit";
  g.delta = v.delta();
  g.degree_bound = max_degree;
  g.vertices = enumerate_orbit(v, max_degree);
  const bool regular = singularity_degree(v) == 0;
  for (const auto& [a, b] : cover_edges(g.vertices)) {
    std::optional<BlockKey> colour;
    if (regular) {
      try {
        colour = edge_colour_key(shift(g.vertices[a], v.delta()), shift(g.vertices[b], v.delta()));
      } catch (const Error&) {
        colour.reset();
      }
    }
    g.edges.push_back({a, b, colour});
  }
  g.root = unique_source(g);
  return g;
}

ColouredDigraph orbit_graph(const Partition& lambda, long delta, int max_degree) {
  return orbit_graph(shift(lambda, delta), max_degree);
}

std::vector<long> regularise(std::span<const long> values) {
  std::vector<long> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool shared = false;
    for (std::size_t j = 0; j < values.size() && !shared; ++j) {
      shared = j != i && std::labs(values[j]) == std::labs(values[i]);
    }
    if (!shared) out.push_back(values[i]);
  }
  return out;
}

ShiftedPoint regularise(const ShiftedPoint& v) {
  if (!v.strictly_decreasing()) throw Error(ErrorCode::NotInDominantChamber, "regularise needs a strictly decreasing point");
  const ShiftedPoint c = v.extended(v.canonical_window());
  const std::vector<long> kept = regularise(std::span<const long>(c.doubled()));
  const long dropped = static_cast<long>(c.window() - kept.size());
  return ShiftedPoint(kept, v.delta() + 2 * dropped).canonical();
}

long regularisation_degree_shift(const ShiftedPoint& v) {
  return unshift(v).degree() - unshift(regularise(v)).degree();
}

ShiftedPoint par_e_root() { return shift(Weight{}, 2); }

namespace {

bool strict_even(const Partition& p) {
  if (p.length() % 2 != 0) return false;
  for (int i = 0; i + 1 < p.length(); ++i) {
    if (p[i] <= p[i + 1]) return false;
  }
  return true;
}

}  // namespace

ColouredDigraph par_e_graph(int max_degree) {
  ColouredDigraph g;
  g.kind = "par-e";
  g.delta = 2;
  g.degree_bound = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    for (Partition& p : partitions_of(d)) {
      if (strict_even(p)) g.vertices.push_back(std::move(p));
    }
  }
  std::map<Partition, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], static_cast<int>(i));
  auto link = [&](int a, const std::vector<int>& parts) {
    auto it = index.find(Partition(parts));
    if (it != index.end()) g.edges.push_back({a, it->second, std::nullopt});
  };
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    const std::vector<int>& parts = g.vertices[a].parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == 0 || parts[i - 1] > parts[i] + 1) {
        std::vector<int> next = parts;
        ++next[i];
        link(static_cast<int>(a), next);
      }
    }
    if (parts.empty() || parts.back() >= 3) {
      std::vector<int> next = parts;
      next.push_back(2);
      next.push_back(1);
      link(static_cast<int>(a), next);
    }
  }
  g.root = unique_source(g);
  return g;
}

Partition phi(const ShiftedPoint& x) {
  const ShiftedPoint root = par_e_root();
  if (x.delta() != root.delta() || !same_orbit(orbit_key(x), orbit_key(root))) {
    throw Error(ErrorCode::WrongOrbit, x.display() + " is not in the orbit of (-1,-2,-3,...)");
  }
  if (!x.strictly_decreasing()) throw Error(ErrorCode::NotInDominantChamber, x.display() + " is not strictly decreasing");
  std::vector<int> parts;
  for (int i = 0; i < x.window(); ++i) {
    if (x.at(i) > 0) parts.push_back(static_cast<int>(x.at(i) / 2));
  }
  return Partition(parts);
}

ShiftedPoint phi_inverse(const Partition& p) {
  if (!strict_even(p)) throw Error(ErrorCode::InvalidArgument, to_string(p) + " is not strict with an even number of parts");
  std::vector<long> doubled;
  for (int part : p.parts()) doubled.push_back(2L * part);
  const int top = p.empty() ? 0 : p[0];
  for (int m = 1; m <= top; ++m) {
    if (std::find(p.parts().begin(), p.parts().end(), m) == p.parts().end()) doubled.push_back(-2L * m);
  }
  return ShiftedPoint(doubled, 2).canonical();
}

ShiftedPoint transport_alcove(const ShiftedPoint& x, const ShiftedPoint& target) {
  if (singularity_degree(x) != 0 || singularity_degree(target) != 0) {
    throw Error(ErrorCode::NotRegular, "alcove transport needs regular points");
  }
  if (!x.strictly_decreasing()) throw Error(ErrorCode::NotInDominantChamber, x.display() + " is not strictly decreasing");
  const int n = std::max(x.canonical_window(), target.canonical_window());
  const ShiftedPoint xe = x.extended(n);
  const BlockKey key = orbit_key(target, n);
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](int a, int b) { return std::labs(xe.at(a)) < std::labs(xe.at(b)); });
  std::vector<long> out(n);
  for (int k = 0; k < n; ++k) {
    const long sign = xe.at(rank[k]) < 0 ? -1 : 1;
    out[rank[k]] = sign * key.abs_multiset[k];
  }
  // The smallest modulus can take either sign without leaving the alcove;
  // pick the one that lands in target's orbit.
  if (!key.has_zero) {
    int negatives = 0;
    for (long e : out) negatives += e < 0;
    if ((negatives & 1) != key.neg_parity) out[rank[0]] = -out[rank[0]];
  }
  return ShiftedPoint(out, target.delta()).canonical();
}

namespace {

struct IsoState {
  const ColouredDigraph& g;
  const ColouredDigraph& h;
  int n;
  std::vector<std::vector<int>> g_adj;  // -2 none, else colour class (-1 uncoloured)
  std::vector<std::vector<int>> h_adj;
  std::vector<int> g_class;
  std::vector<int> h_class;
  bool use_colours;
  std::vector<int> map_gh;
  std::vector<int> map_hg;
  std::map<int, int> colour_gh;
  std::map<int, int> colour_hg;
  std::vector<int> order;
};

std::vector<std::vector<int>> adjacency(const ColouredDigraph& g, std::map<BlockKey, int>& classes) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, -2));
  for (const GraphEdge& e : g.edges) {
    int c = -1;
    if (e.colour) c = classes.emplace(*e.colour, static_cast<int>(classes.size())).first->second;
    adj[e.source][e.target] = c;
  }
  return adj;
}

// Colour refinement on the disjoint union so that class ids are shared.
void refine(IsoState& s) {
  const int n = s.n;
  std::vector<int> colour(2 * n, 0);
  auto neighbours = [&](int v, std::vector<std::pair<int, int>>& out_sig, std::vector<std::pair<int, int>>& in_sig) {
    const auto& adj = v < n ? s.g_adj : s.h_adj;
    const int base = v < n ? 0 : n;
    const int local = v - base;
    for (int u = 0; u < n; ++u) {
      if (adj[local][u] != -2) out_sig.emplace_back(colour[base + u], 0);
      if (adj[u][local] != -2) in_sig.emplace_back(colour[base + u], 1);
    }
    std::sort(out_sig.begin(), out_sig.end());
    std::sort(in_sig.begin(), in_sig.end());
  };
  for (int round = 0; round <= 2 * n; ++round) {
    std::map<std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>, int> ids;
    std::vector<int> next(2 * n);
    for (int v = 0; v < 2 * n; ++v) {
      std::vector<std::pair<int, int>> out_sig, in_sig;
      neighbours(v, out_sig, in_sig);
      auto key = std::make_tuple(colour[v], std::move(out_sig), std::move(in_sig));
      next[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  s.g_class.assign(colour.begin(), colour.begin() + n);
  s.h_class.assign(colour.begin() + n, colour.end());
}

bool colours_compatible(IsoState& s, int cg, int ch, std::vector<std::pair<int, int>>& added) {
  if (!s.use_colours) return true;
  auto a = s.colour_gh.find(cg);
  auto b = s.colour_hg.find(ch);
  if (a != s.colour_gh.end() || b != s.colour_hg.end()) {
    return a != s.colour_gh.end() && b != s.colour_hg.end() && a->second == ch && b->second == cg;
  }
  s.colour_gh.emplace(cg, ch);
  s.colour_hg.emplace(ch, cg);
  added.emplace_back(cg, ch);
  return true;
}

bool extend(IsoState& s, std::size_t depth) {
  if (depth == s.order.size()) return true;
  const int v = s.order[depth];
  for (int w = 0; w < s.n; ++w) {
    if (s.map_hg[w] != -1 || s.h_class[w] != s.g_class[v]) continue;
    std::vector<std::pair<int, int>> added;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const int u = s.order[k];
      const int x = s.map_gh[u];
      for (int dir = 0; dir < 2 && ok; ++dir) {
        const int eg = dir == 0 ? s.g_adj[v][u] : s.g_adj[u][v];
        const int eh = dir == 0 ? s.h_adj[w][x] : s.h_adj[x][w];
        if ((eg == -2) != (eh == -2)) ok = false;
        else if (eg != -2) ok = colours_compatible(s, eg, eh, added);
      }
    }
    if (ok) {
      s.map_gh[v] = w;
      s.map_hg[w] = v;
      if (extend(s, depth + 1)) return true;
      s.map_gh[v] = -1;
      s.map_hg[w] = -1;
    }
    for (const auto& [cg, ch] : added) {
      s.colour_gh.erase(cg);
      s.colour_hg.erase(ch);
    }
  }
  return false;
}

}  // namespace

std::optional<GraphIso> check_isomorphism(const ColouredDigraph& g, const ColouredDigraph& h) {
  if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return std::nullopt;
  std::map<BlockKey, int> g_classes, h_classes;
  IsoState s{g, h, static_cast<int>(g.vertices.size()), adjacency(g, g_classes), adjacency(h, h_classes), {}, {}, false, {}, {}, {}, {}, {}};
  s.use_colours = g.coloured() && h.coloured() && !g.edges.empty();
  if (s.use_colours && g_classes.size() != h_classes.size()) return std::nullopt;
  refine(s);
  std::vector<int> gh = s.g_class, hh = s.h_class;
  std::sort(gh.begin(), gh.end());
  std::sort(hh.begin(), hh.end());
  if (gh != hh) return std::nullopt;

  // Visit vertices breadth-first from the sources so every new vertex is
  // constrained by an already placed neighbour.
  std::vector<char> seen(s.n, 0);
  std::vector<std::vector<int>> undirected(s.n);
  for (const GraphEdge& e : g.edges) {
    undirected[e.source].push_back(e.target);
    undirected[e.target].push_back(e.source);
  }
  for (int start = 0; start < s.n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::size_t head = s.order.size();
    s.order.push_back(start);
    while (head < s.order.size()) {
      const int v = s.order[head++];
      for (int u : undirected[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          s.order.push_back(u);
        }
      }
    }
  }
  s.map_gh.assign(s.n, -1);
  s.map_hg.assign(s.n, -1);
  if (!extend(s, 0)) return std::nullopt;
  return GraphIso{s.map_gh};
}

bool is_isomorphism(const ColouredDigraph& g, const ColouredDigraph& h, const GraphIso& iso) {
  const std::size_t n = g.vertices.size();
  if (h.vertices.size() != n || iso.vertex_map.size() != n || g.edges.size() != h.edges.size()) return false;
  std::vector<char> hit(n, 0);
  for (int w : iso.vertex_map) {
    if (w < 0 || static_cast<std::size_t>(w) >= n || hit[w]) return false;
    hit[w] = 1;
  }
  std::map<BlockKey, BlockKey> forward, backward;
  const bool colours = g.coloured() && h.coloured();
  for (const GraphEdge& e : g.edges) {
    const int a = iso.vertex_map[e.source];
    const int b = iso.vertex_map[e.target];
    auto it = std::find_if(h.edges.begin(), h.edges.end(),
                           [&](const GraphEdge& f) { return f.source == a && f.target == b; });
    if (it == h.edges.end()) return false;
    if (colours) {
      auto [fi, fnew] = forward.emplace(*e.colour, *it->colour);
      auto [bi, bnew] = backward.emplace(*it->colour, *e.colour);
      if (fi->second != *it->colour || bi->second != *e.colour) return false;
    }
  }
  return true;
}

}  // namespace brauer
