#include <algorithm>

#include "brauer/error.hpp"
#include "brauer/graphs.hpp"
#include "brauer/kl.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

int out_degree(const ColouredDigraph& g, int v) {
  return static_cast<int>(std::count_if(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.source == v; }));
}

int sources(const ColouredDigraph& g) {
  int count = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const bool has_in = std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.target == static_cast<int>(v); });
    count += !has_in;
  }
  return count;
}

}  // namespace

TEST_CASE("mbs graph") {
  const ColouredDigraph small = mbs_graph(Partition{}, 1, 8);
  CHECK(small.has_edge(small.index_of(Partition{}), small.index_of(Partition{2, 2})));
  const ColouredDigraph trivial = mbs_graph(Partition{}, 1, 0);
  CHECK(trivial.vertices.size() == 1);
  CHECK(trivial.edges.empty());
  const ColouredDigraph g = mbs_graph(Partition{}, 1, 16);
  CHECK(g.vertices.size() == 18);
  CHECK(out_degree(g, g.index_of(Partition{})) == 1);
  CHECK_FALSE(g.has_edge(g.index_of(Partition{}), g.index_of(Partition{4, 4, 4, 4})));
  CHECK(sources(g) == 1);
}

TEST_CASE("orbit graph") {
  const ColouredDigraph g = orbit_graph(Partition{}, 1, 16);
  CHECK(g.vertices.size() == 18);
  CHECK(g.coloured());
  CHECK(orbit_graph(Partition{}, 1, 0).vertices.size() == 1);
  const int root = g.index_of(Partition{});
  REQUIRE(g.root.has_value());
  CHECK(*g.root == root);
  std::vector<Partition> outs;
  for (const GraphEdge& e : g.edges) {
    if (e.source == root) outs.push_back(g.vertices[e.target]);
  }
  CHECK(outs == std::vector<Partition>{Partition{2, 2}});
  CHECK(sources(g) == 1);
}

TEST_CASE("truncations embed") {
  const ColouredDigraph big = orbit_graph(Partition{}, 1, 16);
  const ColouredDigraph small = orbit_graph(Partition{}, 1, 12);
  for (const Partition& v : small.vertices) REQUIRE(big.index_of(v) >= 0);
  for (std::size_t a = 0; a < small.vertices.size(); ++a) {
    for (std::size_t b = 0; b < small.vertices.size(); ++b) {
      REQUIRE(small.has_edge(a, b) == big.has_edge(big.index_of(small.vertices[a]), big.index_of(small.vertices[b])));
    }
  }
}

TEST_CASE("regularisation") {
  const std::vector<long> raw{9, 8, 7, 0, -1, -2, -7, -9, -11};
  CHECK(regularise(raw) == std::vector<long>{8, 0, -1, -2, -11});
  const std::vector<long> regular{5, 3, -1, -4};
  CHECK(regularise(regular) == regular);
  const ShiftedPoint r = regularise(shift(Partition{}, -2));
  CHECK(r.at(0) == 0);
  CHECK(r.at(1) == -4);
  CHECK(r.at(2) == -6);
  CHECK(singularity_degree(r) == 0);
}

TEST_CASE("par-e graph") {
  const ColouredDigraph g = par_e_graph(12);
  auto idx = [&](std::initializer_list<int> p) { return g.index_of(Partition(p)); };
  CHECK(g.has_edge(idx({}), idx({2, 1})));
  CHECK(g.has_edge(idx({2, 1}), idx({3, 1})));
  CHECK(g.has_edge(idx({4, 3}), idx({4, 3, 2, 1})));
  CHECK_FALSE(g.has_edge(idx({3, 2}), idx({3, 2, 2, 1})));  // not strict
  for (const Partition& p : g.vertices) {
    REQUIRE(p.length() % 2 == 0);
    for (int i = 0; i + 1 < p.length(); ++i) REQUIRE(p[i] > p[i + 1]);
  }
  CHECK(sources(g) == 1);
}

TEST_CASE("phi") {
  CHECK(phi(ShiftedPoint({12, 10, 6, 2, -4, -8, -14, -16}, 2)) == Partition({6, 5, 3, 1}));
  CHECK(phi(par_e_root()) == Partition{});
  CHECK(phi(ShiftedPoint({4, 2, -6, -8}, 2)) == Partition({2, 1}));
  CHECK_THROWS_AS(phi(shift(Partition{}, 1)), Error);
  for (const Partition& p : par_e_graph(14).vertices) REQUIRE(phi(phi_inverse(p)) == p);
}

TEST_CASE("par-e rules against the cover relation") {
  const ColouredDigraph g = par_e_graph(14);
  std::vector<Partition> weights;
  for (const Partition& p : g.vertices) weights.push_back(unshift(phi_inverse(p)).to_partition());
  const auto cover = cover_edges(weights);
  CHECK(cover.size() == g.edges.size());
  for (auto [a, b] : cover) REQUIRE(g.has_edge(a, b));
}

TEST_CASE("edge colours") {
  const ShiftedPoint a = shift(Partition{}, 1);
  const ShiftedPoint b = shift(Partition{2, 2}, 1);
  const ShiftedPoint c = shift(Partition{3, 2, 1}, 1);
  CHECK(edge_colour_key(a, b) == edge_colour_key(b, a));
  CHECK_FALSE(same_orbit(edge_colour_key(a, b), edge_colour_key(b, c)));
  CHECK_THROWS_AS(edge_colour_key(a, c), Error);
  CHECK_THROWS_AS(edge_colour_key(shift(Partition{2}, 1), a), Error);
  // parallel edges used by the KL recursion share a colour
  const KLTable t = kl_polynomials(1, 12);
  int checked = 0;
  for (const auto& [nu, mu] : t.descent) {
    for (const Partition& lambda : t.weights) {
      const Weight k = kappa(lambda, nu, mu, 1);
      if (!k.dominant()) continue;
      REQUIRE(same_orbit(edge_colour_key(shift(k, 1), shift(lambda, 1)), edge_colour_key(shift(mu, 1), shift(nu, 1))));
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("isomorphism search") {
  const ColouredDigraph m = mbs_graph(Partition{}, 1, 16);
  const ColouredDigraph o = orbit_graph(Partition{}, 1, 16);
  const auto self = check_isomorphism(o, o);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(o, o, *self));
  const auto iso = check_isomorphism(m, o);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(m, o, *iso));
  CHECK_FALSE(check_isomorphism(o, orbit_graph(Partition{}, 1, 14)).has_value());
  // reversing one edge breaks it
  ColouredDigraph broken = o;
  std::swap(broken.edges.back().source, broken.edges.back().target);
  CHECK_FALSE(check_isomorphism(o, broken).has_value());
}

TEST_CASE("regularisation preserves the graph") {
  for (const Partition& p : {Partition{2}, Partition{3, 1}, Partition{1, 1}}) {
    const ShiftedPoint v = shift(p, 2);
    if (singularity_degree(v) == 0) continue;
    const long c = regularisation_degree_shift(v);
    const ColouredDigraph g = orbit_graph(v, p.degree() + 8);
    const ColouredDigraph h = orbit_graph(regularise(v), static_cast<int>(p.degree() + 8 - c));
    REQUIRE(g.vertices.size() == h.vertices.size());
    CHECK(check_isomorphism(g, h).has_value());
  }
}

TEST_CASE("cover edges") {
  const std::vector<Partition> w{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}};
  const auto e = cover_edges(w);
  CHECK(std::find(e.begin(), e.end(), std::pair<int, int>{0, 1}) != e.end());
  CHECK(std::find(e.begin(), e.end(), std::pair<int, int>{0, 4}) == e.end());
  CHECK(e.size() == 5);
}
