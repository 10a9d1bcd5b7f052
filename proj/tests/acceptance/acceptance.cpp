// One line per acceptance criterion: "criterion N: PASS|FAIL (seconds) detail".
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"
#include "brauer/error.hpp"
#include "brauer/graphs.hpp"
#include "brauer/io.hpp"
#include "brauer/kl.hpp"
#include "brauer/partition.hpp"
#include "brauer/weight.hpp"

using namespace brauer;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few failures; a check keeps running after a failure so
// the detail string reports how many things went wrong.
struct Checker {
  int failures = 0;
  std::ostringstream first;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 3) first << (failures ? "; " : "") << what;
    ++failures;
  }
  Outcome done(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, std::to_string(failures) + " failure(s): " + first.str()};
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Partition> labels(const std::vector<std::string>& text) {
  std::vector<Partition> out;
  for (const auto& t : text) out.push_back(parse_partition(t));
  return out;
}

// Row labels of the golden table, in its order.
std::vector<Partition> golden_rows(const std::string& csv) {
  std::vector<Partition> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(parse_partition(line.substr(0, line.find(','))));
  }
  return out;
}

Outcome kl_table_reproduction() {
  Checker c;
  const KLTable t = kl_polynomials(1, 16);
  c.expect(t.weights.size() == 18, "expected 18 weights, got " + std::to_string(t.weights.size()));
  const std::string golden = slurp(BRAUER_TEST_DATA "/kltable_delta1.csv");
  c.expect(!golden.empty(), "golden table missing");
  c.expect(kl_table_csv(t) == golden, "csv differs from the golden table");

  const std::vector<LaurentPoly> allowed = {LaurentPoly::constant(1), LaurentPoly::monomial(1), LaurentPoly::monomial(2)};
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    for (std::size_t j = 0; j < t.weights.size(); ++j) {
      const LaurentPoly p = t.entry(t.weights[i], t.weights[j]);
      if (j > i) c.expect(p.is_zero(), "entry above the diagonal");
      if (j == i) c.expect(p == LaurentPoly::constant(1), "diagonal entry is not 1");
      if (!p.is_zero()) c.expect(std::find(allowed.begin(), allowed.end(), p) != allowed.end(), "entry " + p.to_string() + " outside {1,v,v^2}");
    }
  }
  const std::vector<std::pair<std::string, std::string>> stated = {
      {"22", "0"}, {"4321", "321"}, {"53211", "4211"}, {"4^4", "0"}, {"552^3", "332"}};
  for (const auto& [nu, lambda] : stated) {
    const LaurentPoly want = LaurentPoly::monomial(nu == "22" ? 1 : 2);
    c.expect(t.entry(parse_partition(nu), parse_partition(lambda)) == want,
             "n_(" + nu + "),(" + lambda + ") is not " + want.to_string());
  }
  return c.done("18 weights, golden csv identical, entries in {0,1,v,v^2}");
}

Outcome block_enumeration() {
  Checker c;
  const BlockSet b = enumerate_block(Partition{}, 1, 16);
  std::vector<Partition> expected = golden_rows(slurp(BRAUER_TEST_DATA "/kltable_delta1.csv"));
  c.expect(expected.size() == 18, "golden table should have 18 rows");
  std::vector<Partition> got = b.members;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  c.expect(got == expected, "block of 0 differs from the table labels");
  const KLTable t = kl_polynomials(1, 16);
  std::vector<Partition> rows = t.weights;
  std::sort(rows.begin(), rows.end());
  c.expect(rows == got, "block members differ from the KL table rows");
  return c.done(std::to_string(got.size()) + " members");
}

Outcome criterion_equivalence() {
  Checker c;
  const std::vector<Partition> parts = partitions_up_to(10);
  long compared = 0;
  for (long delta = -5; delta <= 6; ++delta) {
    if (delta == 0) continue;
    std::vector<BlockKey> keys;
    keys.reserve(parts.size());
    for (const Partition& p : parts) keys.push_back(block_key(transpose(p), delta));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        ++compared;
        const bool balanced = is_balanced(parts[i], parts[j], delta);
        const bool orbit = same_orbit(keys[i], keys[j]);
        c.expect(balanced == orbit, "delta " + std::to_string(delta) + ": " + to_string(parts[i]) + " vs " +
                                        to_string(parts[j]));
      }
    }
  }
  return c.done(std::to_string(compared) + " pairs, 0 discrepancies");
}

Outcome alcove_contents() {
  Checker c;
  const std::vector<Partition> parts = partitions_up_to(12);
  const std::vector<std::pair<Partition, std::vector<std::string>>> alcoves = {
      {Partition{}, {"0", "1"}}, {Partition{2, 1}, {"21", "22"}}, {Partition{3, 2, 1}, {"311", "321"}}};
  for (const auto& [seed, expect] : alcoves) {
    std::set<Partition> found;
    for (const Partition& p : parts) {
      if (is_regular(p, 1) && same_facet(p, seed, 1)) found.insert(p);
    }
    const std::vector<Partition> e = labels(expect);
    c.expect(found == std::set<Partition>(e.begin(), e.end()), "alcove of " + to_string(seed) + " differs");
  }
  long checked = 0;
  for (long delta = 1; delta <= 4; ++delta) {
    for (const Partition& p : parts) {
      ++checked;
      c.expect(in_fundamental_alcove(p, delta) == same_facet(p, Partition{}, delta),
               "delta " + std::to_string(delta) + ": " + to_string(p));
    }
  }
  return c.done("three alcoves exact; formula agrees on " + std::to_string(checked) + " weights");
}

Outcome graph_isomorphisms() {
  Checker c;
  const ColouredDigraph m = mbs_graph(Partition{}, 1, 16);
  const ColouredDigraph o = orbit_graph(Partition{}, 1, 16);
  const auto iso = check_isomorphism(m, o);
  c.expect(iso && is_isomorphism(m, o, *iso), "mbs and orbit graphs are not isomorphic");

  // Transport each orbit vertex into the alcove of (-1,-2,...) and read off
  // its strict partition; that bijection must carry edges to edges.
  std::vector<Partition> images;
  int top = 0;
  for (const Partition& v : o.vertices) {
    images.push_back(phi(transport_alcove(shift(v, 1), par_e_root())));
    top = std::max(top, images.back().degree());
  }
  const ColouredDigraph pe = par_e_graph(top);
  std::vector<int> keep;
  for (const Partition& p : images) keep.push_back(pe.index_of(p));
  c.expect(std::find(keep.begin(), keep.end(), -1) == keep.end(), "transported vertex missing from par-e graph");
  if (c.failures == 0) {
    const ColouredDigraph sub = pe.induced(keep);
    GraphIso direct;
    for (std::size_t k = 0; k < keep.size(); ++k) direct.vertex_map.push_back(static_cast<int>(k));
    c.expect(is_isomorphism(o, sub, direct), "transport is not a graph isomorphism");
  }

  // Regularisation: 20 random singular weights per delta.
  std::mt19937 rng(20240611);
  int reg_checked = 0;
  for (long delta : {-2L, 1L, 2L}) {
    std::vector<Partition> singular;
    for (const Partition& p : partitions_up_to(7)) {
      if (singularity_degree(p, delta) > 0) singular.push_back(p);
    }
    std::shuffle(singular.begin(), singular.end(), rng);
    if (singular.size() > 20) singular.resize(20);
    for (const Partition& p : singular) {
      const ShiftedPoint v = shift(p, delta);
      const ShiftedPoint r = regularise(v);
      const long drop = regularisation_degree_shift(v);
      const int bound = p.degree() + 8;
      const ColouredDigraph g = orbit_graph(v, bound);
      const ColouredDigraph h = orbit_graph(r, static_cast<int>(bound - drop));
      const auto gi = check_isomorphism(g, h);
      c.expect(g.vertices.size() == h.vertices.size() && gi && is_isomorphism(g, h, *gi),
               "Reg changes the orbit graph of " + to_string(p) + " at delta " + std::to_string(delta));
      ++reg_checked;
    }
  }

  // Explicit edge rules against the brute-force cover relation.
  const ColouredDigraph big = par_e_graph(24);
  std::vector<Partition> weights;
  for (const Partition& p : big.vertices) weights.push_back(unshift(phi_inverse(p)).to_partition());
  const auto covers = cover_edges(weights);
  int mismatches = 0;
  for (const auto& [a, b] : covers) mismatches += !big.has_edge(a, b);
  mismatches += static_cast<int>(std::max(covers.size(), big.edges.size()) - std::min(covers.size(), big.edges.size()));
  c.expect(mismatches == 0, std::to_string(mismatches) + " par-e edge mismatches");

  return c.done(std::to_string(o.vertices.size()) + " vertices; " + std::to_string(reg_checked) +
                " Reg checks; par-e degree 24: " + std::to_string(big.vertices.size()) + " vertices, " +
                std::to_string(covers.size()) + " edges, 0 mismatches");
}

Outcome descent_independence() {
  Checker c;
  int multi = 0;
  int tables = 0;
  for (long delta : {1L, 2L, 3L}) {
    std::set<Partition> roots;
    for (const Partition& p : partitions_up_to(16)) {
      if (is_regular(p, delta)) roots.insert(orbit_root(p, delta));
    }
    for (const Partition& root : roots) {
      const KLTable t = kl_polynomials(delta, 16, root);
      ++tables;
      for (const Partition& nu : t.weights) {
        if (nu == t.root) continue;
        const auto descents = admissible_descents(nu, delta);
        if (descents.size() < 2) continue;
        ++multi;
        const KLRow& ref = t.rows.at(nu);
        for (const Partition& mu : descents) {
          c.expect(kl_row_via(t, nu, mu) == ref, "delta " + std::to_string(delta) + ", nu " + to_string(nu) +
                                                     ", descent " + to_string(mu));
        }
      }
    }
  }
  return c.done(std::to_string(tables) + " orbits, " + std::to_string(multi) + " weights with several descents");
}

Outcome gram_verification() {
  Checker c;
  int entries = 0;
  for (const Partition& seed : {Partition{}, Partition{1}}) {
    const KLTable t = kl_polynomials(1, 8, seed);
    const BlockSet b = enumerate_block(seed, 1, 8);
    for (int n = seed.degree(); n <= 8; n += 2) {
      const VerifyReport r = verify_block(n, 1, b, t);
      for (const VerifyEntry& e : r.entries) {
        ++entries;
        c.expect(e.pass, "n=" + std::to_string(n) + " Delta(" + to_string(e.lambda) + "): dim " +
                             std::to_string(e.dim_delta) + " vs " + std::to_string(e.predicted_sum));
        if (n == 8 && e.lambda == Partition{}) {
          c.expect(e.dim_delta == 105, "dim Delta_8(0) = " + std::to_string(e.dim_delta));
        }
      }
    }
  }
  c.expect(simple_dim(4, Partition{}, 1) == 1, "simple_dim(4,0,1) != 1");
  c.expect(simple_dim(6, Partition{}, 1) == 1, "simple_dim(6,0,1) != 1");
  return c.done(std::to_string(entries) + " standard modules verified by Gram rank");
}

Outcome predictions() {
  Checker c;
  std::ifstream in(BRAUER_TEST_DATA "/delta1_structures.txt");
  c.expect(static_cast<bool>(in), "structure data missing");
  std::map<Partition, KLTable> tables;
  auto table_for = [&](const Partition& label) -> const KLTable& {
    const Partition root = orbit_root(transpose(label), 1);
    auto it = tables.find(root);
    if (it == tables.end()) it = tables.emplace(root, kl_polynomials(1, 12, root)).first;
    return it->second;
  };
  int stated = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream s(line);
    std::string kind, standard_text;
    int n = 0;
    s >> kind >> n >> standard_text;
    const Partition standard = parse_partition(standard_text);
    const KLTable& t = table_for(standard);
    if (kind == "mult") {
      std::string simple;
      long long m = 0;
      s >> simple >> m;
      ++stated;
      const long long got = predict_decomposition(t, standard, parse_partition(simple));
      c.expect(got == m, "[Delta_" + std::to_string(n) + "(" + standard_text + "):L(" + simple + ")] = " +
                             std::to_string(got) + ", stated " + std::to_string(m));
      continue;
    }
    std::string eq, word;
    s >> eq;
    std::map<Partition, long long> expect;
    while (s >> word) ++expect[parse_partition(word)];
    for (const Partition& w : t.weights) {
      const Partition label = transpose(w);
      if (label.degree() > n || (n - label.degree()) % 2 != 0) continue;
      ++stated;
      const long long want = expect.count(label) ? expect.at(label) : 0;
      const long long got = predict_decomposition(t, standard, label);
      c.expect(got == want, "[Delta_" + std::to_string(n) + "(" + standard_text + "):L(" + compact_label(label) +
                                ")] = " + std::to_string(got) + ", stated " + std::to_string(want));
      expect.erase(label);
    }
    c.expect(expect.empty(), "stated simple outside Lambda_" + std::to_string(n) + " for " + standard_text);
  }
  return c.done(std::to_string(stated) + " multiplicities match");
}

// Members of Lambda^{<=m} (delta even) or Lambda^{<=m,1} (delta odd).
bool in_rep_set(const Partition& p, long delta, int m) {
  if (delta % 2 == 0) return p.length() <= m;
  return p.length() <= m || (p.length() == m + 1 && p[m] == 1);
}

Outcome negative_delta() {
  Checker c;
  const std::vector<Partition> parts12 = partitions_up_to(12);
  for (long delta : {-2L, -3L, -4L}) {
    for (const Partition& p : parts12) {
      if (!p.empty()) c.expect(!same_facet(p, Partition{}, delta), to_string(p) + " shares the facet of 0 at " + std::to_string(delta));
    }
  }

  // Uniqueness: scan the representative set up to a generous degree with
  // the balanced condition as an independent block oracle.
  const int scan = 22;
  std::ostringstream summary;
  for (long delta : {-2L, -3L, -4L}) {
    const int m = static_cast<int>(delta % 2 == 0 ? -delta / 2 : (1 - delta) / 2);
    std::vector<Partition> candidates;
    for (const Partition& q : partitions_up_to(scan)) {
      if (in_rep_set(q, delta, m)) candidates.push_back(q);
    }
    int weights = 0;
    int unique = 0;
    for (const Partition& p : partitions_up_to(10)) {
      if (singularity_degree(p, delta) != m) continue;
      ++weights;
      int hits = 0;
      for (const Partition& q : candidates) hits += is_balanced(transpose(p), transpose(q), delta);
      bool rep_ok = false;
      try {
        const Partition rep = canonical_negative_rep(p, delta);
        rep_ok = in_rep_set(rep, delta, m) && same_orbit(rep, p, delta);
      } catch (const Error&) {
      }
      const bool ok = hits == 1 && rep_ok;
      unique += ok;
      c.expect(ok, std::to_string(hits) + " representatives for " + to_string(p) + " at delta " + std::to_string(delta));
    }
    summary << "delta " << delta << ": " << unique << "/" << weights << " unique; ";
  }

  for (int m = 1; m <= 3; ++m) {
    for (const Partition& p : parts12) {
      c.expect(singularity_degree(p, -2L * m) >= m, to_string(p) + " is less than " + std::to_string(m) + "-singular");
    }
  }
  Outcome o = c.done("facet of 0 is {0}; singularity bound holds");
  o.detail = summary.str() + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"KL table reproduction", kl_table_reproduction},
      {"block enumeration", block_enumeration},
      {"balanced vs orbit criterion", criterion_equivalence},
      {"alcove contents", alcove_contents},
      {"graph isomorphisms", graph_isomorphisms},
      {"descent independence", descent_independence},
      {"Gram verification n<=8", gram_verification},
      {"decomposition predictions", predictions},
      {"negative delta structure", negative_delta},
  };
  const std::vector<double> limits = {10, 5, 60, 0, 0, 0, 300, 0, 0};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[k] > 0 && secs > limits[k]) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(limits[k])) + " s budget";
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s (%.2f s) %s: %s\n", k + 1, o.pass ? "PASS" : "FAIL", secs, criteria[k].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
