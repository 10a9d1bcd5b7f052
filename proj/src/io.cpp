#include "brauer/io.hpp"

#include <cstdint>
#include <sstream>

#include "brauer/error.hpp"
#include "json.hpp"

namespace brauer {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json key_json(const BlockKey& k) {
  return {{"delta", k.delta}, {"scale", k.scale}, {"window", k.window}, {"moduli", k.abs_multiset},
          {"neg_parity", k.neg_parity}, {"has_zero", k.has_zero}};
}

BlockKey key_from(const json& j) {
  BlockKey k;
  k.delta = j.at("delta").get<long>();
  k.scale = j.at("scale").get<long>();
  k.window = j.at("window").get<int>();
  k.abs_multiset = j.at("moduli").get<std::vector<long>>();
  k.neg_parity = j.at("neg_parity").get<int>();
  k.has_zero = j.at("has_zero").get<bool>();
  return k;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') cur += c;
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quote in CSV line");
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string colour_name(const BlockKey& k) {
  // FNV-1a over the key's fields; stable across platforms.
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
                                  "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6"};
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](long v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(k.delta);
  mix(k.scale);
  for (long m : k.extended(k.window).abs_multiset) mix(m);
  mix(k.neg_parity);
  mix(k.has_zero);
  return palette[h % (sizeof(palette) / sizeof(palette[0]))];
}

std::string rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string block_json(const BlockSet& block) {
  json j;
  j["delta"] = block.delta;
  j["root_weight"] = to_string(block.root);
  j["degree_bound"] = block.degree_bound;
  json members = json::array();
  for (const Partition& p : block.members) members.push_back(to_string(p));
  j["members"] = members;
  return j.dump(2) + "\n";
}

BlockSet parse_block_json(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] {
    BlockSet b;
    b.delta = j.at("delta").get<long>();
    b.root = Weight(parse_partition(j.at("root_weight").get<std::string>()));
    b.degree_bound = j.at("degree_bound").get<int>();
    for (const auto& m : j.at("members")) b.members.push_back(parse_partition(m.get<std::string>()));
    return b;
  });
}

std::string facet_json(const Weight& lambda, long delta) {
  const ShiftedPoint x = shift(lambda, delta);
  json j;
  j["delta"] = delta;
  j["weight"] = to_string(lambda);
  j["shifted"] = x.canonical().display();
  j["signature"] = facet_signature(x).to_string();
  j["singularity_degree"] = singularity_degree(x);
  return j.dump(2) + "\n";
}

std::string facet_text(const Weight& lambda, long delta) {
  const ShiftedPoint x = shift(lambda, delta);
  return "weight " + to_string(lambda) + "\nshifted " + x.canonical().display() + "\nsignature " +
         facet_signature(x).to_string() + "\nsingularity_degree " + std::to_string(singularity_degree(x)) + "\n";
}

std::string graph_json(const ColouredDigraph& g) {
  json j;
  j["kind"] = g.kind;
  j["delta"] = g.delta;
  j["degree_bound"] = g.degree_bound;
  json vertices = json::array();
  for (const Partition& p : g.vertices) vertices.push_back(to_string(p));
  j["vertices"] = vertices;
  j["root"] = g.root ? json(to_string(g.vertices[*g.root])) : json(nullptr);
  json edges = json::array();
  for (const GraphEdge& e : g.edges) {
    json je = {{"source", to_string(g.vertices[e.source])}, {"target", to_string(g.vertices[e.target])}};
    if (e.colour) je["colour"] = key_json(*e.colour);
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

ColouredDigraph parse_graph_json(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] {
    ColouredDigraph g;
    g.kind = j.at("kind").get<std::string>();
    g.delta = j.at("delta").get<long>();
    g.degree_bound = j.at("degree_bound").get<int>();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(parse_partition(v.get<std::string>()));
    auto index = [&](const json& v) {
      const int k = g.index_of(parse_partition(v.get<std::string>()));
      if (k < 0) throw Error(ErrorCode::ParseError, "edge endpoint is not a vertex");
      return k;
    };
    if (!j.at("root").is_null()) g.root = index(j.at("root"));
    for (const auto& e : j.at("edges")) {
      GraphEdge edge{index(e.at("source")), index(e.at("target")), std::nullopt};
      if (e.contains("colour")) edge.colour = key_from(e.at("colour"));
      g.edges.push_back(edge);
    }
    return g;
  });
}

std::string graph_dot(const ColouredDigraph& g) {
  std::ostringstream out;
  out << "digraph \"" << g.kind << "\" {\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out << "  v" << k << " [label=\"" << to_string(g.vertices[k]) << "\"";
    if (g.root && *g.root == static_cast<int>(k)) out << ", shape=box";
    out << "];\n";
  }
  for (const GraphEdge& e : g.edges) {
    out << "  v" << e.source << " -> v" << e.target;
    if (e.colour) out << " [color=\"" << colour_name(*e.colour) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_text(const ColouredDigraph& g) {
  std::ostringstream out;
  out << g.kind << " graph, delta " << g.delta << ", degree <= " << g.degree_bound << ": " << g.vertices.size()
      << " vertices, " << g.edges.size() << " edges\n";
  for (const GraphEdge& e : g.edges) out << to_string(g.vertices[e.source]) << " -> " << to_string(g.vertices[e.target]) << "\n";
  return out.str();
}

std::string kl_table_csv(const KLTable& table) {
  std::ostringstream out;
  out << "mu\\lambda";
  for (const Partition& w : table.weights) out << "," << csv_field(compact_label(w));
  out << "\n";
  for (std::size_t r = 0; r < table.weights.size(); ++r) {
    const Partition& nu = table.weights[r];
    out << csv_field(compact_label(nu));
    for (std::size_t c = 0; c < table.weights.size(); ++c) {
      out << ",";
      if (c > r) continue;
      const LaurentPoly p = table.entry(nu, table.weights[c]);
      out << (p.is_zero() ? "." : p.to_string());
    }
    out << "\n";
  }
  return out.str();
}

KLTable parse_kl_table_csv(const std::string& text, long delta) {
  const std::vector<std::string> lines = lines_of(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty KL table");
  KLTable table;
  table.delta = delta;
  const std::vector<std::string> header = split_csv_line(lines[0]);
  for (std::size_t c = 1; c < header.size(); ++c) table.weights.push_back(parse_partition(header[c]));
  if (lines.size() != table.weights.size() + 1) throw Error(ErrorCode::ParseError, "KL table is not square");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> cells = split_csv_line(lines[r]);
    if (cells.size() != header.size()) throw Error(ErrorCode::ParseError, "ragged KL table row " + std::to_string(r));
    const Partition nu = parse_partition(cells[0]);
    if (nu != table.weights[r - 1]) throw Error(ErrorCode::ParseError, "row and column labels disagree");
    KLRow& row = table.rows[nu];
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) continue;
      LaurentPoly p = LaurentPoly::parse(cells[c]);
      if (!p.is_zero()) row.emplace(table.weights[c - 1], std::move(p));
    }
  }
  for (const Partition& w : table.weights) table.degree_bound = std::max(table.degree_bound, w.degree());
  if (!table.weights.empty()) table.root = table.weights.front();
  return table;
}

std::string kl_table_json(const KLTable& table) {
  json j;
  j["delta"] = table.delta;
  j["degree_bound"] = table.degree_bound;
  j["root"] = to_string(table.root);
  json weights = json::array();
  for (const Partition& w : table.weights) weights.push_back(to_string(w));
  j["weights"] = weights;
  json rows = json::array();
  for (const Partition& nu : table.weights) {
    json entries = json::array();
    auto it = table.rows.find(nu);
    if (it != table.rows.end()) {
      for (const Partition& lambda : table.weights) {
        auto e = it->second.find(lambda);
        if (e == it->second.end()) continue;
        json coeffs = json::object();
        for (const auto& [exp, c] : e->second.coeffs()) coeffs[std::to_string(exp)] = c;
        entries.push_back({{"lambda", to_string(lambda)}, {"coefficients", coeffs}});
      }
    }
    rows.push_back({{"nu", to_string(nu)}, {"entries", entries}});
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

KLTable parse_kl_table_json(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] {
    KLTable table;
    table.delta = j.at("delta").get<long>();
    table.degree_bound = j.at("degree_bound").get<int>();
    table.root = parse_partition(j.at("root").get<std::string>());
    for (const auto& w : j.at("weights")) table.weights.push_back(parse_partition(w.get<std::string>()));
    for (const auto& r : j.at("rows")) {
      KLRow& row = table.rows[parse_partition(r.at("nu").get<std::string>())];
      for (const auto& e : r.at("entries")) {
        LaurentPoly p;
        for (const auto& [exp, c] : e.at("coefficients").items()) p += LaurentPoly::monomial(std::stoi(exp), c.get<long long>());
        if (!p.is_zero()) row.emplace(parse_partition(e.at("lambda").get<std::string>()), std::move(p));
      }
    }
    return table;
  });
}

std::string kl_table_text(const KLTable& table) {
  std::vector<std::string> labels;
  std::size_t width = 1;
  for (const Partition& w : table.weights) {
    labels.push_back(compact_label(w));
    width = std::max(width, labels.back().size());
  }
  std::vector<std::vector<std::string>> cells(table.weights.size());
  for (std::size_t r = 0; r < table.weights.size(); ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const LaurentPoly p = table.entry(table.weights[r], table.weights[c]);
      cells[r].push_back(p.is_zero() ? "." : p.to_string());
      width = std::max(width, cells[r].back().size());
    }
  }
  auto pad = [&](const std::string& s) { return s + std::string(width + 1 - s.size(), ' '); };
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << pad(labels[r]) << "|";
    for (const std::string& s : cells[r]) out << " " << pad(s);
    out << "\n";
  }
  return out.str();
}

std::string gram_csv(const GramMatrix& g) {
  std::ostringstream out;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) out << (j ? "," : "") << rational(g.at(i, j));
    out << "\n";
  }
  return out.str();
}

GramMatrix parse_gram_csv(const std::string& text, const mpq_class& delta) {
  const std::vector<std::string> lines = lines_of(text);
  GramMatrix g;
  g.dim = static_cast<int>(lines.size());
  g.delta = delta;
  for (const std::string& line : lines) {
    const std::vector<std::string> cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != g.dim) throw Error(ErrorCode::ParseError, "Gram CSV is not square");
    for (const std::string& c : cells) {
      mpq_class q;
      if (q.set_str(c, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + c + "'");
      q.canonicalize();
      g.entries.push_back(q);
    }
  }
  return g;
}

std::string verify_json(const VerifyReport& report) {
  json entries = json::array();
  for (const VerifyEntry& e : report.entries) {
    json mult = json::object();
    for (const auto& [mu, m] : e.multiplicities) mult[to_string(mu)] = m;
    entries.push_back({{"n", e.n},
                       {"delta", e.delta},
                       {"lambda", to_string(e.lambda)},
                       {"dim_delta", e.dim_delta},
                       {"predicted_sum", e.predicted_sum},
                       {"pass", e.pass},
                       {"multiplicities", mult}});
  }
  json dims = json::object();
  for (const auto& [mu, d] : report.simple_dims) dims[to_string(mu)] = d;
  json j = {{"n", report.n}, {"delta", report.delta}, {"entries", entries}, {"simple_dims", dims}, {"all_pass", report.all_pass()}};
  return j.dump(2) + "\n";
}

}  // namespace brauer
