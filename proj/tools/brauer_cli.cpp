// Command-line front end.  Exit codes: 0 success, 2 validation or usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "brauer/bareiss.hpp"
#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"
#include "brauer/error.hpp"
#include "brauer/graphs.hpp"
#include "brauer/io.hpp"
#include "brauer/kl.hpp"
#include "json.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

long parse_delta(const std::string& text) {
  std::size_t used = 0;
  long d = 0;
  try {
    d = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw Error(ErrorCode::ParseError, "delta must be an integer, got '" + text + "'");
  require_nonzero_delta(d);
  return d;
}

mpq_class parse_rational_delta(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "delta must be a rational, got '" + text + "'");
  q.canonicalize();
  if (q == 0) throw Error(ErrorCode::ZeroDelta, "delta must be non-zero");
  return q;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::InvalidArgument, "format '" + format + "' is not available for " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks, graphs and Kazhdan-Lusztig polynomials for Brauer algebras"};
  app.require_subcommand(1);

  std::string delta_text;
  std::string weight_text = "0";
  std::string format;
  int max_degree = 0;

  auto* blocks = app.add_subcommand("blocks", "dominant weights in the block of a weight");
  blocks->add_option("--delta", delta_text, "parameter delta (non-zero integer)")->required();
  blocks->add_option("--weight", weight_text, "weight, e.g. 0 or 521^3");
  blocks->add_option("--max-degree", max_degree, "degree bound")->required();
  blocks->add_option("--format", format, "json or text");

  auto* facet = app.add_subcommand("facet", "facet signature and singularity degree of a weight");
  facet->add_option("--delta", delta_text)->required();
  facet->add_option("--weight", weight_text)->required();
  facet->add_option("--format", format, "json or text");

  std::string kind;
  auto* graph = app.add_subcommand("graph", "truncated block graph");
  graph->add_option("--kind", kind, "mbs, orbit or par-e")->required()->check(CLI::IsMember({"mbs", "orbit", "par-e"}));
  graph->add_option("--delta", delta_text)->required();
  graph->add_option("--weight", weight_text, "root label (mbs) or weight (orbit)");
  graph->add_option("--max-degree", max_degree)->required();
  graph->add_option("--format", format, "json, dot or text");

  auto* kl = app.add_subcommand("kl-table", "parabolic KL polynomials of one orbit");
  kl->add_option("--delta", delta_text)->required();
  kl->add_option("--weight", weight_text, "any regular weight of the orbit (default 0)");
  kl->add_option("--max-degree", max_degree)->required();
  kl->add_option("--format", format, "csv, json or text");

  std::string standard_text;
  std::string simple_text;
  auto* predict = app.add_subcommand("predict", "predicted multiplicity [Delta(standard) : L(simple)]");
  predict->add_option("--delta", delta_text)->required();
  predict->add_option("--standard", standard_text, "module label")->required();
  predict->add_option("--simple", simple_text, "module label")->required();
  predict->add_option("--format", format, "json or text");

  int n = 0;
  std::string partition_text;
  auto* gram = app.add_subcommand("gram", "Gram matrix of a cell module");
  gram->add_option("--delta", delta_text, "non-zero rational")->required();
  gram->add_option("--n", n)->required();
  gram->add_option("--partition", partition_text)->required();
  gram->add_option("--format", format, "csv, json or text");

  auto* verify = app.add_subcommand("verify", "Gram ranks against predicted decomposition numbers");
  verify->add_option("--delta", delta_text)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--weight", weight_text, "weight generating the block");
  verify->add_option("--format", format, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*blocks) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "text"}, "blocks");
      const long delta = parse_delta(delta_text);
      const BlockSet b = enumerate_block(parse_partition(weight_text), delta, max_degree);
      if (format == "json") {
        std::cout << block_json(b);
      } else {
        for (const Partition& p : b.members) std::cout << to_string(p) << "\n";
      }
    } else if (*facet) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "text"}, "facet");
      const long delta = parse_delta(delta_text);
      const Partition w = parse_partition(weight_text);
      std::cout << (format == "json" ? facet_json(w, delta) : facet_text(w, delta));
    } else if (*graph) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "dot", "text"}, "graph");
      const long delta = parse_delta(delta_text);
      ColouredDigraph g;
      if (kind == "mbs") {
        g = mbs_graph(parse_partition(weight_text), delta, max_degree);
      } else if (kind == "orbit") {
        g = orbit_graph(parse_partition(weight_text), delta, max_degree);
      } else {
        if (delta != 2) throw Error(ErrorCode::InvalidArgument, "the par-e graph lives in the orbit of 0 at delta 2");
        g = par_e_graph(max_degree);
      }
      if (format == "json") std::cout << graph_json(g);
      else if (format == "dot") std::cout << graph_dot(g);
      else std::cout << graph_text(g);
    } else if (*kl) {
      if (format.empty()) format = "csv";
      require_format(format, {"csv", "json", "text"}, "kl-table");
      const long delta = parse_delta(delta_text);
      const KLTable t = kl_polynomials(delta, max_degree, parse_partition(weight_text));
      if (format == "csv") std::cout << kl_table_csv(t);
      else if (format == "json") std::cout << kl_table_json(t);
      else std::cout << kl_table_text(t);
    } else if (*predict) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "text"}, "predict");
      const long delta = parse_delta(delta_text);
      const Partition s = parse_partition(standard_text);
      const Partition l = parse_partition(simple_text);
      const long long m = predict_decomposition(s, l, delta);
      if (format == "json") {
        json j = {{"delta", delta}, {"standard", to_string(s)}, {"simple", to_string(l)}, {"multiplicity", m}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << m << "\n";
      }
    } else if (*gram) {
      if (format.empty()) format = "csv";
      require_format(format, {"csv", "json", "text"}, "gram");
      const mpq_class delta = parse_rational_delta(delta_text);
      const Partition lambda = parse_partition(partition_text);
      const GramMatrix g = gram_matrix(n, lambda, delta);
      if (format == "csv") {
        std::cout << gram_csv(g);
      } else {
        const long rank = rank_rational(g.entries, g.dim, g.dim);
        if (format == "json") {
          json j = {{"n", n}, {"delta", delta.get_str()}, {"lambda", to_string(lambda)}, {"dim", g.dim}, {"rank", rank}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "dim " << g.dim << "\nrank " << rank << "\n";
        }
      }
    } else if (*verify) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "text"}, "verify");
      const long delta = parse_delta(delta_text);
      const Partition w = parse_partition(weight_text);
      const KLTable table = kl_polynomials(delta, n, w);
      const BlockSet block = enumerate_block(w, delta, n);
      const VerifyReport report = verify_block(n, delta, block, table);
      if (format == "json") {
        std::cout << verify_json(report);
      } else {
        for (const VerifyEntry& e : report.entries) {
          std::cout << to_string(e.lambda) << " dim " << e.dim_delta << " predicted " << e.predicted_sum
                    << (e.pass ? " pass" : " FAIL") << "\n";
        }
      }
      return report.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
