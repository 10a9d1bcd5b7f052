#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace brauer;

namespace {

// Partitions come in as labels ("4321", "5,2,1^3") or sequences of parts.
Partition to_partition(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_partition(o.cast<std::string>());
  return Partition(o.cast<std::vector<int>>());
}

mpq_class to_rational(const py::object& o) {
  mpq_class q(py::str(o).cast<std::string>());
  q.canonicalize();
  return q;
}

py::object from_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::object to_fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

}  // namespace

PYBIND11_MODULE(brauer, m) {
  m.doc() = "Blocks, KL polynomials and Gram matrices for the Brauer algebra";
  py::register_exception<Error>(m, "BrauerError", PyExc_ValueError);

  m.def("parse_partition", [](const std::string& s) { return parse_partition(s).parts(); });
  m.def("label", [](const py::object& p) { return compact_label(to_partition(p)); });
  m.def("transpose", [](const py::object& p) { return transpose(to_partition(p)).parts(); });

  m.def("is_balanced", [](const py::object& a, const py::object& b, long delta) {
    return is_balanced(to_partition(a), to_partition(b), delta);
  });
  m.def("same_block", [](const py::object& a, const py::object& b, long delta) {
    return same_block(to_partition(a), to_partition(b), delta);
  });
  m.def("singularity_degree", [](const py::object& p, long delta) {
    require_nonzero_delta(delta);
    return singularity_degree(Weight(to_partition(p)), delta);
  });
  m.def("facet", [](const py::object& p, long delta) { return from_json(facet_json(to_partition(p), delta)); });

  m.def(
      "block",
      [](long delta, const py::object& weight, int max_degree) {
        std::vector<std::string> out;
        for (const Partition& p : enumerate_block(to_partition(weight), delta, max_degree).members) out.push_back(compact_label(p));
        return out;
      },
      py::arg("delta"), py::arg("weight") = "0", py::arg("max_degree"));

  m.def(
      "graph",
      [](const std::string& kind, long delta, const py::object& weight, int max_degree) {
        if (kind == "mbs") return from_json(graph_json(mbs_graph(to_partition(weight), delta, max_degree)));
        if (kind == "orbit") return from_json(graph_json(orbit_graph(to_partition(weight), delta, max_degree)));
        if (kind == "par-e") {
          if (delta != 2) throw Error(ErrorCode::InvalidArgument, "par-e graphs describe delta = 2");
          return from_json(graph_json(par_e_graph(max_degree)));
        }
        throw Error(ErrorCode::InvalidArgument, "unknown graph kind '" + kind + "'");
      },
      py::arg("kind"), py::arg("delta"), py::arg("weight") = "0", py::arg("max_degree"));

  m.def(
      "kl_table",
      [](long delta, int max_degree, const py::object& weight) {
        return from_json(kl_table_json(kl_polynomials(delta, max_degree, to_partition(weight))));
      },
      py::arg("delta"), py::arg("max_degree"), py::arg("weight") = "0");
  m.def(
      "kl_table_csv",
      [](long delta, int max_degree, const py::object& weight) {
        return kl_table_csv(kl_polynomials(delta, max_degree, to_partition(weight)));
      },
      py::arg("delta"), py::arg("max_degree"), py::arg("weight") = "0");

  m.def(
      "predict",
      [](const py::object& standard, const py::object& simple, long delta) {
        return predict_decomposition(to_partition(standard), to_partition(simple), delta);
      },
      py::arg("standard"), py::arg("simple"), py::arg("delta"));

  m.def("cell_dimension", [](int n, const py::object& p) { return cell_dimension(n, to_partition(p)); });
  m.def("simple_dim", [](int n, const py::object& p, const py::object& delta) {
    return simple_dim(n, to_partition(p), to_rational(delta));
  });
  m.def("gram", [](int n, const py::object& p, const py::object& delta) {
    const GramMatrix g = gram_matrix(n, to_partition(p), to_rational(delta));
    py::list rows;
    for (int i = 0; i < g.dim; ++i) {
      py::list row;
      for (int j = 0; j < g.dim; ++j) row.append(to_fraction(g.at(i, j)));
      rows.append(row);
    }
    return rows;
  });

  m.def(
      "verify",
      [](int n, long delta, const py::object& weight) {
        const Partition root = to_partition(weight);
        const KLTable table = kl_polynomials(delta, n, root);
        return from_json(verify_json(verify_block(n, delta, enumerate_block(root, delta, n), table)));
      },
      py::arg("n"), py::arg("delta"), py::arg("weight") = "0");
}
