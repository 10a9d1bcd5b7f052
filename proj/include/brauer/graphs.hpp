#ifndef BRAUER_GRAPHS_HPP
#define BRAUER_GRAPHS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer/blocks.hpp"
#include "brauer/partition.hpp"
#include "brauer/weight.hpp"

namespace brauer {

struct GraphEdge {
  int source;
  int target;
  std::optional<BlockKey> colour;
};

/// Finite truncation of one of the block graphs.  Vertices are partitions:
/// module labels for the MBS graph, dominant weights for orbit graphs, and
/// strict partitions for the Par graph.
struct ColouredDigraph {
  std::string kind;
  long delta = 0;
  int degree_bound = 0;
  std::vector<Partition> vertices;
  std::vector<GraphEdge> edges;
  std::optional<int> root;

  int index_of(const Partition& p) const;  // -1 when absent
  bool has_edge(int source, int target) const;
  bool coloured() const;  // every edge carries a colour
  /// Induced subgraph on the given vertex indices (kept in the given order).
  ColouredDigraph induced(const std::vector<int>& keep) const;
};

/// Vertices: module labels balanced with lambda; edges: maximal balanced
/// subpartitions.
ColouredDigraph mbs_graph(const Partition& lambda, long delta, int max_degree);

/// Dominant part of the orbit of v with cover edges of the entrywise order.
/// Edges between regular vertices carry the colour of their wall.
ColouredDigraph orbit_graph(const ShiftedPoint& v, int max_degree);
ColouredDigraph orbit_graph(const Partition& lambda, long delta, int max_degree);

/// Drops every coordinate whose modulus is shared with another coordinate.
std::vector<long> regularise(std::span<const long> values);
/// Same on a shifted point; the tail moves up by the number of dropped
/// coordinates, so the result carries delta + 2*(dropped count).
ShiftedPoint regularise(const ShiftedPoint& v);
/// deg(x) - deg(Reg x), the same for every x in the dominant orbit of v.
long regularisation_degree_shift(const ShiftedPoint& v);

/// (-1,-2,-3,...), i.e. shift(0, 2).
ShiftedPoint par_e_root();
/// Strict partitions with an even number of parts, degree <= max_degree,
/// edges from the two explicit rules plus the edge from the empty partition
/// to (2,1).
ColouredDigraph par_e_graph(int max_degree);
/// Positive entries of x.  Throws WrongOrbit unless x is in the orbit of
/// par_e_root().
Partition phi(const ShiftedPoint& x);
ShiftedPoint phi_inverse(const Partition& p);

/// The point of target's orbit lying in the same alcove as x.  Both must be
/// regular; x must be strictly decreasing.
ShiftedPoint transport_alcove(const ShiftedPoint& x, const ShiftedPoint& target);

/// Orbit key of x + y (doubled coordinates, so scale 2).  x and y must be
/// regular and related by a single (ij)_- reflection; throws NotAdjacent.
BlockKey edge_colour_key(const ShiftedPoint& x, const ShiftedPoint& y);

struct GraphIso {
  std::vector<int> vertex_map;  // g vertex -> h vertex
};

/// Explicit isomorphism preserving edges and, when both graphs are coloured,
/// the partition of edges into colour classes.
std::optional<GraphIso> check_isomorphism(const ColouredDigraph& g, const ColouredDigraph& h);
bool is_isomorphism(const ColouredDigraph& g, const ColouredDigraph& h, const GraphIso& iso);

/// Cover relation of the entrywise order on a list of weights (pairs of
/// indices).  Quadratic memory, cubic time.
std::vector<std::pair<int, int>> cover_edges(const std::vector<Partition>& weights);

}  // namespace brauer

#endif  // BRAUER_GRAPHS_HPP
