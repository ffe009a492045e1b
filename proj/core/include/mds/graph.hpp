#ifndef MDS_GRAPH_HPP
#define MDS_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mds/common.hpp"

namespace mds {

/// A finite directed multigraph.  Parallel edges and self-loops are
/// permitted; edges have their own identity (two parallel edges are
/// distinct objects).  Vertices and edges keep their declared order, which
/// makes every downstream computation deterministic.
class DirectedMultigraph {
 public:
  struct Edge {
    std::string name;
    int src = -1;
    int tgt = -1;
  };

  DirectedMultigraph() = default;

  /// Builds and validates a graph.  Throws input_error on duplicate ids or
  /// edges with undeclared endpoints.
  static DirectedMultigraph make(
      std::vector<std::string> vertices,
      std::vector<std::tuple<std::string, std::string, std::string>> edges);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  int source(int e) const { return edges_[e].src; }
  int target(int e) const { return edges_[e].tgt; }

  /// -1 if the name is unknown.
  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& name) const;

  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_edges_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_edges_[v].size()); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> in_edges_;
};

/// Outcome of the standing-hypothesis check: the dynamics layer requires a
/// strongly connected graph that is not a single cycle and whose contracted
/// edge set E \ F has more than one element.
struct ValidationReport {
  bool strongly_connected = false;
  bool is_cycle = false;
  int nu = 0;  // card(E \ F)
  bool standing_hypotheses_met = false;
};

ValidationReport validate_graph(const DirectedMultigraph& g);

/// The contracting forest of a graph together with the contracted graph.
///
/// F = edges that are the unique incoming edge of their target; the roots R
/// are the vertices with in-degree >= 2.  F organizes the vertices into
/// rooted trees (edges point away from the root).  Contracting each tree to
/// its root yields the contracted graph on R with edge set E \ F.
struct ContractionData {
  DirectedMultigraph graph;       // the input graph G
  DirectedMultigraph contracted;  // the contracted graph on the roots

  std::vector<char> in_forest;    // per G-edge: true iff in F
  std::vector<int> roots;         // root vertex indices, ascending
  std::vector<int> tree_of;       // G-vertex -> root vertex index
  std::vector<std::vector<int>> root_path;  // G-vertex -> F-edge sequence from its root
  std::map<int, std::vector<int>> leaf_levels;  // root -> sorted leaf levels

  std::vector<int> kept_edges;    // G-edge indices of E \ F, ascending
  std::vector<int> lambda_edge;   // G-edge -> contracted edge index, -1 for F-edges
  std::vector<int> contracted_vertex;  // G-vertex -> contracted vertex index of its root

  int root_count() const { return static_cast<int>(roots.size()); }
  int nu() const { return static_cast<int>(kept_edges.size()); }
};

/// Computes the contracting forest.  Requires the standing hypotheses
/// (throws hypothesis_error otherwise).
ContractionData contracting_forest(const DirectedMultigraph& g);

/// Searches for a vertex bijection g1 -> g2 preserving optional vertex
/// labels and the edge multiplicity between every ordered vertex pair.
/// Returns the first bijection in lexicographic order of g2's vertex
/// numbering, as a vector indexed by g1 vertices; absent if none exists.
std::optional<std::vector<int>> is_isomorphic(
    const DirectedMultigraph& g1, const DirectedMultigraph& g2,
    const std::vector<std::string>* weights1 = nullptr,
    const std::vector<std::string>* weights2 = nullptr);

}  // namespace mds

#endif  // MDS_GRAPH_HPP
