#include "mds/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

namespace mds {

DirectedMultigraph DirectedMultigraph::make(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> edges) {
  DirectedMultigraph g;
  g.vertex_names_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g.vertex_names_.size()); ++i) {
    auto [it, inserted] = g.vertex_index_.emplace(g.vertex_names_[i], i);
    if (!inserted)
      throw input_error("duplicate vertex id: " + g.vertex_names_[i]);
  }
  g.out_edges_.resize(g.vertex_names_.size());
  g.in_edges_.resize(g.vertex_names_.size());
  for (auto& [name, src, tgt] : edges) {
    auto si = g.vertex_index_.find(src);
    auto ti = g.vertex_index_.find(tgt);
    if (si == g.vertex_index_.end())
      throw input_error("edge " + name + ": unknown source vertex " + src);
    if (ti == g.vertex_index_.end())
      throw input_error("edge " + name + ": unknown target vertex " + tgt);
    int id = static_cast<int>(g.edges_.size());
    auto [it, inserted] = g.edge_index_.emplace(name, id);
    if (!inserted) throw input_error("duplicate edge id: " + name);
    g.edges_.push_back(Edge{name, si->second, ti->second});
    g.out_edges_[si->second].push_back(id);
    g.in_edges_[ti->second].push_back(id);
  }
  return g;
}

int DirectedMultigraph::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int DirectedMultigraph::edge_index(const std::string& name) const {
  auto it = edge_index_.find(name);
  return it == edge_index_.end() ? -1 : it->second;
}

namespace {

// Vertices reachable from `start` following edges in the given direction.
int reachable_count(const DirectedMultigraph& g, int start, bool forward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const auto& adj = forward ? g.out_edges(v) : g.in_edges(v);
    for (int e : adj) {
      int w = forward ? g.target(e) : g.source(e);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count;
}

std::vector<char> forest_edges(const DirectedMultigraph& g) {
  std::vector<char> in_forest(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.in_degree(g.target(e)) == 1) in_forest[e] = 1;
  return in_forest;
}

}  // namespace

ValidationReport validate_graph(const DirectedMultigraph& g) {
  ValidationReport report;
  if (g.vertex_count() == 0) return report;
  report.strongly_connected = reachable_count(g, 0, true) == g.vertex_count() &&
                              reachable_count(g, 0, false) == g.vertex_count();
  bool all_out_one = true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != 1) all_out_one = false;
  report.is_cycle = report.strongly_connected && all_out_one;

  auto in_forest = forest_edges(g);
  int forest_size = static_cast<int>(std::count(in_forest.begin(), in_forest.end(), 1));
  report.nu = g.edge_count() - forest_size;
  report.standing_hypotheses_met =
      report.strongly_connected && !report.is_cycle && report.nu > 1;
  return report;
}

ContractionData contracting_forest(const DirectedMultigraph& g) {
  ValidationReport report = validate_graph(g);
  if (!report.standing_hypotheses_met) {
    std::ostringstream msg;
    msg << "standing hypotheses not met:";
    if (!report.strongly_connected) msg << " not strongly connected;";
    if (report.is_cycle) msg << " graph is a cycle;";
    if (report.nu <= 1) msg << " nu = " << report.nu << " (need > 1);";
    throw hypothesis_error(msg.str());
  }

  ContractionData cd;
  cd.graph = g;
  cd.in_forest = forest_edges(g);

  // Roots are the vertices with >= 2 incoming edges; every other vertex has
  // exactly one incoming edge (strong connectivity rules out in-degree 0),
  // so following unique incoming edges upward reaches a root.
  std::vector<int> parent_edge(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) >= 2) {
      cd.roots.push_back(v);
    } else {
      assert(g.in_degree(v) == 1);
      parent_edge[v] = g.in_edges(v)[0];
    }
  }
  assert(!cd.roots.empty());

  cd.tree_of.assign(g.vertex_count(), -1);
  cd.root_path.assign(g.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> chain;  // F-edges from v up to the root, reversed
    int cur = v;
    int steps = 0;
    while (parent_edge[cur] != -1) {
      chain.push_back(parent_edge[cur]);
      cur = g.source(parent_edge[cur]);
      if (++steps > g.vertex_count())
        throw std::logic_error("internal error: cycle in the contracting forest");
    }
    cd.tree_of[v] = cur;
    std::reverse(chain.begin(), chain.end());
    cd.root_path[v] = std::move(chain);
  }

  // Leaves of each tree: vertices without F-children, recorded by level.
  std::vector<int> f_children(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (cd.in_forest[e]) ++f_children[g.source(e)];
  for (int r : cd.roots) cd.leaf_levels[r] = {};
  for (int v = 0; v < g.vertex_count(); ++v)
    if (f_children[v] == 0)
      cd.leaf_levels[cd.tree_of[v]].push_back(static_cast<int>(cd.root_path[v].size()));
  for (auto& [root, levels] : cd.leaf_levels) std::sort(levels.begin(), levels.end());

  // The contracted graph: vertex set = roots, edge set = E \ F.  The target
  // of a kept edge always has in-degree >= 2, hence is itself a root.
  cd.contracted_vertex.assign(g.vertex_count(), -1);
  std::vector<std::string> root_names;
  for (int i = 0; i < static_cast<int>(cd.roots.size()); ++i)
    root_names.push_back(g.vertex_name(cd.roots[i]));
  std::vector<int> root_slot(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(cd.roots.size()); ++i)
    root_slot[cd.roots[i]] = i;
  for (int v = 0; v < g.vertex_count(); ++v)
    cd.contracted_vertex[v] = root_slot[cd.tree_of[v]];

  std::vector<std::tuple<std::string, std::string, std::string>> kept;
  cd.lambda_edge.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (cd.in_forest[e]) continue;
    assert(root_slot[g.target(e)] >= 0);
    cd.lambda_edge[e] = static_cast<int>(kept.size());
    cd.kept_edges.push_back(e);
    kept.emplace_back(g.edge(e).name, g.vertex_name(cd.tree_of[g.source(e)]),
                      g.vertex_name(g.target(e)));
  }
  cd.contracted = DirectedMultigraph::make(std::move(root_names), std::move(kept));
  return cd;
}

namespace {

// Edge multiplicity between every ordered vertex pair, loops included.
std::vector<std::vector<int>> multiplicity_matrix(const DirectedMultigraph& g) {
  std::vector<std::vector<int>> m(g.vertex_count(),
                                  std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) ++m[e.src][e.tgt];
  return m;
}

bool extend_bijection(const std::vector<std::vector<int>>& m1,
                      const std::vector<std::vector<int>>& m2,
                      const std::vector<std::vector<char>>& candidate,
                      std::vector<int>& image, std::vector<char>& used, int v) {
  int n = static_cast<int>(image.size());
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || !candidate[v][w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      ok = m1[v][u] == m2[w][image[u]] && m1[u][v] == m2[image[u]][w];
    if (ok && m1[v][v] == m2[w][w]) {
      image[v] = w;
      used[w] = 1;
      if (extend_bijection(m1, m2, candidate, image, used, v + 1)) return true;
      used[w] = 0;
      image[v] = -1;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(
    const DirectedMultigraph& g1, const DirectedMultigraph& g2,
    const std::vector<std::string>* weights1,
    const std::vector<std::string>* weights2) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return std::nullopt;
  if ((weights1 == nullptr) != (weights2 == nullptr))
    throw input_error("vertex weights must be given for both graphs or neither");
  int n = g1.vertex_count();
  auto m1 = multiplicity_matrix(g1);
  auto m2 = multiplicity_matrix(g2);

  // Degree/weight profiles prune the candidate sets before backtracking.
  std::vector<std::vector<char>> candidate(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      bool ok = g1.in_degree(v) == g2.in_degree(w) &&
                g1.out_degree(v) == g2.out_degree(w) && m1[v][v] == m2[w][w];
      if (ok && weights1) ok = (*weights1)[v] == (*weights2)[w];
      candidate[v][w] = ok;
    }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  if (n == 0) return image;
  if (extend_bijection(m1, m2, candidate, image, used, 0)) return image;
  return std::nullopt;
}

}  // namespace mds
