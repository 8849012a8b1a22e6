// Mixed graphs: a shared vertex set carrying both undirected edges and
// directed arcs, plus the structural operations the chromatic calculus is
// built from: deletion, contraction, arc reversal, orientation enumeration,
// acyclicity tests and strongly connected components.
//
// All values are immutable once built and every operation is a pure
// function returning a new graph, so sharing across threads is safe.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromix/error.hpp"

namespace chromix {

using Vertex = std::string;
using VertexPair = std::pair<Vertex, Vertex>;

/// Undirected edges are keyed with endpoints sorted, so {u,v} == {v,u}.
inline VertexPair edge_key(const Vertex& a, const Vertex& b) {
  return a <= b ? VertexPair{a, b} : VertexPair{b, a};
}

/// A mixed graph (V, E, A). Vertices keep their insertion order; edges and
/// arcs have set semantics in lexicographic order of endpoint tokens.
/// Opposite arcs u->v and v->u are distinct members. A loop edge {v,v} or
/// loop arc (v,v) is representable (contraction can create the former).
class MixedGraph {
 public:
  MixedGraph() = default;

  void add_vertex(const Vertex& v) {
    if (index_.emplace(v, vertices_.size()).second) vertices_.push_back(v);
  }
  /// Endpoints are auto-declared in first-use order.
  void add_edge(const Vertex& a, const Vertex& b) {
    add_vertex(a);
    add_vertex(b);
    edges_.insert(edge_key(a, b));
  }
  void add_arc(const Vertex& from, const Vertex& to) {
    add_vertex(from);
    add_vertex(to);
    arcs_.insert({from, to});
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<VertexPair>& edges() const { return edges_; }
  const std::set<VertexPair>& arcs() const { return arcs_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  bool has_vertex(const Vertex& v) const { return index_.count(v) != 0; }
  bool has_edge(const Vertex& a, const Vertex& b) const {
    return edges_.count(edge_key(a, b)) != 0;
  }
  bool has_arc(const Vertex& from, const Vertex& to) const {
    return arcs_.count({from, to}) != 0;
  }

  /// Position of v in the vertex order; throws GraphError for unknown tokens.
  std::size_t vertex_index(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw GraphError("unknown vertex: " + v);
    return it->second;
  }

  bool has_loop_edge() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const VertexPair& e) { return e.first == e.second; });
  }
  bool has_loop_arc() const {
    return std::any_of(arcs_.begin(), arcs_.end(),
                       [](const VertexPair& a) { return a.first == a.second; });
  }

  bool operator==(const MixedGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           arcs_ == other.arcs_;
  }
  bool operator!=(const MixedGraph& other) const { return !(*this == other); }

  /// Canonical one-line description, e.g. "V[u v w] E[u-v] A[v>w w>u]".
  /// Equal graphs produce equal keys; also used as the memoization key.
  std::string key() const {
    std::string s = "V[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ' ';
      s += vertices_[i];
    }
    s += "] E[";
    bool first = true;
    for (const auto& [a, b] : edges_) {
      if (!first) s += ' ';
      first = false;
      s += a + "-" + b;
    }
    s += "] A[";
    first = true;
    for (const auto& [a, b] : arcs_) {
      if (!first) s += ' ';
      first = false;
      s += a + ">" + b;
    }
    s += ']';
    return s;
  }

 private:
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::size_t> index_;
  std::set<VertexPair> edges_;
  std::set<VertexPair> arcs_;
};

// ---------------------------------------------------------------------------
// Deletion, contraction, reversal.

inline MixedGraph delete_edge(const MixedGraph& g, const Vertex& a,
                              const Vertex& b) {
  if (!g.has_edge(a, b)) throw GraphError("missing edge: " + a + "-" + b);
  MixedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& e : g.edges())
    if (e != edge_key(a, b)) out.add_edge(e.first, e.second);
  for (const auto& arc : g.arcs()) out.add_arc(arc.first, arc.second);
  return out;
}

inline MixedGraph delete_arc(const MixedGraph& g, const Vertex& from,
                             const Vertex& to) {
  if (!g.has_arc(from, to)) throw GraphError("missing arc: " + from + ">" + to);
  MixedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge(e.first, e.second);
  for (const auto& arc : g.arcs())
    if (arc != VertexPair{from, to}) out.add_arc(arc.first, arc.second);
  return out;
}

namespace detail {

// Identify a cluster of vertices into one vertex named after the
// lexicographically smallest member, skipping the given edges/arcs entirely.
// Parallels collapse by set semantics; loop arcs produced by the merge are
// dropped (weakly vacuous) while loop edges are kept (they force 0 colorings).
inline MixedGraph identify(const MixedGraph& g, const std::set<Vertex>& cluster,
                           const std::set<VertexPair>& dropped_edges,
                           const std::set<VertexPair>& dropped_arcs) {
  const Vertex merged = *cluster.begin();  // std::set orders tokens
  auto rename = [&](const Vertex& v) -> const Vertex& {
    return cluster.count(v) ? merged : v;
  };
  MixedGraph out;
  bool placed = false;
  for (const auto& v : g.vertices()) {
    if (cluster.count(v)) {
      if (!placed) out.add_vertex(merged);
      placed = true;
    } else {
      out.add_vertex(v);
    }
  }
  for (const auto& e : g.edges()) {
    if (dropped_edges.count(e)) continue;
    out.add_edge(rename(e.first), rename(e.second));
  }
  for (const auto& a : g.arcs()) {
    if (dropped_arcs.count(a)) continue;
    const Vertex& u = rename(a.first);
    const Vertex& v = rename(a.second);
    if (u == v && a.first != a.second) continue;  // merge-born loop arc
    if (u == v) continue;                         // pre-existing loop arc of the cluster
    out.add_arc(u, v);
  }
  return out;
}

}  // namespace detail

/// Contract an edge: remove it and identify its endpoints. The merged vertex
/// is named after the lexicographically smaller endpoint token.
inline MixedGraph contract_edge(const MixedGraph& g, const Vertex& a,
                                const Vertex& b) {
  if (!g.has_edge(a, b)) throw GraphError("missing edge: " + a + "-" + b);
  if (a == b) return delete_edge(g, a, b);  // contracting a loop just removes it
  return detail::identify(g, {a, b}, {edge_key(a, b)}, {});
}

inline MixedGraph contract_arc(const MixedGraph& g, const Vertex& from,
                               const Vertex& to) {
  if (!g.has_arc(from, to)) throw GraphError("missing arc: " + from + ">" + to);
  if (from == to) return delete_arc(g, from, to);
  return detail::identify(g, {from, to}, {}, {VertexPair{from, to}});
}

/// A vertex/arc subgraph, the shape taken by subgraph contraction. Edges are
/// deliberately not part of it.
struct ArcSubgraph {
  std::vector<Vertex> vertices;
  std::vector<VertexPair> arcs;
};

/// Contract a whole subgraph to one vertex: its arcs are removed, its
/// vertices identified. Loop arcs arising from the merge are dropped and
/// parallels collapse; loop edges (from edges joining two merged vertices)
/// are retained.
inline MixedGraph contract_subgraph(const MixedGraph& g, const ArcSubgraph& s) {
  if (s.vertices.empty()) throw GraphError("not a subgraph: empty vertex set");
  std::set<Vertex> cluster;
  for (const auto& v : s.vertices) {
    if (!g.has_vertex(v)) throw GraphError("not a subgraph: unknown vertex " + v);
    cluster.insert(v);
  }
  std::set<VertexPair> dropped;
  for (const auto& a : s.arcs) {
    if (!g.has_arc(a.first, a.second))
      throw GraphError("not a subgraph: missing arc " + a.first + ">" + a.second);
    if (!cluster.count(a.first) || !cluster.count(a.second))
      throw GraphError("not a subgraph: arc endpoint outside the vertex set");
    dropped.insert(a);
  }
  return detail::identify(g, cluster, {}, dropped);
}

/// Reverse one arc. If the opposite arc already exists the two collapse to a
/// single set member in the result.
inline MixedGraph reverse_arc(const MixedGraph& g, const Vertex& from,
                              const Vertex& to) {
  if (!g.has_arc(from, to)) throw GraphError("missing arc: " + from + ">" + to);
  MixedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge(e.first, e.second);
  for (const auto& a : g.arcs())
    if (a != VertexPair{from, to}) out.add_arc(a.first, a.second);
  out.add_arc(to, from);
  return out;
}

// ---------------------------------------------------------------------------
// Orientations.

enum class PairOrigin { edge_born, arc_born };

struct DirectedPair {
  Vertex from, to;
  PairOrigin origin;
  bool operator==(const DirectedPair&) const = default;
};

/// An orientation of a mixed graph: every edge gets a direction, arcs are
/// never re-oriented. The induced directed pairs carry their origin so the
/// intercompatibility constraints can distinguish edge-born from arc-born.
class Orientation {
 public:
  Orientation(MixedGraph base, std::vector<VertexPair> edge_directions)
      : base_(std::make_shared<MixedGraph>(std::move(base))),
        edge_directions_(std::move(edge_directions)) {
    const auto& edges = base_->edges();
    if (edge_directions_.size() != edges.size())
      throw GraphError("orientation mismatch: direction count differs from edge count");
    std::size_t i = 0;
    for (const auto& e : edges) {
      const auto& d = edge_directions_[i++];
      if (edge_key(d.first, d.second) != e)
        throw GraphError("orientation mismatch: direction is not a permutation of " +
                         e.first + "-" + e.second);
    }
  }

  const MixedGraph& base() const { return *base_; }
  /// Directions aligned with the canonical edge order of base().edges().
  const std::vector<VertexPair>& edge_directions() const {
    return edge_directions_;
  }

  /// Arc-born pairs first (canonical arc order), then the oriented edges.
  std::vector<DirectedPair> directed_pairs() const {
    std::vector<DirectedPair> out;
    out.reserve(base_->arcs().size() + edge_directions_.size());
    for (const auto& a : base_->arcs())
      out.push_back({a.first, a.second, PairOrigin::arc_born});
    for (const auto& d : edge_directions_)
      out.push_back({d.first, d.second, PairOrigin::edge_born});
    return out;
  }

  bool operator==(const Orientation& other) const {
    return *base_ == *other.base_ && edge_directions_ == other.edge_directions_;
  }

 private:
  std::shared_ptr<const MixedGraph> base_;
  std::vector<VertexPair> edge_directions_;
};

namespace detail {

// Kahn's algorithm over index pairs; a loop pair counts as a cycle.
inline bool acyclic_index_pairs(std::size_t n,
                                const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [u, v] : pairs) {
    if (u == v) return false;
    adj[u].push_back(v);
    ++indegree[v];
  }
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t processed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++processed;
    for (int w : adj[v])
      if (--indegree[w] == 0) queue.push_back(w);
  }
  return processed == n;
}

inline std::vector<std::pair<int, int>> index_pairs(const MixedGraph& g,
                                                    const Orientation& o) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : o.directed_pairs())
    pairs.emplace_back(static_cast<int>(g.vertex_index(p.from)),
                       static_cast<int>(g.vertex_index(p.to)));
  return pairs;
}

}  // namespace detail

/// Visit every orientation of g in a deterministic order: a binary counter
/// over the non-loop edges in canonical edge order (bit clear = the edge is
/// directed from its smaller endpoint). A loop edge has a single possible
/// direction and does not contribute a counter bit.
template <typename Fn>
void for_each_orientation(const MixedGraph& g, Fn&& fn) {
  std::vector<VertexPair> edges(g.edges().begin(), g.edges().end());
  std::vector<std::size_t> free_slots;  // indices of non-loop edges
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first != edges[i].second) free_slots.push_back(i);
  if (free_slots.size() > 24)
    throw BoundError("too many edges to enumerate orientations: " +
                     std::to_string(free_slots.size()));
  const unsigned long long total = 1ULL << free_slots.size();
  std::vector<VertexPair> dirs(edges.begin(), edges.end());
  for (unsigned long long mask = 0; mask < total; ++mask) {
    for (std::size_t j = 0; j < free_slots.size(); ++j) {
      const auto& e = edges[free_slots[j]];
      dirs[free_slots[j]] =
          (mask >> j) & 1ULL ? VertexPair{e.second, e.first} : e;
    }
    fn(Orientation(g, dirs));
  }
}

/// All orientations of g; 2^|E| of them for loop-free graphs.
inline std::vector<Orientation> orientations(const MixedGraph& g) {
  std::vector<Orientation> out;
  for_each_orientation(g, [&](const Orientation& o) { out.push_back(o); });
  return out;
}

/// True iff the induced digraph (arcs plus oriented edges) has no directed
/// cycle; a loop pair is a cycle.
inline bool is_acyclic_orientation(const Orientation& o) {
  return detail::acyclic_index_pairs(o.base().vertex_count(),
                                     detail::index_pairs(o.base(), o));
}

/// True iff every orientation of g is acyclic. Reference implementation by
/// full orientation enumeration, as the downstream theorem checks expect.
inline bool is_acyclic_mixed(const MixedGraph& g) {
  if (g.has_loop_edge() || g.has_loop_arc()) return false;
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& a : g.arcs())
    pairs.emplace_back(static_cast<int>(g.vertex_index(a.first)),
                       static_cast<int>(g.vertex_index(a.second)));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    edges.emplace_back(static_cast<int>(g.vertex_index(e.first)),
                       static_cast<int>(g.vertex_index(e.second)));
  if (edges.size() > 24)
    throw BoundError("too many edges to enumerate orientations: " +
                     std::to_string(edges.size()));
  const unsigned long long total = 1ULL << edges.size();
  std::vector<std::pair<int, int>> all = pairs;
  all.resize(pairs.size() + edges.size());
  for (unsigned long long mask = 0; mask < total; ++mask) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      all[pairs.size() + j] = (mask >> j) & 1ULL
                                  ? std::pair<int, int>{edges[j].second, edges[j].first}
                                  : edges[j];
    }
    if (!detail::acyclic_index_pairs(n, all)) return false;
  }
  return true;
}

/// Strongly connected components of a directed graph (E must be empty).
/// Components are ordered by their smallest contained vertex (vertex order),
/// members likewise.
inline std::vector<std::vector<Vertex>> strongly_connected_components(
    const MixedGraph& g) {
  if (!g.edges().empty())
    throw GraphError("strongly connected components require a directed graph "
                     "(edge set must be empty)");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> adj(n), radj(n);
  for (const auto& a : g.arcs()) {
    int u = static_cast<int>(g.vertex_index(a.first));
    int v = static_cast<int>(g.vertex_index(a.second));
    adj[u].push_back(v);
    radj[v].push_back(u);
  }
  // Kosaraju: first pass records finish order, second pass sweeps the
  // transpose in reverse finish order.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(start), 0}};
    seen[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> component(n, -1);
  int comp_count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (component[*it] != -1) continue;
    std::vector<int> stack{*it};
    component[*it] = comp_count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : radj[v]) {
        if (component[w] == -1) {
          component[w] = comp_count;
          stack.push_back(w);
        }
      }
    }
    ++comp_count;
  }
  std::vector<std::vector<Vertex>> groups(comp_count);
  for (std::size_t v = 0; v < n; ++v)
    groups[component[v]].push_back(g.vertices()[v]);  // ascending vertex order
  std::sort(groups.begin(), groups.end(),
            [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
              return g.vertex_index(a.front()) < g.vertex_index(b.front());
            });
  return groups;
}

}  // namespace chromix
