// Brute-force oracles: direct counting of weak/strong proper colorings,
// per-orientation compatible/intercompatible/edge-strict counts, reciprocity
// right-hand sides, and exhaustive generation of small mixed graphs.
//
// These are deliberately the dumbest correct implementations; the exact
// engine is checked against them.
#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "chromix/error.hpp"
#include "chromix/graph.hpp"

namespace chromix {

/// Vertex-count cap for the brute-force counters, default 8; the environment
/// variable CHROMIX_ORACLE_BOUND overrides it.
inline int oracle_bound() {
  if (const char* s = std::getenv("CHROMIX_ORACLE_BOUND")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 8;
}

enum class Rel { not_equal, less_equal, less };

struct ColorConstraint {
  int u, v;
  Rel rel;
};

namespace detail {

inline void check_counting_bounds(std::size_t n, long k) {
  if (k < 1) throw Error("k must be a positive integer, got " + std::to_string(k));
  const int bound = oracle_bound();
  if (n > static_cast<std::size_t>(bound))
    throw BoundError("oracle bound exceeded: |V| = " + std::to_string(n) +
                     " > " + std::to_string(bound) +
                     " (set CHROMIX_ORACLE_BOUND to raise)");
  double work = 1.0;
  for (std::size_t i = 0; i < n; ++i) work *= static_cast<double>(k);
  if (work > 5e8)
    throw BoundError("oracle bound exceeded: k^|V| too large for brute force");
}

/// Count maps {0..n-1} -> {1..k} satisfying all constraints, assigning
/// vertices in index order and pruning as soon as a constraint between
/// already-assigned vertices fails.
inline long long count_colorings(std::size_t n, long k,
                                 const std::vector<ColorConstraint>& constraints) {
  check_counting_bounds(n, k);
  // Constraints become checkable once their later endpoint is colored.
  std::vector<std::vector<ColorConstraint>> at(n);
  for (const auto& c : constraints) {
    int last = std::max(c.u, c.v);
    at[last].push_back(c);
  }
  std::vector<long> color(n, 0);
  long long count = 0;
  // Explicit stack: position i tries colors 1..k.
  std::size_t i = 0;
  if (n == 0) return 1;
  color[0] = 0;
  while (true) {
    ++color[i];
    if (color[i] > k) {
      if (i == 0) break;
      --i;
      continue;
    }
    bool ok = true;
    for (const auto& c : at[i]) {
      long cu = color[c.u], cv = color[c.v];
      switch (c.rel) {
        case Rel::not_equal: ok = cu != cv; break;
        case Rel::less_equal: ok = cu <= cv; break;
        case Rel::less: ok = cu < cv; break;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    if (i + 1 == n) {
      ++count;
    } else {
      ++i;
      color[i] = 0;
    }
  }
  return count;
}

inline std::vector<ColorConstraint> graph_constraints(const MixedGraph& g,
                                                      Rel arc_rel) {
  std::vector<ColorConstraint> cs;
  for (const auto& e : g.edges())
    cs.push_back({static_cast<int>(g.vertex_index(e.first)),
                  static_cast<int>(g.vertex_index(e.second)), Rel::not_equal});
  for (const auto& a : g.arcs())
    cs.push_back({static_cast<int>(g.vertex_index(a.first)),
                  static_cast<int>(g.vertex_index(a.second)), arc_rel});
  return cs;
}

inline std::vector<ColorConstraint> orientation_constraints(
    const MixedGraph& g, const Orientation& o, Rel edge_born_rel,
    Rel arc_born_rel) {
  if (o.base() != g)
    throw GraphError("orientation mismatch: orientation was built from a "
                     "different graph");
  std::vector<ColorConstraint> cs;
  for (const auto& p : o.directed_pairs())
    cs.push_back({static_cast<int>(g.vertex_index(p.from)),
                  static_cast<int>(g.vertex_index(p.to)),
                  p.origin == PairOrigin::edge_born ? edge_born_rel
                                                    : arc_born_rel});
  return cs;
}

}  // namespace detail

/// Weak proper k-colorings: c(u) != c(v) on edges, c(u) <= c(v) along arcs.
inline long long count_weak_colorings(const MixedGraph& g, long k) {
  return detail::count_colorings(g.vertex_count(), k,
                                 detail::graph_constraints(g, Rel::less_equal));
}

/// Strong proper k-colorings: c(u) != c(v) on edges, c(u) < c(v) along arcs.
inline long long count_strong_colorings(const MixedGraph& g, long k) {
  return detail::count_colorings(g.vertex_count(), k,
                                 detail::graph_constraints(g, Rel::less));
}

/// Colorings compatible with an orientation: c(u) <= c(v) for every directed
/// pair, regardless of origin.
inline long long count_compatible(const MixedGraph& g, const Orientation& o,
                                  long k) {
  return detail::count_colorings(
      g.vertex_count(), k,
      detail::orientation_constraints(g, o, Rel::less_equal, Rel::less_equal));
}

/// Colorings intercompatible with an orientation: c(u) <= c(v) along
/// edge-born pairs, c(u) < c(v) along arc-born pairs. Where an edge-born and
/// an arc-born pair coincide both constraints apply, so the strict one wins.
inline long long count_intercompatible(const MixedGraph& g,
                                       const Orientation& o, long k) {
  return detail::count_colorings(
      g.vertex_count(), k,
      detail::orientation_constraints(g, o, Rel::less_equal, Rel::less));
}

/// Colorings of the orientation that remain weak proper colorings of the
/// underlying graph: c(u) < c(v) along edge-born pairs (<= from the
/// orientation, != from the edge), c(u) <= c(v) along arc-born pairs.
inline long long count_edge_strict(const MixedGraph& g, const Orientation& o,
                                   long k) {
  return detail::count_colorings(
      g.vertex_count(), k,
      detail::orientation_constraints(g, o, Rel::less, Rel::less_equal));
}

/// Sum of intercompatible-coloring counts over the acyclic orientations;
/// equals the number of (coloring, intercompatible acyclic orientation)
/// pairs by exchanging the order of summation.
inline long long reciprocity_rhs_weak(const MixedGraph& g, long k) {
  if (k < 1) throw Error("k must be a positive integer, got " + std::to_string(k));
  long long total = 0;
  for_each_orientation(g, [&](const Orientation& o) {
    if (is_acyclic_orientation(o)) total += count_intercompatible(g, o, k);
  });
  return total;
}

/// Sum of compatible-coloring counts over the acyclic orientations.
inline long long reciprocity_rhs_strong(const MixedGraph& g, long k) {
  if (k < 1) throw Error("k must be a positive integer, got " + std::to_string(k));
  long long total = 0;
  for_each_orientation(g, [&](const Orientation& o) {
    if (is_acyclic_orientation(o)) total += count_compatible(g, o, k);
  });
  return total;
}

inline long long count_acyclic_orientations(const MixedGraph& g) {
  long long total = 0;
  for_each_orientation(g, [&](const Orientation& o) {
    if (is_acyclic_orientation(o)) total += 1;
  });
  return total;
}

// ---------------------------------------------------------------------------
// Test-universe generation.

enum class GraphFilter { all, acyclic_mixed, pure_graph, pure_digraph };

namespace detail {

// Per unordered pair {i,j} with i<j: 0 none, 1 edge, 2 arc i->j, 3 arc j->i.
inline void apply_pair_symbol(MixedGraph& g, const Vertex& a, const Vertex& b,
                              int symbol) {
  switch (symbol) {
    case 0: break;
    case 1: g.add_edge(a, b); break;
    case 2: g.add_arc(a, b); break;
    case 3: g.add_arc(b, a); break;
  }
}

}  // namespace detail

/// Visit every labeled mixed graph on vertices {v1..vn}: each unordered pair
/// independently carries nothing, an edge, or an arc in either direction
/// (4^(n(n-1)/2) graphs before filtering), in a deterministic base-4 counter
/// order with the first pair as the fastest digit. Filters restrict to
/// acyclic mixed graphs, pure graphs (no arcs) or pure digraphs (no edges).
template <typename Fn>
void for_each_mixed_graph(int n, GraphFilter filter, Fn&& fn, int bound = 5) {
  if (n < 1) throw Error("vertex count must be positive");
  if (n > bound)
    throw BoundError("graph universe bound exceeded: n = " + std::to_string(n) +
                     " > " + std::to_string(bound));
  std::vector<Vertex> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  // Restricting the per-pair alphabet is equivalent to filtering but skips
  // the non-matching graphs entirely.
  std::vector<int> alphabet;
  switch (filter) {
    case GraphFilter::pure_graph: alphabet = {0, 1}; break;
    case GraphFilter::pure_digraph: alphabet = {0, 2, 3}; break;
    default: alphabet = {0, 1, 2, 3}; break;
  }
  std::vector<std::size_t> digit(pairs.size(), 0);
  while (true) {
    MixedGraph g;
    for (const auto& v : names) g.add_vertex(v);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      detail::apply_pair_symbol(g, names[pairs[p].first], names[pairs[p].second],
                                alphabet[digit[p]]);
    if (filter != GraphFilter::acyclic_mixed || is_acyclic_mixed(g)) fn(g);
    // Increment the base-|alphabet| counter; first pair varies fastest.
    std::size_t p = 0;
    while (p < pairs.size() && ++digit[p] == alphabet.size()) digit[p++] = 0;
    if (p == pairs.size()) break;
  }
}

inline std::vector<MixedGraph> enumerate_mixed_graphs(int n, GraphFilter filter,
                                                      int bound = 5) {
  std::vector<MixedGraph> out;
  for_each_mixed_graph(n, filter, [&](const MixedGraph& g) { out.push_back(g); },
                       bound);
  return out;
}

/// Uniform symbol per vertex pair; deterministic for a given generator state.
inline MixedGraph random_mixed_graph(int n, std::mt19937& rng) {
  std::vector<Vertex> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  MixedGraph g;
  for (const auto& v : names) g.add_vertex(v);
  std::uniform_int_distribution<int> symbol(0, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      detail::apply_pair_symbol(g, names[i], names[j], symbol(rng));
  return g;
}

}  // namespace chromix
