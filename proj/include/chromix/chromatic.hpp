// The exact chromatic engine for mixed graphs and the theorem verifiers.
//
// Weak chromatic polynomials are computed by the deletion-contraction
// calculus: edges are eliminated first via chi(G) = chi(G-e) - chi(G/e);
// once only arcs remain, nontrivial strongly connected components collapse
// to single vertices (they force equal colors), and the resulting acyclic
// digraph is counted through its lattice of order ideals. Strong chromatic
// polynomials reduce to weak ones by doubling every arc with an edge on the
// same endpoints.
#pragma once

#include <climits>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chromix/enumerate.hpp"
#include "chromix/error.hpp"
#include "chromix/graph.hpp"
#include "chromix/polynomial.hpp"
#include "chromix/poset.hpp"
#include "chromix/report.hpp"

namespace chromix {

enum class Theorem {
  weak_reciprocity,
  strong_reciprocity,
  stanley_graph,
  stanley_order,
  edge_deletion_contraction,
  arc_reversal_identity,
  strongly_connected_collapse,
  scc_contraction,
  orientation_sum,
  orientation_labeling,
};

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::weak_reciprocity: return "weak-reciprocity";
    case Theorem::strong_reciprocity: return "strong-reciprocity";
    case Theorem::stanley_graph: return "stanley-graph";
    case Theorem::stanley_order: return "stanley-order";
    case Theorem::edge_deletion_contraction: return "edge-deletion-contraction";
    case Theorem::arc_reversal_identity: return "arc-reversal-identity";
    case Theorem::strongly_connected_collapse: return "strongly-connected-collapse";
    case Theorem::scc_contraction: return "scc-contraction";
    case Theorem::orientation_sum: return "orientation-sum";
    case Theorem::orientation_labeling: return "orientation-labeling";
  }
  return "?";
}

/// Accepts the full theorem names plus the short aliases "weak", "strong",
/// "edge-dc" and "arc-identity".
inline Theorem parse_theorem(const std::string& name) {
  if (name == "weak" || name == "weak-reciprocity") return Theorem::weak_reciprocity;
  if (name == "strong" || name == "strong-reciprocity")
    return Theorem::strong_reciprocity;
  if (name == "stanley-graph") return Theorem::stanley_graph;
  if (name == "stanley-order") return Theorem::stanley_order;
  if (name == "edge-dc" || name == "edge-deletion-contraction")
    return Theorem::edge_deletion_contraction;
  if (name == "arc-identity" || name == "arc-reversal-identity")
    return Theorem::arc_reversal_identity;
  if (name == "strongly-connected-collapse")
    return Theorem::strongly_connected_collapse;
  if (name == "scc-contraction") return Theorem::scc_contraction;
  if (name == "orientation-sum") return Theorem::orientation_sum;
  if (name == "orientation-labeling") return Theorem::orientation_labeling;
  throw Error("unknown theorem: " + name);
}

namespace detail {

// Per-k counts of order-preserving maps into [k] for one weakly connected
// acyclic digraph, k = 1..kmax. A map c with c(u) <= c(v) along arcs is the
// same thing as the chain of order ideals I_j = {v : c(v) <= j}, so the
// count for k is the number of (k-1)-multichains in the ideal lattice,
// computed by iterated summation.
inline std::vector<BigInt> ideal_chain_counts(
    const std::vector<std::uint32_t>& strict_predecessors, long kmax) {
  const std::size_t m = strict_predecessors.size();
  if (m > 20)
    throw BoundError("exact engine bound exceeded: a connected cluster of " +
                     std::to_string(m) + " vertices is too large");
  std::vector<std::uint32_t> ideals;
  std::unordered_map<std::uint32_t, int> position;
  const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
  for (std::uint32_t s = 0;; ++s) {
    bool down_closed = true;
    for (std::size_t v = 0; v < m && down_closed; ++v)
      if ((s >> v) & 1u && (strict_predecessors[v] & ~s) != 0) down_closed = false;
    if (down_closed) {
      position.emplace(s, static_cast<int>(ideals.size()));
      ideals.push_back(s);
    }
    if (s == full) break;
  }
  const std::size_t count = ideals.size();
  std::vector<std::vector<int>> subideals(count);
  long long budget = 50'000'000;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t top = ideals[i];
    std::uint32_t s = top;
    while (true) {
      auto it = position.find(s);
      if (it != position.end()) subideals[i].push_back(it->second);
      if (--budget <= 0)
        throw BoundError("exact engine bound exceeded: ideal lattice too large");
      if (s == 0) break;
      s = (s - 1) & top;
    }
  }
  std::vector<BigInt> counts(static_cast<std::size_t>(kmax) + 1);
  counts[1] = 1;
  if (kmax < 2) return counts;
  std::vector<BigInt> chains(count, 1);  // multichains of length 1 ending at I
  counts[2] = static_cast<long>(count);
  for (long t = 2; t + 1 <= kmax; ++t) {
    std::vector<BigInt> next(count);
    BigInt total = 0;
    for (std::size_t i = 0; i < count; ++i) {
      BigInt acc = 0;
      for (int j : subideals[i]) acc += chains[j];
      total += acc;
      next[i] = std::move(acc);
    }
    chains = std::move(next);
    counts[t + 1] = std::move(total);
  }
  return counts;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Interpolates the weak-coloring counts at k = 1..|V|+1 and re-samples at
/// |V|+2 as a degree-stability check; the independent witness path against
/// which the calculus is verified.
inline Polynomial weak_chromatic_via_oracle(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > static_cast<std::size_t>(oracle_bound()))
    throw BoundError("oracle bound exceeded: |V| = " + std::to_string(n) +
                     " (set CHROMIX_ORACLE_BOUND to raise)");
  std::vector<std::pair<Rational, Rational>> points;
  for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
    points.emplace_back(Rational(k),
                        Rational(static_cast<long>(count_weak_colorings(g, k))));
  Polynomial p = interpolate(points);
  const long probe = static_cast<long>(n) + 2;
  if (p.at(probe) != Rational(static_cast<long>(count_weak_colorings(g, probe))))
    throw PolynomialityError(
        "weak-coloring counts failed the degree-stability re-sample at k = " +
        std::to_string(probe));
  return p;
}

/// Exact chromatic computations with a memo shared across calls, so sweeps
/// over many graphs reuse common minors. Not safe for concurrent use of one
/// instance; distinct instances are independent.
class ChromaticEngine {
 public:
  /// Weak chromatic polynomial by deletion-contraction.
  Polynomial weak(const MixedGraph& g) {
    return weak_rec(g, {LONG_MAX, LONG_MAX});
  }

  /// Strong chromatic polynomial via the reduction that pairs every arc with
  /// an edge on the same endpoints (forcing strict inequality weakly).
  Polynomial strong(const MixedGraph& g) {
    MixedGraph doubled;
    for (const auto& v : g.vertices()) doubled.add_vertex(v);
    for (const auto& e : g.edges()) doubled.add_edge(e.first, e.second);
    for (const auto& a : g.arcs()) {
      doubled.add_edge(a.first, a.second);
      doubled.add_arc(a.first, a.second);
    }
    return weak(doubled);
  }

  /// chi(G) = chi(G-e) - chi(G/e), checked as an exact polynomial identity.
  VerificationReport check_edge_deletion_contraction(const MixedGraph& g,
                                                     const Vertex& a,
                                                     const Vertex& b) {
    Polynomial lhs = weak(g);
    Polynomial rhs = weak(delete_edge(g, a, b)) - weak(contract_edge(g, a, b));
    return polynomial_identity_report(
        g.key() + " e=" + edge_key(a, b).first + "-" + edge_key(a, b).second,
        Theorem::edge_deletion_contraction, lhs, rhs);
  }

  /// chi(G) + chi(G with a reversed) = chi(G-a) + chi(G/a), exactly.
  VerificationReport check_arc_reversal_identity(const MixedGraph& g,
                                                 const Vertex& from,
                                                 const Vertex& to) {
    Polynomial lhs = weak(g) + weak(reverse_arc(g, from, to));
    Polynomial rhs = weak(delete_arc(g, from, to)) + weak(contract_arc(g, from, to));
    return polynomial_identity_report(g.key() + " a=" + from + ">" + to,
                                      Theorem::arc_reversal_identity, lhs, rhs);
  }

  /// Contracting a strongly connected arc-only subgraph leaves the weak
  /// chromatic polynomial unchanged.
  VerificationReport check_scc_contraction(const MixedGraph& g,
                                           const ArcSubgraph& s) {
    MixedGraph sub;
    for (const auto& v : s.vertices) {
      if (!g.has_vertex(v)) throw GraphError("not a subgraph: unknown vertex " + v);
      sub.add_vertex(v);
    }
    for (const auto& a : s.arcs) sub.add_arc(a.first, a.second);
    if (strongly_connected_components(sub).size() != 1)
      throw GraphError("subgraph is not strongly connected");
    Polynomial lhs = weak(g);
    Polynomial rhs = weak(contract_subgraph(g, s));
    return polynomial_identity_report(g.key() + " S=" + sub.key(),
                                      Theorem::scc_contraction, lhs, rhs);
  }

  /// (-1)^|V| chi(-k) against the count of (coloring, intercompatible
  /// acyclic orientation) pairs, k = 1..kmax. Only valid on acyclic mixed
  /// graphs; `force` runs it anyway so counterexamples can be demonstrated.
  VerificationReport verify_weak_reciprocity(const MixedGraph& g, int kmax,
                                             bool force = false) {
    if (!force && !is_acyclic_mixed(g))
      throw GraphError("not an acyclic mixed graph: " + g.key() +
                       " (weak reciprocity requires one; use force to run anyway)");
    Polynomial chi = weak(g);
    const int sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    VerificationReport report;
    report.subject = g.key();
    report.theorem = theorem_name(Theorem::weak_reciprocity);
    for (long k = 1; k <= kmax; ++k)
      report.add_row(k, Rational(sign) * chi.at(-k),
                     Rational(static_cast<long>(reciprocity_rhs_weak(g, k))));
    return report;
  }

  /// (-1)^|V| strong-chi(-k) against the count of (coloring, compatible
  /// acyclic orientation) pairs; holds for every mixed graph.
  VerificationReport verify_strong_reciprocity(const MixedGraph& g, int kmax) {
    Polynomial chi = strong(g);
    const int sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    VerificationReport report;
    report.subject = g.key();
    report.theorem = theorem_name(Theorem::strong_reciprocity);
    for (long k = 1; k <= kmax; ++k)
      report.add_row(k, Rational(sign) * chi.at(-k),
                     Rational(static_cast<long>(reciprocity_rhs_strong(g, k))));
    return report;
  }

  /// Classic graph reciprocity on pure graphs (no arcs): the pair count for
  /// k = 1..kmax plus the k = 1 specialization giving the number of acyclic
  /// orientations.
  VerificationReport verify_stanley_graph(const MixedGraph& g, int kmax) {
    if (!g.arcs().empty())
      throw GraphError("graph has arcs; this check applies to pure graphs only");
    Polynomial chi = weak(g);
    const int sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    VerificationReport report;
    report.subject = g.key();
    report.theorem = theorem_name(Theorem::stanley_graph);
    for (long k = 1; k <= kmax; ++k)
      report.add_row(k, Rational(sign) * chi.at(-k),
                     Rational(static_cast<long>(reciprocity_rhs_strong(g, k))));
    report.add_row(1, Rational(sign) * chi.at(-1),
                   Rational(static_cast<long>(count_acyclic_orientations(g))));
    return report;
  }

  /// On an acyclic mixed graph the weak colorings split across orientations:
  /// chi(k) equals the sum over all orientations of the edge-strict counts.
  VerificationReport verify_orientation_sum(const MixedGraph& g, int kmax) {
    if (!is_acyclic_mixed(g))
      throw GraphError("not an acyclic mixed graph: " + g.key());
    Polynomial chi = weak(g);
    VerificationReport report;
    report.subject = g.key();
    report.theorem = theorem_name(Theorem::orientation_sum);
    for (long k = 1; k <= kmax; ++k) {
      long long total = 0;
      for_each_orientation(g, [&](const Orientation& o) {
        total += count_edge_strict(g, o, k);
      });
      report.add_row(k, chi.at(k), Rational(static_cast<long>(total)));
    }
    return report;
  }

  /// Run one verifier over the whole labeled universe at size n. For the
  /// order-polynomial theorem the universe is every labeled poset under
  /// every labeling; otherwise it is the mixed-graph universe, narrowed to
  /// each theorem's precondition.
  SweepSummary exhaustive_verify(int n, int kmax, Theorem theorem) {
    if (n < 1 || n > 4)
      throw BoundError("exhaustive sweeps are limited to 1 <= n <= 4, got " +
                       std::to_string(n));
    SweepSummary summary;
    summary.theorem = theorem_name(theorem);
    summary.n = n;
    summary.kmax = kmax;
    switch (theorem) {
      case Theorem::weak_reciprocity:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          if (is_acyclic_mixed(g))
            summary.record(verify_weak_reciprocity(g, kmax));
        });
        break;
      case Theorem::strong_reciprocity:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          summary.record(verify_strong_reciprocity(g, kmax));
        });
        break;
      case Theorem::stanley_graph:
        for_each_mixed_graph(n, GraphFilter::pure_graph, [&](const MixedGraph& g) {
          ++summary.universe;
          summary.record(verify_stanley_graph(g, kmax));
        });
        break;
      case Theorem::stanley_order:
        for (const Poset& p : all_posets(n)) {
          ++summary.universe;
          for (const Labeling& w : all_labelings(p))
            summary.record(verify_stanley_order(p, w, kmax));
        }
        break;
      case Theorem::edge_deletion_contraction:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          for (const auto& e : g.edges())
            summary.record(check_edge_deletion_contraction(g, e.first, e.second));
        });
        break;
      case Theorem::arc_reversal_identity:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          for (const auto& a : g.arcs())
            summary.record(check_arc_reversal_identity(g, a.first, a.second));
        });
        break;
      case Theorem::strongly_connected_collapse:
        for_each_mixed_graph(n, GraphFilter::pure_digraph, [&](const MixedGraph& g) {
          ++summary.universe;
          if (strongly_connected_components(g).size() != 1) return;
          summary.record(polynomial_identity_report(
              g.key(), Theorem::strongly_connected_collapse, weak(g),
              Polynomial::variable()));
        });
        break;
      case Theorem::scc_contraction:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          for (const ArcSubgraph& s : nontrivial_scc_subgraphs(g))
            summary.record(check_scc_contraction(g, s));
        });
        break;
      case Theorem::orientation_sum:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          if (is_acyclic_mixed(g)) summary.record(verify_orientation_sum(g, kmax));
        });
        break;
      case Theorem::orientation_labeling:
        for_each_mixed_graph(n, GraphFilter::all, [&](const MixedGraph& g) {
          ++summary.universe;
          if (is_acyclic_mixed(g))
            summary.record(verify_orientation_labeling(g, kmax));
        });
        break;
    }
    return summary;
  }

  /// The nontrivial strongly connected pieces of the arc part of g, each as
  /// an induced arc subgraph ready for contraction.
  static std::vector<ArcSubgraph> nontrivial_scc_subgraphs(const MixedGraph& g) {
    MixedGraph arc_part;
    for (const auto& v : g.vertices()) arc_part.add_vertex(v);
    for (const auto& a : g.arcs()) arc_part.add_arc(a.first, a.second);
    std::vector<ArcSubgraph> out;
    for (const auto& component : strongly_connected_components(arc_part)) {
      if (component.size() < 2) continue;
      ArcSubgraph s;
      s.vertices = component;
      std::set<Vertex> members(component.begin(), component.end());
      for (const auto& a : g.arcs())
        if (members.count(a.first) && members.count(a.second)) s.arcs.push_back(a);
      out.push_back(std::move(s));
    }
    return out;
  }

 private:
  using Measure = std::pair<long, long>;  // (|E|, |V|), lexicographic

  static Measure measure_of(const MixedGraph& g) {
    return {static_cast<long>(g.edges().size()),
            static_cast<long>(g.vertex_count())};
  }

  Polynomial weak_rec(const MixedGraph& g, Measure parent) {
    const Measure m = measure_of(g);
    if (m >= parent)
      throw std::logic_error("deletion-contraction measure failed to decrease");
    const std::string key = g.key();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Polynomial result;
    if (g.has_loop_edge()) {
      result = Polynomial();  // a loop edge is never properly colorable
    } else if (!g.edges().empty()) {
      const auto e = *g.edges().begin();  // canonically smallest edge
      result = weak_rec(delete_edge(g, e.first, e.second), m) -
               weak_rec(contract_edge(g, e.first, e.second), m);
    } else {
      bool contracted = false;
      for (const auto& component : strongly_connected_components(g)) {
        if (component.size() < 2) continue;
        ArcSubgraph s;
        s.vertices = component;
        std::set<Vertex> members(component.begin(), component.end());
        for (const auto& a : g.arcs())
          if (members.count(a.first) && members.count(a.second))
            s.arcs.push_back(a);
        result = weak_rec(contract_subgraph(g, s), m);
        contracted = true;
        break;
      }
      if (!contracted) result = acyclic_digraph_polynomial(g);
    }
    cache_.emplace(key, result);
    return result;
  }

  // Base case: an arc-only graph whose strongly connected components are all
  // trivial. Loop arcs only impose c(v) <= c(v) and are ignored. Counts
  // factor over weakly connected components; each factor comes from the
  // ideal-lattice multichain count, and the product is interpolated on
  // k = 1..n+1 with a stability re-sample at n+2.
  Polynomial acyclic_digraph_polynomial(const MixedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return Polynomial::constant(1);
    const long kmax = static_cast<long>(n) + 2;
    detail::UnionFind uf(n);
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : g.arcs()) {
      int u = static_cast<int>(g.vertex_index(a.first));
      int v = static_cast<int>(g.vertex_index(a.second));
      if (u == v) continue;
      arcs.emplace_back(u, v);
      uf.unite(u, v);
    }
    std::unordered_map<int, std::vector<int>> components;
    for (std::size_t v = 0; v < n; ++v)
      components[uf.find(static_cast<int>(v))].push_back(static_cast<int>(v));
    std::vector<BigInt> totals(static_cast<std::size_t>(kmax) + 1, 1);
    for (const auto& [root, members] : components) {
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
      // Reachability closure inside the component gives the strict
      // predecessor masks that define the order ideals.
      const std::size_t msize = members.size();
      std::vector<std::uint32_t> succ(msize, 0);
      std::vector<std::vector<int>> adj(msize);
      for (const auto& [u, v] : arcs)
        if (local[u] != -1 && local[v] != -1) adj[local[u]].push_back(local[v]);
      std::vector<std::uint32_t> pred(msize, 0);
      for (std::size_t s = 0; s < msize; ++s) {
        std::vector<int> stack{static_cast<int>(s)};
        std::uint32_t seen = 1u << s;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int w : adj[v])
            if (!((seen >> w) & 1u)) {
              seen |= 1u << w;
              stack.push_back(w);
            }
        }
        succ[s] = seen & ~(1u << s);
        for (std::size_t t = 0; t < msize; ++t)
          if ((succ[s] >> t) & 1u) pred[t] |= 1u << s;
      }
      std::vector<BigInt> counts = detail::ideal_chain_counts(pred, kmax);
      for (long k = 1; k <= kmax; ++k) totals[k] *= counts[k];
    }
    std::vector<std::pair<Rational, Rational>> points;
    for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
      points.emplace_back(Rational(k), Rational(totals[k]));
    Polynomial p = interpolate(points);
    if (p.at(kmax) != Rational(totals[kmax]))
      throw PolynomialityError(
          "order-ideal counts failed the degree-stability re-sample at k = " +
          std::to_string(kmax));
    return p;
  }

  VerificationReport polynomial_identity_report(const std::string& subject,
                                                Theorem theorem,
                                                const Polynomial& lhs,
                                                const Polynomial& rhs) {
    VerificationReport report;
    report.subject = subject;
    report.theorem = theorem_name(theorem);
    // Sampling one past the larger degree plus one pins polynomial equality:
    // two polynomials of degree <= D that agree on D+1 points are equal.
    const long d = std::max({lhs.degree(), rhs.degree(), 0});
    for (long k = 1; k <= d + 2; ++k) report.add_row(k, lhs.at(k), rhs.at(k));
    return report;
  }

  std::unordered_map<std::string, Polynomial> cache_;
};

/// One-shot conveniences; sweeps should hold a ChromaticEngine to share the
/// memo across graphs.
inline Polynomial weak_chromatic_polynomial(const MixedGraph& g) {
  ChromaticEngine engine;
  return engine.weak(g);
}

inline Polynomial strong_chromatic_polynomial(const MixedGraph& g) {
  ChromaticEngine engine;
  return engine.strong(g);
}

}  // namespace chromix
