// Finite posets with bijective labelings, order polynomials, the labeling
// construction that turns an orientation of an acyclic mixed graph into a
// labeled poset, and the order-polynomial reciprocity verifier.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromix/enumerate.hpp"
#include "chromix/error.hpp"
#include "chromix/graph.hpp"
#include "chromix/polynomial.hpp"
#include "chromix/report.hpp"

namespace chromix {

/// A finite partial order given by its full relation matrix. Reflexivity,
/// antisymmetry and transitivity are machine-checked at construction.
class Poset {
 public:
  Poset(std::vector<Vertex> elements, std::vector<std::vector<bool>> leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {
    const std::size_t n = elements_.size();
    if (leq_.size() != n)
      throw PosetError("relation matrix size does not match element count");
    for (const auto& row : leq_)
      if (row.size() != n)
        throw PosetError("relation matrix size does not match element count");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq_[i][i])
        throw PosetError("reflexivity violated at " + elements_[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq_[i][j] && leq_[j][i])
          throw PosetError("antisymmetry violated between " + elements_[i] +
                           " and " + elements_[j]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (leq_[i][j] && leq_[j][l] && !leq_[i][l])
            throw PosetError("transitivity violated: " + elements_[i] +
                             " <= " + elements_[j] + " <= " + elements_[l]);
  }

  /// Build from covering pairs (a <= b); the reflexive-transitive closure is
  /// taken first, so only antisymmetry can fail.
  static Poset from_relations(const std::vector<Vertex>& elements,
                              const std::vector<VertexPair>& relations) {
    const std::size_t n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    auto index = [&](const Vertex& v) -> std::size_t {
      auto it = std::find(elements.begin(), elements.end(), v);
      if (it == elements.end()) throw PosetError("unknown element: " + v);
      return static_cast<std::size_t>(it - elements.begin());
    };
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& [a, b] : relations) leq[index(a)][index(b)] = true;
    for (std::size_t m = 0; m < n; ++m)  // Floyd-Warshall closure
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][m])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[m][j]) leq[i][j] = true;
    return Poset(elements, leq);
  }

  const std::vector<Vertex>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }

  std::size_t index_of(const Vertex& v) const {
    auto it = std::find(elements_.begin(), elements_.end(), v);
    if (it == elements_.end()) throw PosetError("unknown element: " + v);
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && leq_ == other.leq_;
  }

  /// Longest chain length (number of elements on it). Used for the lower
  /// vanishing range of strict order polynomials.
  std::size_t longest_chain() const {
    const std::size_t n = size();
    std::vector<std::size_t> depth(n, 0);
    // Elements sorted by number of strict predecessors give a linear
    // extension, so one sweep suffices.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      std::size_t pa = 0, pb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != a && leq_[i][a]) ++pa;
        if (i != b && leq_[i][b]) ++pb;
      }
      return pa < pb;
    });
    std::size_t best = 0;
    for (std::size_t v : order) {
      depth[v] = 1;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && leq_[u][v]) depth[v] = std::max(depth[v], depth[u] + 1);
      best = std::max(best, depth[v]);
    }
    return best;
  }

 private:
  std::vector<Vertex> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// A bijection from the poset's elements onto {1..n}.
class Labeling {
 public:
  Labeling(Poset poset, std::vector<int> omega)
      : poset_(std::move(poset)), omega_(std::move(omega)) {
    const std::size_t n = poset_.size();
    if (omega_.size() != n)
      throw PosetError("labeling size does not match the poset");
    std::vector<bool> seen(n + 1, false);
    for (int x : omega_) {
      if (x < 1 || x > static_cast<int>(n) || seen[x])
        throw PosetError("labeling is not a bijection onto {1.." +
                         std::to_string(n) + "}");
      seen[x] = true;
    }
  }

  const Poset& poset() const { return poset_; }
  const std::vector<int>& omega() const { return omega_; }
  int label(std::size_t element_index) const { return omega_[element_index]; }

  /// True when u <= v implies omega(u) <= omega(v).
  bool is_natural() const {
    const std::size_t n = poset_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && poset_.leq(i, j) && omega_[i] > omega_[j]) return false;
    return true;
  }

 private:
  Poset poset_;
  std::vector<int> omega_;
};

/// The complementary labeling: v -> n+1-omega(v). An involution.
inline Labeling complementary_labeling(const Labeling& w) {
  const int n = static_cast<int>(w.poset().size());
  std::vector<int> omega = w.omega();
  for (int& x : omega) x = n + 1 - x;
  return Labeling(w.poset(), std::move(omega));
}

/// A natural labeling built by repeatedly removing a minimal element,
/// breaking ties by element input order.
inline Labeling natural_labeling(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> omega(n, 0);
  std::vector<bool> taken(n, false);
  for (int next = 1; next <= static_cast<int>(n); ++next) {
    for (std::size_t v = 0; v < n; ++v) {
      if (taken[v]) continue;
      bool minimal = true;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && !taken[u] && p.leq(u, v)) minimal = false;
      if (minimal) {
        omega[v] = next;
        taken[v] = true;
        break;
      }
    }
  }
  return Labeling(p, std::move(omega));
}

/// Order polynomial of a labeled poset: counts maps x: P -> [k] with
/// x_u <= x_v along relations where omega increases and x_u < x_v where it
/// decreases. Brute-force counts for k = 1..n+1 interpolated, with a
/// degree-stability re-sample at n+2.
inline Polynomial order_polynomial(const Poset& p, const Labeling& w) {
  if (w.poset() != p)
    throw PosetError("labeling belongs to a different poset");
  const std::size_t n = p.size();
  if (n > static_cast<std::size_t>(oracle_bound()))
    throw BoundError("poset too large for the brute-force order polynomial: " +
                     std::to_string(n) + " elements");
  std::vector<ColorConstraint> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq(i, j))
        cs.push_back({static_cast<int>(i), static_cast<int>(j),
                      w.label(i) < w.label(j) ? Rel::less_equal : Rel::less});
  std::vector<std::pair<Rational, Rational>> points;
  for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
    points.emplace_back(Rational(k),
                        Rational(static_cast<long>(detail::count_colorings(n, k, cs))));
  Polynomial result = interpolate(points);
  const long probe = static_cast<long>(n) + 2;
  if (result.at(probe) != Rational(static_cast<long>(detail::count_colorings(n, probe, cs))))
    throw PolynomialityError(
        "order-polynomial counts failed the degree-stability re-sample at k = " +
        std::to_string(probe));
  return result;
}

/// Translate an acyclic orientation into a poset: u <= v for each directed
/// pair u -> v, closed reflexively and transitively.
inline Poset poset_from_orientation(const Orientation& o) {
  if (!is_acyclic_orientation(o))
    throw PosetError("cyclic orientation cannot define a poset");
  std::vector<VertexPair> relations;
  for (const auto& pr : o.directed_pairs()) relations.push_back({pr.from, pr.to});
  return Poset::from_relations(o.base().vertices(), relations);
}

/// The labeling that makes the order polynomial of an orientation's poset
/// count its edge-strict colorings. Reverse the edge-born pairs (arcs stay),
/// then repeatedly peel a source vertex of the reversed digraph, assigning
/// labels 1,2,... and breaking ties by smallest vertex token. Requires the
/// underlying graph to be an acyclic mixed graph; otherwise the peeling can
/// jam, which is reported as an error.
inline Labeling labeling_from_orientation(const MixedGraph& g,
                                          const Orientation& o) {
  if (o.base() != g)
    throw GraphError("orientation mismatch: orientation was built from a "
                     "different graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<int, int>> reversed;
  for (const auto& p : o.directed_pairs()) {
    int u = static_cast<int>(g.vertex_index(p.from));
    int v = static_cast<int>(g.vertex_index(p.to));
    if (p.origin == PairOrigin::edge_born)
      reversed.emplace_back(v, u);
    else
      reversed.emplace_back(u, v);
  }
  std::vector<int> omega(n, 0);
  std::vector<bool> removed(n, false);
  for (int next = 1; next <= static_cast<int>(n); ++next) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v]) continue;
      bool source = true;
      for (const auto& [a, b] : reversed)
        if (!removed[a] && !removed[b] && b == static_cast<int>(v)) source = false;
      if (!source) continue;
      if (best == -1 || g.vertices()[v] < g.vertices()[best])
        best = static_cast<int>(v);
    }
    if (best == -1)
      throw GraphError("cycle detected while labeling: the underlying graph "
                       "is not an acyclic mixed graph");
    omega[best] = next;
    removed[best] = true;
  }
  return Labeling(poset_from_orientation(o), std::move(omega));
}

/// Order-polynomial reciprocity: Omega_{P,w}(-k) against
/// (-1)^|P| * Omega_{P,w-bar}(k) for k = 1..kmax.
inline VerificationReport verify_stanley_order(const Poset& p, const Labeling& w,
                                               int kmax) {
  Polynomial direct = order_polynomial(p, w);
  Polynomial complemented = order_polynomial(p, complementary_labeling(w));
  const int sign = p.size() % 2 == 0 ? 1 : -1;
  VerificationReport report;
  report.theorem = "stanley-order";
  std::string subject = "P[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) subject += ' ';
    subject += p.elements()[i] + ":" + std::to_string(w.label(i));
  }
  subject += "]";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) {
        subject += first ? " rel[" : " ";
        first = false;
        subject += p.elements()[i] + "<=" + p.elements()[j];
      }
  if (!first) subject += "]";
  report.subject = subject;
  for (long k = 1; k <= kmax; ++k)
    report.add_row(k, direct.at(-k), Rational(sign) * complemented.at(k));
  return report;
}

/// Per orientation of an acyclic mixed graph, check that the constructed
/// labeling's order polynomial counts the edge-strict colorings and that the
/// complementary labeling's counts the intercompatible ones, for k=1..kmax.
inline VerificationReport verify_orientation_labeling(const MixedGraph& g,
                                                      int kmax) {
  if (!is_acyclic_mixed(g))
    throw GraphError("not an acyclic mixed graph: " + g.key());
  VerificationReport report;
  report.theorem = "orientation-labeling";
  report.subject = g.key();
  for_each_orientation(g, [&](const Orientation& o) {
    Poset p = poset_from_orientation(o);
    Labeling w = labeling_from_orientation(g, o);
    Polynomial direct = order_polynomial(p, w);
    Polynomial complemented = order_polynomial(p, complementary_labeling(w));
    for (long k = 1; k <= kmax; ++k) {
      report.add_row(k, direct.at(k),
                     Rational(static_cast<long>(count_edge_strict(g, o, k))));
      report.add_row(k, complemented.at(k),
                     Rational(static_cast<long>(count_intercompatible(g, o, k))));
    }
  });
  return report;
}

// ---------------------------------------------------------------------------
// Poset universe generation for exhaustive sweeps.

/// All labeled posets on n elements (tokens p1..pn): every labeled DAG's
/// reflexive-transitive closure, deduplicated by relation matrix.
inline std::vector<Poset> all_posets(int n) {
  if (n < 0) throw Error("element count must be nonnegative");
  if (n > 5)
    throw BoundError("poset universe bound exceeded: n = " + std::to_string(n));
  std::vector<Vertex> names;
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  std::set<std::vector<std::vector<bool>>> seen;
  const unsigned long long total = 1ULL << slots.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1ULL) arcs.push_back(slots[s]);
    if (!detail::acyclic_index_pairs(static_cast<std::size_t>(n), arcs)) continue;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& [a, b] : arcs) leq[a][b] = true;
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i)
        if (leq[i][m])
          for (int j = 0; j < n; ++j)
            if (leq[m][j]) leq[i][j] = true;
    if (seen.insert(leq).second) out.emplace_back(names, leq);
  }
  return out;
}

/// All n! labelings of a poset, in lexicographic permutation order.
inline std::vector<Labeling> all_labelings(const Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Labeling> out;
  do {
    out.emplace_back(p, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Labeling random_labeling(const Poset& p, std::mt19937& rng) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Labeling(p, std::move(perm));
}

}  // namespace chromix
