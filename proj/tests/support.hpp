// Shared fixtures and helpers for the test suite.
#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chromix/chromix.hpp"

namespace testsupport {

/// The running counterexample: triangle on {u,v,w} with one edge u-v and
/// arcs v->w, w->u. It is a cyclic mixed graph (one of its two orientations
/// contains a directed cycle).
inline chromix::MixedGraph mixed_triangle() {
  chromix::MixedGraph g;
  g.add_edge("u", "v");
  g.add_arc("v", "w");
  g.add_arc("w", "u");
  return g;
}

inline chromix::MixedGraph single_arc() {
  chromix::MixedGraph g;
  g.add_arc("u", "v");
  return g;
}

inline chromix::MixedGraph single_edge() {
  chromix::MixedGraph g;
  g.add_edge("u", "v");
  return g;
}

/// Directed 2-cycle on {x,w}: strongly connected.
inline chromix::MixedGraph two_cycle() {
  chromix::MixedGraph g;
  g.add_arc("x", "w");
  g.add_arc("w", "x");
  return g;
}

/// Edge u-v plus arc v->w: an acyclic mixed graph (the underlying graph is
/// a tree).
inline chromix::MixedGraph edge_arc_path() {
  chromix::MixedGraph g;
  g.add_edge("u", "v");
  g.add_arc("v", "w");
  return g;
}

inline chromix::MixedGraph pure_triangle() {
  chromix::MixedGraph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("a", "c");
  return g;
}

/// Unpruned direct count of maps {0..n-1} -> {1..k} satisfying a predicate.
/// Deliberately a different code path from the library's pruned search.
inline long long naive_count(int n, int k,
                             const std::function<bool(const std::vector<int>&)>& ok) {
  std::vector<int> color(n, 1);
  long long count = 0;
  while (true) {
    if (ok(color)) ++count;
    int i = 0;
    while (i < n && ++color[i] > k) color[i++] = 1;
    if (i == n) break;
  }
  if (n == 0) return ok(color) ? 1 : 0;
  return count;
}

/// Naive weak/strong proper-coloring counters straight off the definitions.
inline long long naive_weak(const chromix::MixedGraph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  return naive_count(n, k, [&](const std::vector<int>& c) {
    for (const auto& [a, b] : g.edges())
      if (c[g.vertex_index(a)] == c[g.vertex_index(b)]) return false;
    for (const auto& [a, b] : g.arcs())
      if (c[g.vertex_index(a)] > c[g.vertex_index(b)]) return false;
    return true;
  });
}

inline long long naive_strong(const chromix::MixedGraph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  return naive_count(n, k, [&](const std::vector<int>& c) {
    for (const auto& [a, b] : g.edges())
      if (c[g.vertex_index(a)] == c[g.vertex_index(b)]) return false;
    for (const auto& [a, b] : g.arcs())
      if (c[g.vertex_index(a)] >= c[g.vertex_index(b)]) return false;
    return true;
  });
}

struct CliResult {
  int exit_code;
  std::string output;
};

/// Run the built CLI with the given arguments, capturing stdout+stderr.
inline CliResult run_cli(const std::string& args) {
#ifdef CHROMIX_CLI_PATH
  const std::string cmd = std::string(CHROMIX_CLI_PATH) + " " + args + " 2>&1";
#else
  const std::string cmd = "chromix " + args + " 2>&1";
#endif
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult result{-1, ""};
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string data_file(const std::string& name) {
#ifdef CHROMIX_TEST_DATA
  return std::string(CHROMIX_TEST_DATA) + "/" + name;
#else
  return "tests/data/" + name;
#endif
}

}  // namespace testsupport
