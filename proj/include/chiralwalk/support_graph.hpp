#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "chiralwalk/hermitian.hpp"

namespace chiralwalk {

/// Undirected edge with endpoints stored in increasing order.
struct Edge {
  int u;
  int v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

/// Support of a Hermitian matrix: an edge wherever the off-diagonal modulus
/// clears the cutoff, a loop wherever the diagonal does.
struct SupportGraph {
  int n = 0;
  std::vector<Edge> edges;                  // sorted lexicographically
  std::vector<int> loops;                   // sorted
  std::vector<std::vector<int>> adjacency;  // neighbor lists, ascending
  std::vector<std::vector<int>> components; // sorted, ordered by min vertex
  std::vector<int> component_of;

  bool has_edge(int a, int b) const;
  bool has_loop(int v) const;
};

/// Builds the support with an absolute cutoff: edge iff |H_jk| > tol.
SupportGraph support(const HermitianMatrix& h, double tol);

/// Default cutoff 1e-12 relative to the max entry modulus.
SupportGraph support(const HermitianMatrix& h);

/// Absolute cutoff corresponding to a relative tolerance.
double support_cutoff(const HermitianMatrix& h, double rel_tol);

enum class Side { A, B };

struct Bipartition {
  std::vector<Side> side;  // one label per vertex
};

/// Closed walk i1 -> i2 -> ... -> ik -> i1, stored without repeating the
/// closing vertex. A single vertex denotes a self-loop.
struct CycleWalk {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleWalk&) const = default;
};

/// Rotates a simple cycle so the smallest vertex leads and the traversal
/// heads toward the smaller of its two neighbors.
CycleWalk canonical_cycle(const CycleWalk& c);

struct BipartitenessResult {
  std::optional<Bipartition> bipartition;
  std::optional<CycleWalk> odd_cycle;  // certificate when not bipartite
  bool is_bipartite() const { return bipartition.has_value(); }
};

/// Two-colors every component (loops ignored) or returns an odd closed walk
/// present in the graph. Total; never throws.
BipartitenessResult is_bipartite(const SupportGraph& g);

/// Per-component two-coloring; roots are colored Side::A. Where a component
/// is not bipartite its sides are meaningless and an odd cycle is recorded.
struct ComponentColoring {
  std::vector<Side> side;                            // per vertex
  std::vector<bool> bipartite;                       // per component
  std::vector<std::optional<CycleWalk>> odd_cycles;  // per component
};

ComponentColoring color_components(const SupportGraph& g);

struct SpanningForest {
  std::vector<int> parent;       // -1 at component roots
  std::vector<int> order;        // breadth-first visit order
  std::vector<Edge> tree_edges;  // sorted
  std::vector<Edge> chords;      // edges \ tree_edges, sorted
};

/// Deterministic forest: breadth-first from the lowest-index vertex of each
/// component, neighbors visited in ascending index order.
SpanningForest spanning_forest(const SupportGraph& g);

/// One simple cycle per chord: the tree path between the chord endpoints
/// closed by the chord, in canonical presentation, ordered by chord.
std::vector<CycleWalk> fundamental_cycles(const SupportGraph& g,
                                          const SpanningForest& f);

/// True iff the loop-free graph is a forest (each component a tree).
bool is_tree(const SupportGraph& g);

}  // namespace chiralwalk
