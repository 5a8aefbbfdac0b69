#include "chiralwalk/support_graph.hpp"

#include <algorithm>
#include <deque>

namespace chiralwalk {

bool SupportGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges.begin(), edges.end(), Edge(a, b));
}

bool SupportGraph::has_loop(int v) const {
  return std::binary_search(loops.begin(), loops.end(), v);
}

double support_cutoff(const HermitianMatrix& h, double rel_tol) {
  return rel_tol * h.max_abs();
}

SupportGraph support(const HermitianMatrix& h, double tol) {
  const int n = h.dim();
  SupportGraph g;
  g.n = n;
  g.adjacency.resize(n);
  for (int j = 0; j < n; ++j) {
    if (std::abs(h(j, j)) > tol) g.loops.push_back(j);
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(h(j, k)) > tol) {
        g.edges.emplace_back(j, k);
        g.adjacency[j].push_back(k);
        g.adjacency[k].push_back(j);
      }
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());

  // Connected components, lowest-index vertex first.
  g.component_of.assign(n, -1);
  for (int root = 0; root < n; ++root) {
    if (g.component_of[root] >= 0) continue;
    const int id = static_cast<int>(g.components.size());
    std::vector<int> members;
    std::deque<int> queue{root};
    g.component_of[root] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : g.adjacency[v]) {
        if (g.component_of[w] < 0) {
          g.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    g.components.push_back(std::move(members));
  }
  return g;
}

SupportGraph support(const HermitianMatrix& h) {
  return support(h, support_cutoff(h, 1e-12));
}

CycleWalk canonical_cycle(const CycleWalk& c) {
  const int k = c.length();
  if (k <= 1) return c;
  const auto min_it = std::min_element(c.vertices.begin(), c.vertices.end());
  const int offset = static_cast<int>(min_it - c.vertices.begin());
  std::vector<int> rotated(k);
  for (int i = 0; i < k; ++i) rotated[i] = c.vertices[(offset + i) % k];
  if (rotated[1] > rotated[k - 1]) {
    std::reverse(rotated.begin() + 1, rotated.end());
  }
  return CycleWalk{std::move(rotated)};
}

namespace {

// Walks the two tree paths up to their meeting point and splices them into
// the simple cycle closed by the off-tree edge (u, v).
CycleWalk splice_cycle(const std::vector<int>& parent,
                       const std::vector<int>& depth, int u, int v) {
  std::vector<int> up_u{u}, up_v{v};
  int a = u, b = v;
  while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
  while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
  while (a != b) {
    up_u.push_back(a = parent[a]);
    up_v.push_back(b = parent[b]);
  }
  // up_u ends at the meeting point; append the v-side path back down.
  std::vector<int> cycle = std::move(up_u);
  for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it)
    cycle.push_back(*it);
  return canonical_cycle(CycleWalk{std::move(cycle)});
}

}  // namespace

ComponentColoring color_components(const SupportGraph& g) {
  const int n = g.n;
  ComponentColoring out;
  out.side.assign(n, Side::A);
  out.bipartite.assign(g.components.size(), true);
  out.odd_cycles.resize(g.components.size());

  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  for (size_t ci = 0; ci < g.components.size(); ++ci) {
    const int root = g.components[ci].front();
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          out.side[w] = out.side[v] == Side::A ? Side::B : Side::A;
          queue.push_back(w);
        } else if (out.side[w] == out.side[v] && !out.odd_cycles[ci]) {
          out.bipartite[ci] = false;
          out.odd_cycles[ci] = splice_cycle(parent, depth, v, w);
        }
      }
    }
  }
  return out;
}

BipartitenessResult is_bipartite(const SupportGraph& g) {
  ComponentColoring coloring = color_components(g);
  for (size_t ci = 0; ci < coloring.bipartite.size(); ++ci) {
    if (!coloring.bipartite[ci])
      return {std::nullopt, std::move(coloring.odd_cycles[ci])};
  }
  return {Bipartition{std::move(coloring.side)}, std::nullopt};
}

SpanningForest spanning_forest(const SupportGraph& g) {
  const int n = g.n;
  SpanningForest f;
  f.parent.assign(n, -1);
  f.order.reserve(n);
  std::vector<char> seen(n, 0);
  for (const auto& comp : g.components) {
    const int root = comp.front();
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      f.order.push_back(v);
      for (int w : g.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          f.parent[w] = v;
          f.tree_edges.emplace_back(v, w);
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(f.tree_edges.begin(), f.tree_edges.end());
  std::set_difference(g.edges.begin(), g.edges.end(), f.tree_edges.begin(),
                      f.tree_edges.end(), std::back_inserter(f.chords));
  return f;
}

std::vector<CycleWalk> fundamental_cycles(const SupportGraph& g,
                                          const SpanningForest& f) {
  std::vector<int> depth(g.n, 0);
  for (int v : f.order)
    if (f.parent[v] >= 0) depth[v] = depth[f.parent[v]] + 1;

  std::vector<CycleWalk> cycles;
  cycles.reserve(f.chords.size());
  for (const Edge& chord : f.chords)
    cycles.push_back(splice_cycle(f.parent, depth, chord.u, chord.v));
  return cycles;
}

bool is_tree(const SupportGraph& g) {
  return g.edges.size() + g.components.size() == static_cast<size_t>(g.n);
}

}  // namespace chiralwalk
