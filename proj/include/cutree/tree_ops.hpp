#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cutree/canonical.hpp"
#include "cutree/error.hpp"
#include "cutree/tree.hpp"

namespace cutree {

/// Path with `size` edges rooted at an endpoint; size -1 is the empty tree.
inline RootedTree new_path(int size) {
  if (size < -1) throw InvalidArgument("path size must be >= -1, got " + std::to_string(size));
  std::vector<Vertex> parent(static_cast<std::size_t>(size + 1));
  for (int v = 0; v <= size; ++v) parent[v] = v - 1;
  return RootedTree(std::move(parent));
}

/// Hangs `components[i]` below spine vertex v_{i+1} of a fresh path
/// v_1 ... v_{k+1}, rooted at v_1. Empty components get no link edge.
///
/// The spine occupies vertices 0..k of the result, so callers can recover it.
inline RootedTree join(std::span<const RootedTree> components) {
  if (components.empty()) throw InvalidArgument("join needs at least one component");
  const int k = static_cast<int>(components.size());
  std::vector<Vertex> parent(static_cast<std::size_t>(k + 1));
  for (int v = 0; v <= k; ++v) parent[v] = v - 1;
  for (int i = 0; i < k; ++i) {
    const RootedTree& comp = components[i];
    if (comp.empty()) continue;
    const Vertex offset = static_cast<Vertex>(parent.size());
    parent.push_back(i);
    for (Vertex v = 1; v < comp.vertex_count(); ++v) parent.push_back(comp.parent(v) + offset);
  }
  return RootedTree(std::move(parent));
}

inline RootedTree join(std::initializer_list<RootedTree> components) {
  return join(std::span<const RootedTree>(components.begin(), components.size()));
}

/// Contracts every edge named by its child endpoint in `edges`. Each block of
/// merged vertices is represented by its topmost vertex, so the root's block
/// stays the root and topological order is preserved.
inline RootedTree contract_edges(const RootedTree& t, std::span<const Vertex> edges) {
  const int n = t.vertex_count();
  std::vector<char> merged(static_cast<std::size_t>(n), 0);
  for (Vertex c : edges) {
    if (!t.is_edge(c)) throw InvalidArgument("vertex " + std::to_string(c) + " does not name an edge");
    merged[c] = 1;
  }
  // top[v]: topmost vertex of v's block. Parents precede children, so one pass suffices.
  std::vector<Vertex> top(static_cast<std::size_t>(n));
  std::vector<Vertex> new_id(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent;
  for (Vertex v = 0; v < n; ++v) {
    if (v > 0 && merged[v]) {
      top[v] = top[t.parent(v)];
      continue;
    }
    top[v] = v;
    new_id[v] = static_cast<Vertex>(parent.size());
    parent.push_back(v == 0 ? kNoParent : new_id[top[t.parent(v)]]);
  }
  return RootedTree(std::move(parent));
}

inline RootedTree contract_edge(const RootedTree& t, Vertex child) {
  const Vertex e[] = {child};
  return contract_edges(t, e);
}

/// Removes every leaf of the unrooted tree. A lone vertex is its own image and
/// a single edge prunes to the empty tree. The survivor is re-rooted at the
/// vertex giving the smallest rooted canonical code.
inline RootedTree prune(const RootedTree& t) {
  const int n = t.vertex_count();
  if (n <= 1) return t;
  if (n == 2) return {};
  const auto deg = t.degrees();
  const auto adj = t.adjacency();
  std::vector<int> keep_id(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] >= 2) keep_id[v] = kept++;
  }
  std::vector<std::vector<Vertex>> inner(static_cast<std::size_t>(kept));
  for (Vertex v = 0; v < n; ++v) {
    if (keep_id[v] < 0) continue;
    for (Vertex w : adj[v]) {
      if (keep_id[w] >= 0) inner[keep_id[v]].push_back(keep_id[w]);
    }
  }
  const RootedTree core = from_adjacency(inner, 0);
  Vertex best = 0;
  unrooted_code(core, &best);
  return reroot(core, best);
}

/// k-fold application of prune.
inline RootedTree prune(const RootedTree& t, int times) {
  RootedTree out = t;
  for (int i = 0; i < times; ++i) out = prune(out);
  return out;
}

}  // namespace cutree
