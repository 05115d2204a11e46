#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cutree/error.hpp"

namespace cutree {

using Vertex = int;

inline constexpr Vertex kNoParent = -1;

// An edge of a rooted tree, named by its endpoints. In a RootedTree every edge
// is uniquely identified by its child endpoint.
struct Edge {
  Vertex parent;
  Vertex child;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A rooted tree stored as a parent sequence in topological order.
///
/// Vertex 0 is the root; parent(v) < v for every other vertex, so acyclicity
/// and connectivity hold by construction. The empty tree (no vertices) is a
/// valid value and has edge count -1.
class RootedTree {
 public:
  RootedTree() = default;

  explicit RootedTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
    if (parent_.empty()) return;
    if (parent_[0] != kNoParent) {
      throw InvalidArgument("root must carry the sentinel parent " + std::to_string(kNoParent));
    }
    for (std::size_t v = 1; v < parent_.size(); ++v) {
      if (parent_[v] < 0 || static_cast<std::size_t>(parent_[v]) >= v) {
        throw InvalidArgument("parent of vertex " + std::to_string(v) + " must precede it, got " +
                              std::to_string(parent_[v]));
      }
    }
  }

  static RootedTree single_vertex() { return RootedTree(std::vector<Vertex>{kNoParent}); }

  bool empty() const noexcept { return parent_.empty(); }
  int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }
  int edge_count() const noexcept { return vertex_count() - 1; }

  Vertex root() const {
    if (empty()) throw InvalidArgument("the empty tree has no root");
    return 0;
  }

  Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> parents() const noexcept { return parent_; }

  bool is_edge(Vertex child) const noexcept { return child >= 1 && child < vertex_count(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 1; v < vertex_count(); ++v) out.push_back({parent_[v], v});
    return out;
  }

  // Children lists in increasing vertex order.
  std::vector<std::vector<Vertex>> children() const {
    std::vector<std::vector<Vertex>> out(parent_.size());
    for (Vertex v = 1; v < vertex_count(); ++v) out[parent_[v]].push_back(v);
    return out;
  }

  // Degree in the unrooted sense: incident edge count.
  std::vector<int> degrees() const {
    std::vector<int> deg(parent_.size(), 0);
    for (Vertex v = 1; v < vertex_count(); ++v) {
      ++deg[v];
      ++deg[parent_[v]];
    }
    return deg;
  }

  // Vertex counts of every rooted subtree.
  std::vector<int> subtree_sizes() const {
    std::vector<int> size(parent_.size(), 1);
    for (Vertex v = vertex_count() - 1; v >= 1; --v) size[parent_[v]] += size[v];
    return size;
  }

  std::vector<int> depths() const {
    std::vector<int> depth(parent_.size(), 0);
    for (Vertex v = 1; v < vertex_count(); ++v) depth[v] = depth[parent_[v]] + 1;
    return depth;
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(parent_.size());
    for (Vertex v = 1; v < vertex_count(); ++v) {
      adj[v].push_back(parent_[v]);
      adj[parent_[v]].push_back(v);
    }
    return adj;
  }

  int leaf_count() const {
    if (vertex_count() <= 1) return 0;
    int leaves = 0;
    for (int d : degrees()) leaves += (d == 1);
    return leaves;
  }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<Vertex> parent_;
};

/// Builds a rooted tree from an undirected adjacency list, rooted at `root`.
/// Vertices are renumbered in depth-first preorder, visiting neighbours in
/// list order. Only the component of `root` is kept.
inline RootedTree from_adjacency(const std::vector<std::vector<Vertex>>& adj, Vertex root) {
  if (adj.empty()) return {};
  if (root < 0 || static_cast<std::size_t>(root) >= adj.size()) {
    throw InvalidArgument("root " + std::to_string(root) + " out of range");
  }
  std::vector<Vertex> parent;
  std::vector<int> new_id(adj.size(), -1);
  // (vertex, parent id in output)
  std::vector<std::pair<Vertex, Vertex>> stack{{root, kNoParent}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    new_id[v] = static_cast<int>(parent.size());
    parent.push_back(p);
    // In a tree the only placed neighbour is the one we came from.
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (new_id[*it] == -1) stack.emplace_back(*it, new_id[v]);
    }
  }
  return RootedTree(std::move(parent));
}

/// The same unrooted tree rooted at `v`.
inline RootedTree reroot(const RootedTree& t, Vertex v) { return from_adjacency(t.adjacency(), v); }

}  // namespace cutree
