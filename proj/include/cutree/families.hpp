#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cutree/enumerate.hpp"
#include "cutree/error.hpp"
#include "cutree/tree.hpp"

namespace cutree {

/// Leg lengths of a spider, kept sorted non-decreasing. Spiders of size m
/// correspond one-to-one with integer partitions of m.
class SpiderSignature {
 public:
  SpiderSignature() = default;
  explicit SpiderSignature(std::vector<int> legs) : legs_(std::move(legs)) {
    for (int len : legs_) {
      if (len < 1) throw InvalidArgument("spider legs must have length >= 1, got " + std::to_string(len));
    }
    std::sort(legs_.begin(), legs_.end());
  }

  const std::vector<int>& legs() const noexcept { return legs_; }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
  int size() const noexcept {
    int s = 0;
    for (int len : legs_) s += len;
    return s;
  }

  friend bool operator==(const SpiderSignature&, const SpiderSignature&) = default;

 private:
  std::vector<int> legs_;
};

/// Spider rooted at its centre.
inline RootedTree new_spider(const SpiderSignature& sig) {
  std::vector<Vertex> parent{kNoParent};
  for (int len : sig.legs()) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      parent.push_back(prev);
      prev = static_cast<Vertex>(parent.size() - 1);
    }
  }
  return RootedTree(std::move(parent));
}

inline RootedTree new_spider(std::vector<int> legs) { return new_spider(SpiderSignature(std::move(legs))); }

struct FamilyFlags {
  bool is_spider = false;
  bool is_brush = false;
  bool is_comb = false;
  std::optional<int> comb_length;

  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

// Spider test ignores the root: at most one vertex may have degree above 2.
inline bool is_spider(const RootedTree& t) {
  int branching = 0;
  for (int d : t.degrees()) branching += (d > 2);
  return branching <= 1;
}

/// Leg lengths read off an unrooted spider, or nullopt when `t` is not one.
/// Paths report a single leg (their own length).
inline std::optional<SpiderSignature> spider_signature(const RootedTree& t) {
  if (t.empty() || !is_spider(t)) return std::nullopt;
  const auto deg = t.degrees();
  const auto adj = t.adjacency();
  Vertex center = 0;
  auto it = std::find_if(deg.begin(), deg.end(), [](int d) { return d > 2; });
  if (it != deg.end()) {
    center = static_cast<Vertex>(it - deg.begin());
  } else {
    auto leaf = std::find(deg.begin(), deg.end(), 1);
    if (leaf != deg.end()) center = static_cast<Vertex>(leaf - deg.begin());
  }
  std::vector<int> legs;
  for (Vertex first : adj[center]) {
    int len = 1;
    Vertex prev = center, cur = first;
    while (adj[cur].size() == 2) {
      Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  return SpiderSignature(std::move(legs));
}

/// Deepest vertex of degree > 2 when all such vertices lie on one path issued
/// from the root (the root itself if there are none); nullopt otherwise.
inline std::optional<Vertex> brush_anchor(const RootedTree& t) {
  const auto deg = t.degrees();
  const auto depth = t.depths();
  Vertex deepest = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (deg[v] > 2 && depth[v] > depth[deepest]) deepest = v;
  }
  std::vector<char> on_path(deg.size(), 0);
  for (Vertex v = deepest; v != kNoParent; v = t.parent(v)) on_path[v] = 1;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (deg[v] > 2 && !on_path[v]) return std::nullopt;
  }
  return deepest;
}

inline FamilyFlags classify(const RootedTree& t) {
  if (t.empty()) throw InvalidArgument("cannot classify the empty tree");
  FamilyFlags flags;
  flags.is_spider = is_spider(t);
  const auto anchor = brush_anchor(t);
  flags.is_brush = anchor.has_value();
  if (!flags.is_brush) return flags;
  const auto deg = t.degrees();
  const bool degrees_ok = deg[0] <= 2 && std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 3; });
  flags.is_comb = degrees_ok;
  if (flags.is_comb) {
    // Longest root path through the anchor: the deepest vertex below it.
    const auto depth = t.depths();
    std::vector<char> below(deg.size(), 0);
    below[*anchor] = 1;
    int longest = depth[*anchor];
    for (Vertex v = *anchor + 1; v < t.vertex_count(); ++v) {
      if (below[t.parent(v)]) {
        below[v] = 1;
        longest = std::max(longest, depth[v]);
      }
    }
    flags.comb_length = longest;
  }
  return flags;
}

/// Integer partitions of m as non-decreasing leg lists, in lexicographic order.
inline std::vector<SpiderSignature> enumerate_spiders(int m) {
  if (m < 1) throw InvalidArgument("spider size must be >= 1");
  std::vector<SpiderSignature> out;
  std::vector<int> parts;
  // Extend `parts` with legs >= min_leg summing to `rest`.
  auto rec = [&](auto&& self, int rest, int min_leg) -> void {
    if (rest == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int leg = min_leg; leg <= rest; ++leg) {
      if (rest - leg != 0 && rest - leg < leg) continue;
      parts.push_back(leg);
      self(self, rest - leg, leg);
      parts.pop_back();
    }
  };
  rec(rec, m, 1);
  return out;
}

inline std::vector<RootedTree> enumerate_brushes(int m, const EnumerationLimits& limits = {}) {
  if (m < 1) throw InvalidArgument("brush size must be >= 1");
  std::vector<RootedTree> out;
  for (RootedTree& t : enumerate_rooted_trees(m, limits)) {
    if (brush_anchor(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace cutree
