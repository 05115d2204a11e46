#pragma once

#include <set>
#include <string>
#include <vector>

#include "cutree/canonical.hpp"
#include "cutree/error.hpp"
#include "cutree/tree.hpp"

namespace cutree {

struct EnumerationLimits {
  static constexpr int kHardMax = 16;
  int max_edges = 12;
};

inline void check_enumeration_limit(int m, const EnumerationLimits& limits) {
  if (limits.max_edges > EnumerationLimits::kHardMax) {
    throw InvalidArgument("enumeration cap " + std::to_string(limits.max_edges) + " exceeds hard maximum " +
                          std::to_string(EnumerationLimits::kHardMax));
  }
  if (m > limits.max_edges) {
    throw ResourceLimit("enumeration of size " + std::to_string(m) + " exceeds cap " +
                        std::to_string(limits.max_edges));
  }
}

/// One tree per rooted isomorphism class with `m` edges, in canonical
/// numbering, ordered by canonical code.
///
/// Size m+1 trees come from hanging a new leaf under every vertex of each
/// size m representative; duplicates collapse on their canonical codes.
inline std::vector<RootedTree> enumerate_rooted_trees(int m, const EnumerationLimits& limits = {}) {
  if (m < 0) throw InvalidArgument("tree size must be non-negative");
  check_enumeration_limit(m, limits);
  std::set<std::string> level{"()"};
  for (int size = 1; size <= m; ++size) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      const RootedTree t = parse_code(code);
      std::vector<Vertex> parent(t.parents().begin(), t.parents().end());
      parent.push_back(0);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        parent.back() = v;
        next.insert(canonical_code(RootedTree(parent)).text);
      }
    }
    level = std::move(next);
  }
  std::vector<RootedTree> out;
  out.reserve(level.size());
  for (const std::string& code : level) out.push_back(parse_code(code));
  return out;
}

}  // namespace cutree
