#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cutree/canonical.hpp"
#include "cutree/error.hpp"
#include "cutree/families.hpp"
#include "cutree/tree.hpp"
#include "cutree/tree_ops.hpp"

namespace cutree {

/// Exponent of the largest power of two dividing k.
inline int two_valuation(long long k) {
  if (k < 1) throw InvalidArgument("2-valuation needs k >= 1, got " + std::to_string(k));
  return std::countr_zero(static_cast<unsigned long long>(k));
}

/// A function f: {1..p} -> {0, 1, ...} that sets the tooth sizes of a comb.
/// Value 0 is allowed and produces an empty tooth.
struct StemFunction {
  int p = 0;
  std::vector<int> values;  // values[i - 1] = f(i)
  std::string name = "custom";

  int operator()(int i) const {
    if (i < 1 || i > p) throw InvalidArgument("stem function argument " + std::to_string(i) + " outside 1.." +
                                              std::to_string(p));
    return values[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const StemFunction&, const StemFunction&) = default;
};

inline StemFunction make_stem_function(std::vector<int> values, std::string name = "custom") {
  StemFunction f{static_cast<int>(values.size()), std::move(values), std::move(name)};
  for (int v : f.values) {
    if (v < 0) throw InvalidArgument("stem function values must be non-negative");
  }
  return f;
}

/// phi_p(i) = min(2^(v2(i)+1) - 1, floor(p/2), i - 1).
inline StemFunction phi_function(int p) {
  if (p < 1) throw InvalidArgument("phi_p needs p >= 1");
  std::vector<int> values(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    const long long pow = (1LL << (two_valuation(i) + 1)) - 1;
    values[i - 1] = static_cast<int>(std::min<long long>({pow, p / 2, i - 1}));
  }
  return {p, std::move(values), "phi"};
}

/// g_m(i) = min(2^(v2(i)+1), i) for even i < m, 1 for odd i < m, and
/// g_m(m) = floor(m/4). The last clause wins when m is odd.
inline StemFunction g_function(int m) {
  if (m < 1) throw InvalidArgument("g_m needs m >= 1");
  std::vector<int> values(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) {
    values[i - 1] = (i % 2 == 1) ? 1 : static_cast<int>(std::min<long long>(1LL << (two_valuation(i) + 1), i));
  }
  values[m - 1] = m / 4;
  return {m, std::move(values), "g"};
}

/// Window covering test: for every n <= p and i <= floor(n/2) some k in
/// [n-i+1, n] has f(k) >= i. The codomain bound is not checked.
inline bool is_in_family_F(const StemFunction& f) {
  for (int n = 1; n <= f.p; ++n) {
    int window_max = 0;
    for (int i = 1; i <= n / 2; ++i) {
      window_max = std::max(window_max, f(n - i + 1));
      if (window_max < i) return false;
    }
  }
  return true;
}

/// A family of stem functions indexed by comb size.
///
/// With `powers_of_two_only`, universality is only claimed at powers of two,
/// so a requested tree size is rounded up to the next power of two.
class CombSequence {
 public:
  CombSequence(std::string name, std::function<StemFunction(int)> generator, bool powers_of_two_only = false)
      : name_(std::move(name)), generator_(std::move(generator)), powers_of_two_only_(powers_of_two_only) {}

  const std::string& name() const noexcept { return name_; }
  bool powers_of_two_only() const noexcept { return powers_of_two_only_; }

  StemFunction at(int m) const {
    StemFunction f = generator_(m);
    if (f.p != m || static_cast<int>(f.values.size()) != m) {
      throw InvalidArgument("sequence " + name_ + " has no stem function for m = " + std::to_string(m));
    }
    return f;
  }

  // Size actually built when a tree of `m` is requested; -1 and 0 are fixed.
  int effective_size(int m) const {
    if (!powers_of_two_only_ || m <= 0) return m;
    return static_cast<int>(std::bit_ceil(static_cast<unsigned>(m)));
  }

 private:
  std::string name_;
  std::function<StemFunction(int)> generator_;
  bool powers_of_two_only_;
};

inline CombSequence phi_sequence() { return CombSequence("phi", phi_function); }

inline CombSequence g_sequence() { return CombSequence("g", g_function, true); }

/// Sequence backed by an explicit table of stem functions keyed by p.
inline CombSequence table_sequence(std::map<int, StemFunction> table, std::string name = "custom") {
  auto shared = std::make_shared<const std::map<int, StemFunction>>(std::move(table));
  return CombSequence(std::move(name), [shared](int m) {
    auto it = shared->find(m);
    if (it == shared->end()) throw InvalidArgument("stem function f_" + std::to_string(m) + " is missing");
    return it->second;
  });
}

struct MonotoneViolation {
  int i;  // f_i(k) > f_{i+1}(k)
  int k;
};

/// Pairs (i, k) with 1 <= k <= i < max_i where f_i(k) > f_{i+1}(k).
inline std::vector<MonotoneViolation> monotone_violations(const CombSequence& seq, int max_i) {
  std::vector<MonotoneViolation> out;
  for (int i = 1; i < max_i; ++i) {
    const StemFunction a = seq.at(i);
    const StemFunction b = seq.at(i + 1);
    for (int k = 1; k <= i; ++k) {
      if (a(k) > b(k)) out.push_back({i, k});
    }
  }
  return out;
}

/// Tooth sizes of Comb_m, listed from the root end of the spine: tooth i has
/// f_m(m + 1 - i) - 1 edges, where -1 means no tooth.
inline std::vector<int> comb_teeth(const CombSequence& seq, int m) {
  if (m < 1) return {};
  const StemFunction f = seq.at(m);
  std::vector<int> teeth(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) teeth[i - 1] = f(m + 1 - i) - 1;
  return teeth;
}

/// Comb_m: spine of m edges with the teeth of comb_teeth; Comb_0 is a vertex.
inline RootedTree build_comb(const CombSequence& seq, int m) {
  if (m < 0) throw InvalidArgument("comb size must be non-negative");
  if (m == 0) return RootedTree::single_vertex();
  std::vector<RootedTree> teeth;
  for (int size : comb_teeth(seq, m)) teeth.push_back(new_path(size));
  return join(teeth);
}

/// Index of the tree substituted for a tooth of `tooth_size` edges in T_i.
inline int substituted_index(int i, int tooth_size) { return std::min(tooth_size, i - 1); }

/// Tree_m: each tooth P_u of Comb_i is replaced by T_min(u, i-1), recursively,
/// with T_-1 empty and T_0 a single vertex. Every T_i is built once.
///
/// For sequences restricted to powers of two the requested m is rounded up
/// first; the recursion below it uses every T_i as defined.
inline RootedTree ramify(const CombSequence& seq, int m) {
  if (m < 0) throw InvalidArgument("tree size must be non-negative");
  std::map<int, RootedTree> memo{{-1, RootedTree{}}, {0, RootedTree::single_vertex()}};
  auto build = [&](auto&& self, int i) -> const RootedTree& {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    std::vector<RootedTree> parts;
    for (int size : comb_teeth(seq, i)) parts.push_back(self(self, substituted_index(i, size)));
    return memo.emplace(i, join(parts)).first->second;
  };
  return build(build, seq.effective_size(m));
}

/// A root path given as vertex ids, root first, each the parent of the next.
using RootPath = std::vector<Vertex>;

inline bool is_root_path(const RootedTree& t, const RootPath& path) {
  if (path.empty() || path.front() != 0 || t.empty()) return false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!t.is_edge(path[i]) || t.parent(path[i]) != path[i - 1]) return false;
  }
  return true;
}

/// Main stem following the existence proof: from the root, repeatedly step
/// into a child subtree of maximum size (smallest canonical code on ties)
/// until a leaf is reached.
inline RootPath main_stem(const RootedTree& t) {
  if (t.empty()) throw InvalidArgument("the empty tree has no stem");
  const auto kids = t.children();
  const auto size = t.subtree_sizes();
  const auto codes = subtree_codes(t);
  RootPath stem{0};
  for (Vertex v = 0; !kids[v].empty();) {
    Vertex best = kids[v].front();
    for (Vertex c : kids[v]) {
      if (size[c] > size[best] || (size[c] == size[best] && codes[c] < codes[best])) best = c;
    }
    stem.push_back(best);
    v = best;
  }
  return stem;
}

/// Edge counts of the e-branches hanging off `stem` (edges leaving a stem
/// vertex that are not stem edges); the branch excludes e itself.
inline std::vector<int> off_stem_branch_sizes(const RootedTree& t, const RootPath& stem) {
  if (!is_root_path(t, stem)) throw InvalidArgument("not a root path of the tree");
  std::vector<char> on_stem(static_cast<std::size_t>(t.vertex_count()), 0);
  for (Vertex v : stem) on_stem[v] = 1;
  const auto size = t.subtree_sizes();
  std::vector<int> out;
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    if (!on_stem[v] && on_stem[t.parent(v)]) out.push_back(size[v] - 1);
  }
  return out;
}

/// Every e-branch of a tree of size m, not only those adjacent to the stem,
/// has fewer than floor(m/2) edges.
inline bool is_main_stem(const RootedTree& t, const RootPath& stem) {
  if (!is_root_path(t, stem)) return false;
  const int half = t.edge_count() / 2;
  for (int s : off_stem_branch_sizes(t, stem)) {
    if (s >= half) return false;
  }
  return true;
}

/// Replaces each e-branch hanging off the stem by a path of the same edge
/// count attached through the same edge. The result keeps the stem as
/// vertices 0..len and has the size of `t`.
inline RootedTree brushing(const RootedTree& t, const RootPath& stem) {
  if (!is_root_path(t, stem)) throw InvalidArgument("brushing needs a root path of the tree");
  std::vector<char> on_stem(static_cast<std::size_t>(t.vertex_count()), 0);
  for (Vertex v : stem) on_stem[v] = 1;
  std::vector<Vertex> stem_pos(static_cast<std::size_t>(t.vertex_count()), -1);
  for (std::size_t i = 0; i < stem.size(); ++i) stem_pos[stem[i]] = static_cast<Vertex>(i);
  const auto size = t.subtree_sizes();

  std::vector<Vertex> parent;
  for (std::size_t i = 0; i < stem.size(); ++i) parent.push_back(static_cast<Vertex>(i) - 1);
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    if (on_stem[v] || !on_stem[t.parent(v)]) continue;
    // Path of size[v] vertices: one for the link endpoint plus size[v]-1 edges.
    Vertex prev = stem_pos[t.parent(v)];
    for (int j = 0; j < size[v]; ++j) {
      parent.push_back(prev);
      prev = static_cast<Vertex>(parent.size() - 1);
    }
  }
  return RootedTree(std::move(parent));
}

}  // namespace cutree
