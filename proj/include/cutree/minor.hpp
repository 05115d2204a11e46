#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "cutree/canonical.hpp"
#include "cutree/error.hpp"
#include "cutree/tree.hpp"
#include "cutree/tree_ops.hpp"

namespace cutree {

/// Host edges (named by child vertex, sorted) whose contraction yields the guest.
struct ContractionWitness {
  std::vector<Vertex> contracted;

  int size() const noexcept { return static_cast<int>(contracted.size()); }

  friend bool operator==(const ContractionWitness&, const ContractionWitness&) = default;
};

/// Replays a witness on the host.
inline RootedTree apply_witness(const RootedTree& host, const ContractionWitness& w) {
  return contract_edges(host, w.contracted);
}

namespace detail {

using Mask = std::uint32_t;

inline constexpr int kMaxGuestDegree = 20;

// Dynamic program for rooted contraction containment.
//
// For host vertex x and guest vertex y, reach(x, y) lists every set S of
// y's children such that the host subtree at x splits into connected blocks
// with x in the top block, the top block's exits matched one-to-one with S,
// and each exit subtree contracting onto its matched guest child. The host
// subtree at x contracts onto the guest subtree at y iff all of y's children
// are reachable. Every host vertex must land in some block, so an unmatched
// host child is absorbed into the top block together with its own subtree.
class ContractionTable {
 public:
  ContractionTable(const RootedTree& guest, const RootedTree& host)
      : guest_(guest), host_(host), guest_kids_(guest.children()), host_kids_(host.children()) {
    if (guest.empty() || host.empty()) throw InvalidArgument("containment needs non-empty trees");
    for (const auto& kids : guest_kids_) {
      if (kids.size() > static_cast<std::size_t>(kMaxGuestDegree)) {
        throw ResourceLimit("guest degree " + std::to_string(kids.size()) + " exceeds the matcher limit of " +
                            std::to_string(kMaxGuestDegree));
      }
    }
    if (guest.vertex_count() > host.vertex_count()) return;
    const int gn = guest.vertex_count();
    const int hn = host.vertex_count();
    host_size_ = host.subtree_sizes();
    guest_size_ = guest.subtree_sizes();
    reach_.assign(static_cast<std::size_t>(gn) * hn, {});
    fits_.assign(static_cast<std::size_t>(gn) * hn, 0);
    for (Vertex x = hn - 1; x >= 0; --x) {
      for (Vertex y = 0; y < gn; ++y) {
        std::vector<Mask> acc{0};
        for (Vertex c : host_kids_[x]) acc = combine(acc, options(c, y));
        const bool fits = host_size_[x] >= guest_size_[y] && std::binary_search(acc.begin(), acc.end(), full(y));
        fits_[index(x, y)] = fits;
        reach_[index(x, y)] = std::move(acc);
      }
    }
    computed_ = true;
  }

  bool contains() const { return computed_ && fits_[index(0, 0)]; }

  // Contracted host edges for one embedding. Host children are decided in
  // vertex order, each preferring to stay an exit (edge kept) and then the
  // lowest-indexed guest child; absorption is the fallback.
  std::optional<ContractionWitness> witness() const {
    if (!contains()) return std::nullopt;
    ContractionWitness w;
    extract(0, 0, full(0), w.contracted);
    std::sort(w.contracted.begin(), w.contracted.end());
    return w;
  }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(guest_.vertex_count()) + y;
  }

  Mask full(Vertex y) const {
    const auto k = guest_kids_[y].size();
    return k == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << k) - 1);
  }

  bool fits(Vertex x, Vertex y) const { return fits_[index(x, y)]; }

  // Masks host child c can contribute under guest vertex y: absorbed into the
  // top block, or kept as an exit onto one child of y.
  std::vector<Mask> options(Vertex c, Vertex y) const {
    std::vector<Mask> out = reach_[index(c, y)];
    const auto& kids = guest_kids_[y];
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (fits(c, kids[j])) out.push_back(Mask{1} << j);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static std::vector<Mask> combine(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    std::vector<Mask> out;
    out.reserve(a.size() * 2);
    for (Mask p : a) {
      for (Mask q : b) {
        if ((p & q) == 0) out.push_back(p | q);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void extract(Vertex x, Vertex y, Mask target, std::vector<Vertex>& contracted) const {
    const auto& kids = host_kids_[x];
    const std::size_t d = kids.size();
    // suffix[t]: masks reachable by children t..d-1.
    std::vector<std::vector<Mask>> suffix(d + 1);
    suffix[d] = {0};
    for (std::size_t t = d; t-- > 0;) suffix[t] = combine(options(kids[t], y), suffix[t + 1]);

    auto reachable = [](const std::vector<Mask>& v, Mask m) { return std::binary_search(v.begin(), v.end(), m); };
    Mask rest = target;
    const auto& gkids = guest_kids_[y];
    for (std::size_t t = 0; t < d; ++t) {
      const Vertex c = kids[t];
      bool placed = false;
      for (std::size_t j = 0; j < gkids.size() && !placed; ++j) {
        const Mask bit = Mask{1} << j;
        if ((rest & bit) && fits(c, gkids[j]) && reachable(suffix[t + 1], rest ^ bit)) {
          extract(c, gkids[j], full(gkids[j]), contracted);
          rest ^= bit;
          placed = true;
        }
      }
      if (placed) continue;
      for (Mask o : reach_[index(c, y)]) {
        if ((o & ~rest) == 0 && reachable(suffix[t + 1], rest ^ o)) {
          contracted.push_back(c);
          extract(c, y, o, contracted);
          rest ^= o;
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("contraction table backtracking lost its path");
    }
  }

  const RootedTree& guest_;
  const RootedTree& host_;
  std::vector<std::vector<Vertex>> guest_kids_;
  std::vector<std::vector<Vertex>> host_kids_;
  std::vector<int> host_size_;
  std::vector<int> guest_size_;
  std::vector<std::vector<Mask>> reach_;
  std::vector<char> fits_;
  bool computed_ = false;
};

}  // namespace detail

/// True iff contracting some set of host edges leaves a tree isomorphic to
/// the guest with the root's image as root.
inline bool is_rooted_contraction(const RootedTree& guest, const RootedTree& host) {
  return detail::ContractionTable(guest, host).contains();
}

inline std::optional<ContractionWitness> contraction_witness(const RootedTree& guest, const RootedTree& host) {
  return detail::ContractionTable(guest, host).witness();
}

struct OracleLimits {
  int max_host_edges = 9;
};

/// Canonical codes of every rooted contraction of `host`, host included,
/// found by breadth-first closure over single-edge contractions.
inline std::unordered_set<std::string> rooted_contraction_closure(const RootedTree& host,
                                                                  const OracleLimits& limits = {}) {
  if (host.edge_count() > limits.max_host_edges) {
    throw ResourceLimit("oracle host has " + std::to_string(host.edge_count()) + " edges, cap is " +
                        std::to_string(limits.max_host_edges));
  }
  std::unordered_set<std::string> seen;
  std::deque<std::string> frontier;
  const std::string start = canonical_code(host).text;
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const RootedTree t = parse_code(frontier.front());
    frontier.pop_front();
    for (Vertex c = 1; c < t.vertex_count(); ++c) {
      std::string code = canonical_code(contract_edge(t, c)).text;
      if (seen.insert(code).second) frontier.push_back(std::move(code));
    }
  }
  return seen;
}

inline bool brute_force_contraction(const RootedTree& guest, const RootedTree& host, const OracleLimits& limits = {}) {
  if (guest.empty() || host.empty()) throw InvalidArgument("containment needs non-empty trees");
  return rooted_contraction_closure(host, limits).count(canonical_code(guest).text) > 0;
}

/// Witness for unrooted minor containment: the guest re-rooted at the vertex
/// that lands in the host root's block, plus the contracted host edges.
struct MinorWitness {
  RootedTree rooted_guest;
  ContractionWitness contraction;
};

/// Unrooted containment. For trees, contractions alone reach every tree
/// minor, so it suffices to try each root placement of the guest against the
/// host at its own root.
inline std::optional<MinorWitness> minor_witness(const RootedTree& guest, const RootedTree& host) {
  if (guest.empty() || host.empty()) throw InvalidArgument("containment needs non-empty trees");
  if (guest.edge_count() > host.edge_count()) return std::nullopt;
  const auto adj = guest.adjacency();
  std::set<std::string> tried;
  for (Vertex r = 0; r < guest.vertex_count(); ++r) {
    RootedTree rooted = from_adjacency(adj, r);
    if (!tried.insert(canonical_code(rooted).text).second) continue;
    if (auto w = contraction_witness(rooted, host)) return MinorWitness{std::move(rooted), std::move(*w)};
  }
  return std::nullopt;
}

inline bool is_minor_unrooted(const RootedTree& guest, const RootedTree& host) {
  if (guest.empty() || host.empty()) throw InvalidArgument("containment needs non-empty trees");
  if (guest.edge_count() > host.edge_count()) return false;
  const auto adj = guest.adjacency();
  std::set<std::string> tried;
  for (Vertex r = 0; r < guest.vertex_count(); ++r) {
    RootedTree rooted = from_adjacency(adj, r);
    if (!tried.insert(canonical_code(rooted).text).second) continue;
    if (is_rooted_contraction(rooted, host)) return true;
  }
  return false;
}

}  // namespace cutree
