#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cutree/error.hpp"
#include "cutree/tree.hpp"

namespace cutree {

// Balanced-parentheses canonical form. Each vertex encodes as "(" followed by
// its children's codes in non-increasing lexicographic order, then ")". Two
// rooted trees share a code iff they are isomorphic with roots matched.
struct CanonicalCode {
  std::string text;

  bool empty() const noexcept { return text.empty(); }
  int vertex_count() const noexcept { return static_cast<int>(text.size() / 2); }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

inline std::vector<std::string> encode_subtrees(const RootedTree& t, bool keep_all) {
  const auto kids = t.children();
  std::vector<std::string> code(static_cast<std::size_t>(t.vertex_count()));
  for (Vertex v = t.vertex_count() - 1; v >= 0; --v) {
    std::vector<const std::string*> parts;
    parts.reserve(kids[v].size());
    for (Vertex c : kids[v]) parts.push_back(&code[c]);
    std::sort(parts.begin(), parts.end(), [](const std::string* a, const std::string* b) { return *a > *b; });
    std::string& out = code[v];
    out.push_back('(');
    for (const std::string* p : parts) out += *p;
    out.push_back(')');
    if (!keep_all) {
      for (Vertex c : kids[v]) std::string().swap(code[c]);
    }
  }
  return code;
}

}  // namespace detail

/// Codes of every rooted subtree of `t`, indexed by vertex.
inline std::vector<std::string> subtree_codes(const RootedTree& t) { return detail::encode_subtrees(t, true); }

inline CanonicalCode canonical_code(const RootedTree& t) {
  if (t.empty()) return {};
  return {std::move(detail::encode_subtrees(t, false)[0])};
}

/// Parses a balanced-parentheses string. Vertices are numbered in preorder of
/// the text, so the parse of a canonical code is the tree's canonical numbering.
inline RootedTree parse_code(std::string_view s) {
  if (s.empty()) return {};
  std::vector<Vertex> parent;
  std::vector<Vertex> open;
  bool closed_root = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') {
      if (closed_root) throw ParseError("text continues after the root closed", i);
      parent.push_back(open.empty() ? kNoParent : open.back());
      open.push_back(static_cast<Vertex>(parent.size() - 1));
    } else if (ch == ')') {
      if (open.empty()) throw ParseError("unmatched ')'", i);
      open.pop_back();
      if (open.empty()) closed_root = true;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
  }
  if (!open.empty()) throw ParseError("unbalanced code: " + std::to_string(open.size()) + " unclosed", s.size());
  return RootedTree(std::move(parent));
}

/// Renumbers `t` into the vertex order of its canonical code.
inline RootedTree canonicalize(const RootedTree& t) { return parse_code(canonical_code(t).text); }

/// Isomorphism invariant of the unrooted tree: the smallest rooted code over
/// all root placements. Returns the minimizing vertex through `best_root`.
inline CanonicalCode unrooted_code(const RootedTree& t, Vertex* best_root = nullptr) {
  if (t.empty()) return {};
  const auto adj = t.adjacency();
  CanonicalCode best;
  Vertex arg = 0;
  for (Vertex r = 0; r < t.vertex_count(); ++r) {
    CanonicalCode c = canonical_code(from_adjacency(adj, r));
    if (r == 0 || c < best) {
      best = std::move(c);
      arg = r;
    }
  }
  if (best_root) *best_root = arg;
  return best;
}

}  // namespace cutree
