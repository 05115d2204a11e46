#pragma once

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cutree/canonical.hpp"
#include "cutree/construction.hpp"
#include "cutree/error.hpp"
#include "cutree/families.hpp"
#include "cutree/minor.hpp"

namespace cutree {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline int parse_int(std::string_view s, std::size_t offset) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", offset);
  }
  return value;
}

inline std::vector<int> parse_int_list(std::string_view s, std::size_t offset) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Tree files hold one canonical code per line; blank lines are skipped.
inline std::vector<RootedTree> read_trees(std::istream& in) {
  std::vector<RootedTree> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    try {
      out.push_back(parse_code(text));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return out;
}

inline std::string format_signature(const SpiderSignature& sig) {
  std::string out;
  for (int len : sig.legs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(len);
  }
  return out;
}

inline SpiderSignature parse_signature(std::string_view s) { return SpiderSignature(detail::parse_int_list(s, 0)); }

/// "p; f(1),f(2),...,f(p)"
inline std::string format_stem_function(const StemFunction& f) {
  std::string out = std::to_string(f.p) + ";";
  for (int i = 0; i < f.p; ++i) out += (i == 0 ? " " : ",") + std::to_string(f.values[i]);
  return out;
}

inline StemFunction parse_stem_function(std::string_view s) {
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) throw ParseError("stem function needs 'p; values'", 0);
  const int p = detail::parse_int(s.substr(0, semi), 0);
  std::vector<int> values = detail::parse_int_list(s.substr(semi + 1), semi + 1);
  if (static_cast<int>(values.size()) != p) {
    throw ParseError("stem function declares p = " + std::to_string(p) + " but lists " +
                         std::to_string(values.size()) + " values",
                     semi + 1);
  }
  try {
    return make_stem_function(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), semi + 1);
  }
}

/// One stem function per line, keyed by p; '#' starts a comment line.
inline std::map<int, StemFunction> read_stem_functions(std::istream& in) {
  std::map<int, StemFunction> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    try {
      StemFunction f = parse_stem_function(text);
      const int p = f.p;
      if (!out.emplace(p, std::move(f)).second) {
        throw ParseError("duplicate stem function for p = " + std::to_string(p), 0);
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return out;
}

/// "k: p1-c1,p2-c2,..." listing contracted host edges; "0:" when none.
inline std::string format_witness(const RootedTree& host, const ContractionWitness& w) {
  std::string out = std::to_string(w.size()) + ":";
  for (std::size_t i = 0; i < w.contracted.size(); ++i) {
    const Vertex c = w.contracted[i];
    out += (i == 0 ? " " : ",") + std::to_string(host.parent(c)) + "-" + std::to_string(c);
  }
  return out;
}

inline ContractionWitness parse_witness(const RootedTree& host, std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("witness needs 'k: edges'", 0);
  const int k = detail::parse_int(s.substr(0, colon), 0);
  ContractionWitness w;
  std::string_view rest = detail::trim(s.substr(colon + 1));
  std::size_t start = 0;
  while (!rest.empty() && start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto item = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("edge needs 'parent-child'", colon + 1 + start);
    const int p = detail::parse_int(item.substr(0, dash), colon + 1 + start);
    const int c = detail::parse_int(item.substr(dash + 1), colon + 1 + start);
    if (!host.is_edge(c) || host.parent(c) != p) {
      throw ParseError("no host edge " + std::to_string(p) + "-" + std::to_string(c), colon + 1 + start);
    }
    w.contracted.push_back(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (w.size() != k) throw ParseError("witness declares " + std::to_string(k) + " edges", 0);
  return w;
}

/// Graphviz rendering. `stem` vertices come first, in order, drawn bold and
/// ranked left to right.
inline std::string to_dot(const RootedTree& t, const std::vector<Vertex>& stem = {}, const std::string& name = "T") {
  std::ostringstream out;
  std::vector<char> on_stem(static_cast<std::size_t>(t.vertex_count()), 0);
  for (Vertex v : stem) on_stem[v] = 1;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle, label=\"\", width=0.15];\n";
  for (Vertex v : stem) {
    out << "  v" << v << " [style=filled, fillcolor=black" << (v == 0 ? ", shape=doublecircle" : "") << "];\n";
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (!on_stem[v]) out << "  v" << v << (v == 0 ? " [shape=doublecircle]" : "") << ";\n";
  }
  if (!stem.empty()) {
    out << "  { rank=same;";
    for (Vertex v : stem) out << " v" << v << ";";
    out << " }\n";
  }
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    out << "  v" << t.parent(v) << " -- v" << v;
    if (on_stem[v] && on_stem[t.parent(v)]) out << " [penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cutree
