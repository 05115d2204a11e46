#pragma once

// Command-line driver. Kept in a header so tests can run commands in-process
// with string streams; tools/cutree.cpp only forwards argv.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cutree/bounds.hpp"
#include "cutree/canonical.hpp"
#include "cutree/construction.hpp"
#include "cutree/error.hpp"
#include "cutree/io.hpp"
#include "cutree/minor.hpp"
#include "cutree/verify.hpp"

namespace cutree::cli {

inline constexpr const char* kVersion = "cutree 1.0.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceLimit = 3 };

enum class Format { code, dot, json, tsv };

struct RunConfig {
  std::string command;
  int m = -1;
  int m_max = -1;
  int m_lo = 64;
  int m_hi = 1 << 14;
  std::string seq = "phi";
  std::string stem_file;
  GuestClass cls = GuestClass::trees;
  std::string object = "tree";
  Format format = Format::code;
  std::string guest;
  std::string host;
  bool rooted = false;
  bool powers_of_two = false;
  bool quoted_delta = false;
  int jobs = 1;
  EnumerationLimits enumeration;
  OracleLimits oracle;
  bool oracle_cross_check = false;
};

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline CombSequence load_sequence(const RunConfig& cfg) {
  if (cfg.seq == "phi") return phi_sequence();
  if (cfg.seq == "g") return g_sequence();
  if (cfg.stem_file.empty()) throw UsageError("--seq custom needs --stem-file");
  std::ifstream in(cfg.stem_file);
  if (!in) throw UsageError("cannot open stem file " + cfg.stem_file);
  return table_sequence(read_stem_functions(in), "custom");
}

// A value starting with '(' is an inline code; anything else names a file
// whose first non-blank line is used.
inline RootedTree load_tree(const std::string& source) {
  if (!source.empty() && source.front() == '(') return parse_code(source);
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open tree file " + source);
  auto trees = read_trees(in);
  if (trees.empty()) throw UsageError("tree file " + source + " holds no tree");
  return trees.front();
}

inline std::string format_double(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

inline std::vector<Vertex> spine_of(const std::string& object, const RootedTree& t) {
  if (object == "spider") return {0};
  // join() keeps the spine as vertices 0..len.
  std::vector<Vertex> spine{0};
  const auto kids = t.children();
  for (Vertex v = 0; !kids[v].empty() && kids[v].front() == v + 1; ++v) spine.push_back(v + 1);
  return spine;
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.m < 0) throw UsageError("build needs --m >= 0");
  const CombSequence seq = load_sequence(cfg);
  RootedTree t;
  int built = cfg.m;
  if (cfg.object == "tree") {
    built = seq.effective_size(cfg.m);
    t = ramify(seq, cfg.m);
  } else if (cfg.object == "comb") {
    t = build_comb(seq, cfg.m);
  } else {
    if (cfg.m < 1) throw UsageError("spider needs --m >= 1");
    t = universal_spider(cfg.m);
  }
  if (built != cfg.m) err << "m = " << cfg.m << " padded to " << built << " for sequence " << seq.name() << "\n";
  switch (cfg.format) {
    case Format::code:
      out << canonical_code(t).text << "\n";
      break;
    case Format::dot:
      out << to_dot(t, spine_of(cfg.object, t));
      break;
    case Format::json:
    case Format::tsv: {
      nlohmann::ordered_json j;
      j["object"] = cfg.object;
      j["seq"] = cfg.object == "spider" ? "none" : seq.name();
      j["m"] = cfg.m;
      j["built_m"] = built;
      j["edges"] = t.edge_count();
      j["code"] = canonical_code(t).text;
      out << j.dump() << "\n";
      break;
    }
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int lo = cfg.m_max >= 0 ? std::max(cfg.m, 1) : cfg.m;
  const int hi = cfg.m_max >= 0 ? cfg.m_max : cfg.m;
  if (lo < 1 || hi < lo) throw UsageError("verify needs --m >= 1 (and --m-max >= --m)");
  const CombSequence seq = load_sequence(cfg);
  bool all_ok = true;
  for (int m = lo; m <= hi; ++m) {
    const RootedTree host = canonicalize(class_host(cfg.cls, seq, m));
    err << "verify " << to_string(cfg.cls) << " m=" << m << " host_edges=" << host.edge_count();
    if (cfg.cls == GuestClass::trees && seq.effective_size(m) != m) err << " padded_m=" << seq.effective_size(m);
    err << "\n";
    const VerifyReport report = verify_guests(class_members(cfg.cls, m, cfg.enumeration), host,
                                              class_is_rooted(cfg.cls), cfg.jobs);
    const std::string prefix = cfg.m_max >= 0 ? "m=" + std::to_string(m) + " " : "";
    const std::string host_code = canonical_code(host).text;
    for (const GuestCheck& c : report.checks) {
      if (!c.contained()) {
        out << prefix << "COUNTEREXAMPLE guest " << canonical_code(c.guest).text << " host " << host_code << "\n";
      }
    }
    out << prefix << (report.ok() ? "OK " : "FAIL ") << report.contained() << "/" << report.total() << "\n";
    all_ok = all_ok && report.ok();
  }
  return all_ok ? kOk : kVerificationFailed;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.guest.empty() || cfg.host.empty()) throw UsageError("check needs --guest and --host");
  const RootedTree guest = load_tree(cfg.guest);
  const RootedTree host = canonicalize(load_tree(cfg.host));
  if (cfg.oracle_cross_check) {
    const auto closure = rooted_contraction_closure(host, cfg.oracle);
    bool oracle = false;
    for (Vertex r = 0; r < guest.vertex_count() && !oracle; ++r) {
      if (cfg.rooted && r > 0) break;
      oracle = closure.count(canonical_code(reroot(guest, r)).text) > 0;
    }
    err << "oracle: " << (oracle ? "contained" : "not contained") << "\n";
  }
  if (cfg.rooted) {
    if (auto w = contraction_witness(guest, host)) {
      out << "CONTAINED (witness: " << w->size() << " edges)\n" << format_witness(host, *w) << "\n";
      return kOk;
    }
  } else if (auto w = minor_witness(guest, host)) {
    out << "CONTAINED (witness: " << w->contraction.size() << " edges)\n"
        << "guest-root " << canonical_code(w->rooted_guest).text << "\n"
        << format_witness(host, w->contraction) << "\n";
    return kOk;
  }
  out << "NOT CONTAINED\n";
  return kVerificationFailed;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const int lo = cfg.m_max >= 0 ? std::max(cfg.m, 1) : cfg.m;
  const int hi = cfg.m_max >= 0 ? cfg.m_max : cfg.m;
  if (lo < 1 || hi < lo) throw UsageError("bounds needs --m >= 1 (or --m-max)");
  const auto rows = bounds_table(lo, hi);
  SizeRecursion phi(phi_sequence());
  SizeRecursion g(g_sequence());
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("NA"); };
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BoundsRow& r : rows) {
      nlohmann::ordered_json j;
      j["m"] = r.m;
      j["lower_bound"] = r.lower_bound;
      j["spider_size"] = r.spider_size;
      j["u_phi"] = r.tree_size_phi ? nlohmann::ordered_json(*r.tree_size_phi) : nlohmann::ordered_json(nullptr);
      j["u_g"] = r.tree_size_g ? nlohmann::ordered_json(*r.tree_size_g) : nlohmann::ordered_json(nullptr);
      j["bound_2m_pow_c"] = std::stod(format_double(r.bound_2m_pow_c, 6));
      if (cfg.quoted_delta) {
        if (r.tree_size_phi) j["delta_phi"] = *r.tree_size_phi - phi.quoted(r.m);
        j["delta_g"] = *r.tree_size_g - g.quoted(r.m);
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
    return kOk;
  }
  out << "m\tlower_bound\tspider_size\tu_phi\tu_g\t(2m)^c" << (cfg.quoted_delta ? "\tdelta_phi\tdelta_g" : "") << "\n";
  for (const BoundsRow& r : rows) {
    out << r.m << "\t" << r.lower_bound << "\t" << r.spider_size << "\t" << opt(r.tree_size_phi) << "\t"
        << opt(r.tree_size_g) << "\t" << format_double(r.bound_2m_pow_c, 6);
    if (cfg.quoted_delta) {
      out << "\t" << (r.tree_size_phi ? std::to_string(*r.tree_size_phi - phi.quoted(r.m)) : "NA") << "\t"
          << (*r.tree_size_g - g.quoted(r.m));
    }
    out << "\n";
  }
  return kOk;
}

inline int cmd_exponent(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const CombSequence seq = load_sequence(cfg);
  const double e = empirical_exponent(seq, cfg.m_lo, cfg.m_hi, cfg.powers_of_two);
  out << format_double(e, 9) << "\n";
  return kOk;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.m < 0) throw UsageError("enumerate needs --m");
  if (cfg.cls == GuestClass::spiders && cfg.format == Format::tsv) {
    for (const auto& sig : enumerate_spiders(cfg.m)) out << format_signature(sig) << "\n";
    return kOk;
  }
  const auto trees = cfg.m == 0 && cfg.cls == GuestClass::trees ? enumerate_rooted_trees(0, cfg.enumeration)
                                                                  : class_members(cfg.cls, cfg.m, cfg.enumeration);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : trees) arr.push_back(canonical_code(t).text);
    out << arr.dump() << "\n";
  } else if (cfg.format == Format::dot) {
    int i = 0;
    for (const auto& t : trees) out << to_dot(t, {}, "T" + std::to_string(i++));
  } else {
    for (const auto& t : trees) out << canonical_code(t).text << "\n";
  }
  return kOk;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Contraction-universal trees: construction, verification and bounds", "cutree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::map<std::string, GuestClass> classes{
      {"trees", GuestClass::trees}, {"brushes", GuestClass::brushes}, {"spiders", GuestClass::spiders}};
  const std::map<std::string, Format> formats{
      {"code", Format::code}, {"dot", Format::dot}, {"json", Format::json}, {"tsv", Format::tsv}};
  int enum_cap = cfg.enumeration.max_edges;
  int oracle_cap = cfg.oracle.max_host_edges;

  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", cfg.seq, "stem function sequence")->check(CLI::IsMember({"phi", "g", "custom"}));
    sub->add_option("--stem-file", cfg.stem_file, "stem functions, one 'p; f(1),...,f(p)' per line");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--enum-cap", enum_cap, "largest enumerated size")->check(CLI::Range(0, EnumerationLimits::kHardMax));
    sub->add_option("--oracle-cap", oracle_cap, "largest host for the brute-force oracle")->check(CLI::Range(0, 30));
  };

  auto* build = app.add_subcommand("build", "construct Tree_m, Comb_m or the universal spider");
  build->add_option("--m", cfg.m, "size")->required();
  add_seq(build);
  build->add_option("--object", cfg.object, "tree | comb | spider")->check(CLI::IsMember({"tree", "comb", "spider"}));
  build->add_option("--format", cfg.format, "code | dot | json")->transform(CLI::CheckedTransformer(formats));

  auto* verify = app.add_subcommand("verify", "check universality against every guest of a class");
  verify->add_option("--m", cfg.m, "size (first size with --m-max)");
  verify->add_option("--m-max", cfg.m_max, "verify every size from --m (default 1) to this");
  verify->add_option("--class", cfg.cls, "trees | brushes | spiders")->transform(CLI::CheckedTransformer(classes));
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_seq(verify);
  add_caps(verify);

  auto* check = app.add_subcommand("check", "decide containment of one guest in one host");
  check->add_option("--guest", cfg.guest, "tree file or inline code")->required();
  check->add_option("--host", cfg.host, "tree file or inline code")->required();
  check->add_flag("--rooted", cfg.rooted, "rooted contraction instead of unrooted minor");
  check->add_flag("--oracle", cfg.oracle_cross_check, "also run the brute-force oracle (diagnostics stream)");
  add_caps(check);

  auto* bounds = app.add_subcommand("bounds", "lower bounds and constructed sizes");
  bounds->add_option("--m", cfg.m, "size (first size with --m-max)");
  bounds->add_option("--m-max", cfg.m_max, "emit rows from --m (default 1) to this");
  bounds->add_option("--format", cfg.format, "tsv | json")->transform(CLI::CheckedTransformer(formats));
  bounds->add_flag("--quoted-delta", cfg.quoted_delta, "add columns comparing with the 2k-1 recursion");

  auto* exponent = app.add_subcommand("exponent", "max of ln(u_m)/ln(m) over [m-lo, m-hi)");
  add_seq(exponent);
  exponent->add_option("--m-lo", cfg.m_lo, "first m");
  exponent->add_option("--m-hi", cfg.m_hi, "end of range (exclusive)");
  exponent->add_flag("--pow2", cfg.powers_of_two, "only powers of two");

  auto* enumerate = app.add_subcommand("enumerate", "list a class up to isomorphism");
  enumerate->add_option("--m", cfg.m, "size")->required();
  enumerate->add_option("--class", cfg.cls, "trees | brushes | spiders")->transform(CLI::CheckedTransformer(classes));
  enumerate->add_option("--format", cfg.format, "code | dot | json | tsv (spider signatures)")
      ->transform(CLI::CheckedTransformer(formats));
  add_caps(enumerate);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (bounds->parsed() && bounds->count("--format") == 0) cfg.format = Format::tsv;
  cfg.enumeration.max_edges = enum_cap;
  cfg.oracle.max_host_edges = oracle_cap;
  err << kVersion << "\n";

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "build") return detail::cmd_build(cfg, out, err);
    if (cfg.command == "verify") return detail::cmd_verify(cfg, out, err);
    if (cfg.command == "check") return detail::cmd_check(cfg, out, err);
    if (cfg.command == "bounds") return detail::cmd_bounds(cfg, out, err);
    if (cfg.command == "exponent") return detail::cmd_exponent(cfg, out, err);
    if (cfg.command == "enumerate") return detail::cmd_enumerate(cfg, out, err);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const detail::UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cutree::cli
