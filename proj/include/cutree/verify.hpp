#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cutree/bounds.hpp"
#include "cutree/construction.hpp"
#include "cutree/enumerate.hpp"
#include "cutree/families.hpp"
#include "cutree/minor.hpp"

namespace cutree {

enum class GuestClass { trees, brushes, spiders };

inline const char* to_string(GuestClass c) {
  switch (c) {
    case GuestClass::trees: return "trees";
    case GuestClass::brushes: return "brushes";
    case GuestClass::spiders: return "spiders";
  }
  return "?";
}

/// Outcome of one guest against the host. For unrooted checks the witness
/// refers to the guest as re-rooted in `witness->rooted_guest`.
struct GuestCheck {
  RootedTree guest;
  std::optional<MinorWitness> witness;

  bool contained() const noexcept { return witness.has_value(); }
};

struct VerifyReport {
  RootedTree host;
  std::vector<GuestCheck> checks;

  int total() const noexcept { return static_cast<int>(checks.size()); }
  int contained() const noexcept {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const GuestCheck& c) { return c.contained(); }));
  }
  bool ok() const noexcept { return contained() == total(); }
};

/// Checks every guest against one host. Rooted mode asks for rooted
/// contractions; otherwise unrooted minors. Results keep the guest order
/// regardless of `jobs`.
inline VerifyReport verify_guests(std::vector<RootedTree> guests, RootedTree host, bool rooted, int jobs = 1) {
  VerifyReport report{std::move(host), {}};
  report.checks.resize(guests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < guests.size(); i = next++) {
      GuestCheck& out = report.checks[i];
      out.guest = guests[i];
      if (rooted) {
        if (auto w = contraction_witness(guests[i], report.host)) out.witness = MinorWitness{guests[i], std::move(*w)};
      } else {
        out.witness = minor_witness(guests[i], report.host);
      }
    }
  };
  const int n = std::max(1, jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < n; ++j) pool.emplace_back(worker);
  }
  return report;
}

/// Size-m members of a class, as used by `verify`.
inline std::vector<RootedTree> class_members(GuestClass cls, int m, const EnumerationLimits& limits = {}) {
  switch (cls) {
    case GuestClass::trees: return enumerate_rooted_trees(m, limits);
    case GuestClass::brushes: return enumerate_brushes(m, limits);
    case GuestClass::spiders: {
      std::vector<RootedTree> out;
      for (const auto& sig : enumerate_spiders(m)) out.push_back(new_spider(sig));
      return out;
    }
  }
  return {};
}

/// The host claimed universal for a class: Tree_m for trees, Comb_m for
/// brushes, the universal spider for spiders (sequence ignored).
inline RootedTree class_host(GuestClass cls, const CombSequence& seq, int m) {
  switch (cls) {
    case GuestClass::trees: return ramify(seq, m);
    case GuestClass::brushes: return build_comb(seq, m);
    case GuestClass::spiders: return universal_spider(m);
  }
  return {};
}

inline bool class_is_rooted(GuestClass cls) { return cls != GuestClass::spiders; }

inline VerifyReport verify_class(GuestClass cls, const CombSequence& seq, int m, int jobs = 1,
                                 const EnumerationLimits& limits = {}) {
  return verify_guests(class_members(cls, m, limits), class_host(cls, seq, m), class_is_rooted(cls), jobs);
}

}  // namespace cutree
