#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutree/construction.hpp"
#include "cutree/error.hpp"
#include "cutree/families.hpp"

namespace cutree {

inline constexpr double kEulerGamma = 0.5772156649015329;

/// sum_{i=1}^m floor(m/i), in O(sqrt m) by grouping equal quotients.
inline std::int64_t divisor_summatory(std::int64_t m) {
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= m;) {
    const std::int64_t q = m / i;
    const std::int64_t last = m / q;
    total += q * (last - i + 1);
    i = last + 1;
  }
  return total;
}

/// Minimum size of an m-universal tree: sum over i in 1..m, i != 2, of floor(m/i).
inline std::int64_t lower_bound(std::int64_t m) {
  if (m < 1) throw InvalidArgument("lower bound needs m >= 1");
  return divisor_summatory(m) - m / 2;
}

/// lower_bound(1..max_m) at index m (index 0 unused), via a divisor-count sieve.
inline std::vector<std::int64_t> lower_bound_table(int max_m) {
  std::vector<std::int64_t> tau(static_cast<std::size_t>(max_m) + 1, 0);
  for (int d = 1; d <= max_m; ++d) {
    for (int k = d; k <= max_m; k += d) ++tau[k];
  }
  std::vector<std::int64_t> out(tau.size(), 0);
  std::int64_t running = 0;
  for (int m = 1; m <= max_m; ++m) {
    running += tau[m];
    out[m] = running - m / 2;
  }
  return out;
}

inline double lower_bound_asymptotic(std::int64_t m) {
  if (m < 1) throw InvalidArgument("asymptotic bound needs m >= 1");
  const double x = static_cast<double>(m);
  return x * std::log(x) + (kEulerGamma - 1.0) * x;
}

/// Legs floor(m/m), floor(m/(m-1)), ..., floor(m/2), ceil(m/2).
inline SpiderSignature universal_spider_signature(int m) {
  if (m < 1) throw InvalidArgument("universal spider needs m >= 1");
  std::vector<int> legs;
  legs.reserve(static_cast<std::size_t>(m));
  for (int i = m; i >= 2; --i) legs.push_back(m / i);
  legs.push_back((m + 1) / 2);
  return SpiderSignature(std::move(legs));
}

inline RootedTree universal_spider(int m) { return new_spider(universal_spider_signature(m)); }

/// Edge counts u_k of ramify(seq, k), without building trees:
///   u_-1 = -1, u_0 = 0, u_k = 2k + sum_i u_{idx(f_k(i) - 1)}
/// where idx is the substitution rule used by ramify, and k is rounded up
/// first for power-of-two sequences.
class SizeRecursion {
 public:
  explicit SizeRecursion(CombSequence seq) : seq_(std::move(seq)) {}

  std::int64_t operator()(int k) {
    if (k < -1) throw InvalidArgument("size recursion needs k >= -1");
    return compute(seq_.effective_size(k), false);
  }

  // The recursion with the 2k - 1 term in place of 2k, for comparison.
  std::int64_t quoted(int k) {
    if (k < -1) throw InvalidArgument("size recursion needs k >= -1");
    return compute(seq_.effective_size(k), true);
  }

 private:
  std::int64_t compute(int k, bool quoted_form) {
    if (k == -1) return -1;
    if (k == 0) return 0;
    auto& memo = quoted_form ? quoted_memo_ : memo_;
    if (static_cast<int>(memo.size()) <= k) memo.resize(static_cast<std::size_t>(k) + 1, kUnset);
    if (memo[k] != kUnset) return memo[k];
    const StemFunction f = seq_.at(k);
    std::int64_t total = 2LL * k - (quoted_form ? 1 : 0);
    for (int i = 1; i <= k; ++i) total += compute(substituted_index(k, f(i) - 1), quoted_form);
    // memo may have been resized by the recursive calls.
    auto& table = quoted_form ? quoted_memo_ : memo_;
    table[k] = total;
    return total;
  }

  static constexpr std::int64_t kUnset = -2;
  CombSequence seq_;
  std::vector<std::int64_t> memo_;
  std::vector<std::int64_t> quoted_memo_;
};

inline std::int64_t size_recursion(const CombSequence& seq, int k) { return SizeRecursion(seq)(k); }

/// Bisection for a sign change of `fn` on [lo, hi] to absolute tolerance `tol`.
inline double bisect(const std::function<double(double)>& fn, double lo, double hi, double tol = 1e-12) {
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NumericalFailure("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// beta(c) = 2^-c + 2^-2c + 1/(2^(c-1) - 1) - 1/(2^c - 1).
inline double growth_beta(double c) {
  return std::exp2(-c) + std::exp2(-2.0 * c) + 1.0 / (std::exp2(c - 1.0) - 1.0) - 1.0 / (std::exp2(c) - 1.0);
}

inline double growth_quartic(double x) { return (((x - 5.0) * x + 4.0) * x + 1.0) * x - 2.0; }

/// Unique c in (1, 3) with beta(c) = 1.
inline double solve_c() {
  constexpr double lo = 1.0 + 1e-9;
  constexpr double hi = 3.0;
  // beta blows up at c = 1; confirm it decreases across the bracket first.
  double prev = growth_beta(1.01);
  for (double c = 1.02; c <= hi + 1e-12; c += 0.01) {
    const double cur = growth_beta(c);
    if (!(cur < prev)) throw NumericalFailure("beta is not decreasing near c = " + std::to_string(c));
    prev = cur;
  }
  return bisect([](double c) { return growth_beta(c) - 1.0; }, lo, hi, 1e-12);
}

/// Positive root of X^4 - 5X^3 + 4X^2 + X - 2, whose log2 is c.
inline double quartic_root() { return bisect(growth_quartic, 1.0, 5.0, 1e-13); }

/// max over m in [m_lo, m_hi) of ln(u_m) / ln(m), sizes from the recursion.
/// With `powers_of_two_only`, m ranges over powers of two in the window.
inline double empirical_exponent(const CombSequence& seq, int m_lo, int m_hi, bool powers_of_two_only = false) {
  if (m_lo < 2 || m_hi <= m_lo) throw InvalidArgument("exponent range needs 2 <= m_lo < m_hi");
  SizeRecursion sizes(seq);
  double best = -INFINITY;
  for (int m = m_lo; m < m_hi; ++m) {
    if (powers_of_two_only && !std::has_single_bit(static_cast<unsigned>(m))) continue;
    const std::int64_t u = sizes(m);
    if (u <= 1) throw InvalidArgument("size " + std::to_string(u) + " at m = " + std::to_string(m) + " has no exponent");
    best = std::max(best, std::log(static_cast<double>(u)) / std::log(static_cast<double>(m)));
  }
  if (std::isinf(best)) throw InvalidArgument("exponent range holds no admissible m");
  return best;
}

struct BoundsRow {
  int m = 0;
  std::int64_t lower_bound = 0;
  std::int64_t spider_size = 0;
  std::optional<std::int64_t> tree_size_phi;
  std::optional<std::int64_t> tree_size_g;
  double bound_2m_pow_c = 0.0;
};

/// Sizes up to this m are computed for the phi column; the recursion is quadratic.
inline constexpr int kPhiTableCap = 1 << 16;

inline std::vector<BoundsRow> bounds_table(int m_from, int m_to) {
  if (m_from < 1 || m_to < m_from) throw InvalidArgument("bounds range needs 1 <= from <= to");
  const double c = solve_c();
  SizeRecursion phi(phi_sequence());
  SizeRecursion g(g_sequence());
  std::vector<BoundsRow> rows;
  for (int m = m_from; m <= m_to; ++m) {
    BoundsRow row;
    row.m = m;
    row.lower_bound = lower_bound(m);
    row.spider_size = universal_spider_signature(m).size();
    if (m <= kPhiTableCap) row.tree_size_phi = phi(m);
    row.tree_size_g = g(m);
    row.bound_2m_pow_c = std::pow(2.0 * m, c);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cutree
