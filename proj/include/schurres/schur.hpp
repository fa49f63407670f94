#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "graded.hpp"
#include "partition.hpp"

namespace schurres {

/// Terms of a Pieri decomposition; every multiplicity is 1.
struct PieriExpansion {
  std::vector<std::pair<Partition, std::int64_t>> terms;
  int ambient_rank = 0;

  std::int64_t total_rank() const
  {
    std::int64_t s = 0;
    for (auto& [J, m] : terms) s += m * schur_rank(J, ambient_rank);
    return s;
  }

  std::vector<Partition> partitions() const
  {
    std::vector<Partition> out;
    for (auto& [J, m] : terms) out.push_back(J);
    return out;
  }
};

/// Sigma^I E (x) wedge^n E for E of rank r: add n boxes to I, no two in the
/// same row.
///
/// Slots of I are kept as given; one extra slot (0 or 1 box) exists only when
/// I has fewer than r slots. I must therefore have r-1 or r slots (pad
/// explicitly). Results are reported with exactly r slots.
inline PieriExpansion pieri_wedge(const Partition& I, int nboxes, int r)
{
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (nboxes < 0 || nboxes > r) throw std::invalid_argument("pieri_wedge needs 0 <= nboxes <= r");
  Partition base = static_cast<int>(I.slots()) > r ? I.padded(static_cast<std::size_t>(r)) : I;
  const int s = static_cast<int>(base.slots());
  if (s < r - 1)
    throw std::invalid_argument("pieri_wedge needs I with r-1 or r slots; pad " + I.to_string() + " first");

  std::vector<int> slots;
  if (s < r) slots.push_back(0);  // the extra slot j_0
  for (int v : base.parts()) slots.push_back(v);

  PieriExpansion out;
  out.ambient_rank = r;
  std::vector<int> cur(slots.size());
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == slots.size()) {
      if (left == 0) out.terms.emplace_back(Partition(cur).padded(static_cast<std::size_t>(r)), 1);
      return;
    }
    for (int add = 0; add <= 1 && add <= left; ++add) {
      int v = slots[k] + add;
      if (k > 0 && v < cur[k - 1]) continue;
      cur[k] = v;
      self(self, k + 1, left - add);
    }
  };
  rec(rec, 0, nboxes);
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

/// Sigma^I E (x) S_n E for E of rank r: add a horizontal strip of n boxes.
inline PieriExpansion pieri_sym(const Partition& I, int nboxes, int r)
{
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (nboxes < 0) throw std::invalid_argument("pieri_sym needs nboxes >= 0");
  PieriExpansion out;
  out.ambient_rank = r;
  if (I.length() > r) return out;

  // Decreasing convention: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... >= mu_r >= lambda_r.
  auto lam = I.decreasing();
  lam.resize(static_cast<std::size_t>(r), 0);
  std::vector<int> mu(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == mu.size()) {
      if (left == 0) out.terms.emplace_back(Partition::from_decreasing(mu), 1);
      return;
    }
    int hi = k == 0 ? lam[0] + left : std::min(lam[k - 1], lam[k] + left);
    for (int v = lam[k]; v <= hi; ++v) {
      mu[k] = v;
      self(self, k + 1, left - (v - lam[k]));
    }
  };
  if (r == 0) {
    if (nboxes == 0) out.terms.emplace_back(Partition(), 1);
    return out;
  }
  rec(rec, 0, nboxes);
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

/// Calls `visit(tableau)` for each semistandard tableau of shape P with
/// entries in 0..r-1. Rows are listed longest first; rows weakly increase,
/// columns strictly increase.
inline void for_each_ssyt(const Partition& P, int r, const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
  auto shape = P.decreasing();
  if (static_cast<int>(shape.size()) > r) return;
  std::vector<std::vector<int>> tab;
  for (int len : shape) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t row = 0; row < shape.size(); ++row)
    for (std::size_t col = 0; col < tab[row].size(); ++col) cells.emplace_back(row, col);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(tab);
      return;
    }
    auto [row, col] = cells[k];
    int lo = 0;
    if (col > 0) lo = std::max(lo, tab[row][col - 1]);
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
    for (int v = lo; v < r; ++v) {
      tab[row][col] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

namespace detail {

/// Partitions mu (decreasing, <= k parts) with lambda/mu a horizontal strip.
inline void horizontal_strips_below(const std::vector<int>& lam, std::size_t k,
                                    const std::function<void(const std::vector<int>&, int)>& visit)
{
  // lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ... ; mu has at most k parts.
  std::vector<int> mu(lam.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int removed) -> void {
    if (j == lam.size()) {
      std::vector<int> m = mu;
      while (!m.empty() && m.back() == 0) m.pop_back();
      visit(m, removed);
      return;
    }
    int hi = lam[j];
    int lo = j + 1 < lam.size() ? lam[j + 1] : 0;
    if (j >= k) hi = 0;
    for (int v = lo; v <= hi; ++v) {
      mu[j] = v;
      self(self, j + 1, removed + lam[j] - v);
    }
  };
  if (!lam.empty() && lam.size() > k + 1) return;  // too many rows to remove in one strip
  rec(rec, 0, 0);
}

}  // namespace detail

/// Grading of Sigma^P E for E = (+) R(d_k): one twist per semistandard
/// tableau T, namely sum over cells of d_{T(cell)}.
///
/// Computed by branching on the largest entry (memoized); for_each_ssyt is
/// the brute-force oracle.
inline GradedFreeModule schur_generator_degrees(const Partition& P, const std::vector<int>& twists)
{
  const std::size_t r = twists.size();
  std::map<std::pair<std::vector<int>, std::size_t>, std::map<int, std::int64_t>> memo;
  std::function<const std::map<int, std::int64_t>&(const std::vector<int>&, std::size_t)> go;
  go = [&](const std::vector<int>& lam, std::size_t k) -> const std::map<int, std::int64_t>& {
    auto key = std::make_pair(lam, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::map<int, std::int64_t> res;
    if (lam.empty()) res[0] = 1;
    else if (k > 0 && lam.size() <= k) {
      const int d = twists[k - 1];
      detail::horizontal_strips_below(lam, k - 1, [&](const std::vector<int>& mu, int removed) {
        for (auto& [tw, m] : go(mu, k - 1)) res[tw + d * removed] += m;
      });
    }
    return memo.emplace(key, std::move(res)).first->second;
  };
  GradedFreeModule out;
  if (P.length() > static_cast<int>(r)) return out;
  for (auto& [tw, m] : go(P.decreasing(), r)) out.add(tw, m);
  return out;
}

/// Brute-force grading by explicit tableau enumeration.
inline GradedFreeModule schur_generator_degrees_ssyt(const Partition& P, const std::vector<int>& twists)
{
  GradedFreeModule out;
  for_each_ssyt(P, static_cast<int>(twists.size()), [&](const std::vector<std::vector<int>>& tab) {
    int d = 0;
    for (auto& row : tab)
      for (int v : row) d += twists[static_cast<std::size_t>(v)];
    out.add(d, 1);
  });
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> m)
{
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Complete homogeneous symmetric polynomials h_0..h_kmax at a point.
inline std::vector<Rational> complete_homogeneous(const std::vector<Rational>& values, int kmax)
{
  std::vector<Rational> h(static_cast<std::size_t>(std::max(kmax, 0)) + 1, Rational(0));
  h[0] = 1;
  for (auto& x : values)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  return h;
}

/// Elementary symmetric polynomial e_n at a point.
inline Rational elementary(const std::vector<Rational>& values, int n)
{
  std::vector<Rational> e(static_cast<std::size_t>(std::max(n, 0)) + 1, Rational(0));
  e[0] = 1;
  for (auto& x : values)
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
  return n < 0 ? Rational(0) : e[static_cast<std::size_t>(n)];
}

/// s_P(values) via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
inline Rational schur_eval(const Partition& P, const std::vector<Rational>& values)
{
  if (P.length() > static_cast<int>(values.size())) return Rational(0);
  auto lam = P.decreasing();
  const std::size_t n = lam.size();
  auto h = complete_homogeneous(values, P.largest() + static_cast<int>(n));
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int idx = lam[i] - static_cast<int>(i) + static_cast<int>(j);
      m[i][j] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
    }
  return bareiss_determinant(std::move(m));
}

/// s_P(values) as a sum of tableau monomials.
inline Rational schur_eval_ssyt(const Partition& P, const std::vector<Rational>& values)
{
  Rational sum = 0;
  for_each_ssyt(P, static_cast<int>(values.size()), [&](const std::vector<std::vector<int>>& tab) {
    Rational term = 1;
    for (auto& row : tab)
      for (int v : row) term *= values[static_cast<std::size_t>(v)];
    sum += term;
  });
  return sum;
}

/// Partitions of `weight` with at most `r` nonzero parts, each as r slots.
inline std::vector<Partition> partitions_of_weight(int weight, int r)
{
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(Partition::from_decreasing(cur).padded(static_cast<std::size_t>(r)));
      return;
    }
    if (static_cast<int>(cur.size()) == r) return;
    for (int v = std::min(left, maxpart); v >= 1; --v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

/// Index set of S_m(wedge^2 E) for E of rank r, with the parity reading that
/// passed rank validation.
struct PlethysmIndex {
  std::vector<Partition> partitions;
  std::string reading;  // "conjugate-even" or "literal-even"
};

/// S_m(wedge^2 E) = (+) Sigma^I E over |I| = 2m with an evenness condition.
/// The condition is tried on the conjugate first, then on the parts; the
/// first reading whose ranks add up to rank S_m(wedge^2 E) is returned.
inline PlethysmIndex sym_wedge2_plethysm(int m, int r)
{
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const auto target = binomial(binomial(r, 2) + m - 1, m);
  auto all_even = [](const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
  };
  const std::vector<std::pair<std::string, std::function<bool(const Partition&)>>> readings{
      {"conjugate-even", [&](const Partition& p) { return all_even(conjugate(p)); }},
      {"literal-even", all_even},
  };
  for (auto& [name, keep] : readings) {
    PlethysmIndex idx{{}, name};
    std::int64_t total = 0;
    for (auto& p : partitions_of_weight(2 * m, r))
      if (keep(p)) {
        idx.partitions.push_back(p);
        total += schur_rank(p, r);
      }
    if (total == target) return idx;
  }
  throw std::logic_error("no parity reading of the plethysm index set matches the rank of S_m(wedge^2)");
}

/// wedge^k E and S_k E for E = (+) R(twists).
inline GradedFreeModule exterior_power(const std::vector<int>& twists, int k)
{
  if (k < 0) return {};
  return schur_generator_degrees(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), twists);
}

inline GradedFreeModule symmetric_power(const std::vector<int>& twists, int k)
{
  if (k < 0) return {};
  return schur_generator_degrees(Partition{k}, twists);
}

}  // namespace schurres
