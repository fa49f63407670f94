#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "graded.hpp"

namespace schurres {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// phi* evaluated at a point: rows index the basis of F*, columns the basis of G*.
struct SpecializedMatrix {
  RationalMatrix entries;
  std::uint64_t seed = 0;
  std::vector<Rational> point;
  std::vector<int> a;
  std::vector<int> b;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

namespace detail {

/// Exponent vectors of all monomials of the given degree in n variables,
/// in lexicographic order (largest power of the first variable last).
inline std::vector<std::vector<int>> monomials(int n, int degree)
{
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      cur[static_cast<std::size_t>(k)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, left - v);
    }
  };
  if (n > 0 && degree >= 0) rec(rec, 0, degree);
  return out;
}

/// Uniform integer in [lo, hi] by reduction modulo the range; portable across
/// standard libraries, unlike std::uniform_int_distribution.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace detail

/// Evaluates a pseudorandom homogeneous t x (t+c-1) matrix at a pseudorandom
/// rational point. Entry (r, j) is a form of degree a_j - b_r with integer
/// coefficients in [-5, 5]; coordinates are p/q with 0 < |p| <= 7, 1 <= q <= 7.
inline SpecializedMatrix random_specialization(const MorphismSpec& spec, std::uint64_t seed)
{
  spec.validate();
  std::mt19937_64 rng(seed);
  SpecializedMatrix sm;
  sm.seed = seed;
  sm.a = spec.a;
  sm.b = spec.b;
  for (int v = 0; v < spec.nvars; ++v) {
    std::int64_t p = 0;
    while (p == 0) p = detail::draw(rng, -7, 7);
    std::int64_t q = detail::draw(rng, 1, 7);
    sm.point.emplace_back(p, q);
  }
  sm.entries.assign(static_cast<std::size_t>(spec.t), std::vector<Rational>(static_cast<std::size_t>(spec.rank_g())));
  for (int r = 0; r < spec.t; ++r)
    for (int j = 0; j < spec.rank_g(); ++j) {
      Rational value = 0;
      for (auto& mono : detail::monomials(spec.nvars, spec.a[static_cast<std::size_t>(j)] - spec.b[static_cast<std::size_t>(r)])) {
        Rational term = detail::draw(rng, -5, 5);
        for (std::size_t v = 0; v < mono.size(); ++v)
          for (int e = 0; e < mono[v]; ++e) term *= sm.point[v];
        value += term;
      }
      sm.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = value;
    }
  return sm;
}

/// Differentials d_1..d_L of a free complex over Q; d_k maps position k to
/// position k-1 and is stored with rank(position k-1) rows.
struct RationalMatrixChain {
  std::vector<RationalMatrix> differentials;       // differentials[k-1] is d_k
  std::vector<std::vector<std::string>> basis_tags;  // per position

  std::size_t positions() const { return basis_tags.size(); }
  std::size_t dim(std::size_t k) const { return basis_tags.at(k).size(); }
  const RationalMatrix& d(std::size_t k) const { return differentials.at(k - 1); }
  RationalMatrix& d(std::size_t k) { return differentials.at(k - 1); }
};

namespace detail {

inline std::vector<std::vector<int>> subsets(int n, int k)
{
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Multisets of size k from {0..n-1} as sorted index lists, lexicographic.
inline std::vector<std::vector<int>> multisets(int n, int k)
{
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::string list_tag(const std::vector<int>& v)
{
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "}";
  return os.str();
}

/// A basis of wedge^k G* (x) S_m X: pairs (subset, multiset).
struct TensorBasis {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;

  TensorBasis(int ng, int k, int nx, int m)
  {
    for (auto& S : subsets(ng, k))
      for (auto& alpha : multisets(nx, m)) {
        index.emplace(std::make_pair(S, alpha), elems.size());
        elems.emplace_back(S, alpha);
      }
  }
  std::size_t size() const { return elems.size(); }
  std::size_t at(const std::vector<int>& S, const std::vector<int>& alpha) const
  {
    return index.at({S, alpha});
  }
};

inline std::vector<int> erase_at(std::vector<int> v, std::size_t pos)
{
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
  return v;
}

inline std::vector<int> insert_sorted(std::vector<int> v, int x)
{
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

/// Sparse vector of wedge^* G* indexed by subsets.
using WedgeVector = std::map<std::vector<int>, Rational>;

/// Contraction by phi(y_r): e_U -> sum_{j in U} A(r, j) (-1)^{pos(j,U)} e_{U \ j}.
inline WedgeVector contract(const WedgeVector& v, const RationalMatrix& A, std::size_t r)
{
  WedgeVector out;
  for (auto& [U, coeff] : v)
    for (std::size_t p = 0; p < U.size(); ++p) {
      const Rational& x = A[r][static_cast<std::size_t>(U[p])];
      if (x == 0) continue;
      Rational term = coeff * x;
      if (p % 2 == 1) term = -term;
      out[erase_at(U, p)] += term;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

/// Explicit differentials of D_i(phi*) at the specialized point, -1 <= i <= c.
///
/// Right strand, positions k = 0..i, basis e_S (x) x^alpha of
/// wedge^k G* (x) S_{i-k} F*:
///   d(e_S x^alpha) = sum_{j in S} (-1)^{pos(j,S)} e_{S\j} (x) sum_r A(r,j) x^{alpha+e_r}.
/// Left strand, positions i+1+m, basis e_S (x) y^beta of
/// wedge^{t+i+m} G* (x) S_m F (x) wedge^t F:
///   d(e_S y^beta) = sum_r beta_r sum_{j in S} A(r,j) (-1)^{pos(j,S)} e_{S\j} (x) y^{beta-e_r}.
/// Splice, position i+1 to i: e_S -> iota_{t-1} ... iota_0 e_S, where iota_r
/// contracts by phi(y_r); its entries are signed t x t minors.
/// Subsets and multisets are sorted index lists in lexicographic order.
inline RationalMatrixChain build_d_complex_matrices(const MorphismSpec& spec, int i, const SpecializedMatrix& sm)
{
  spec.validate();
  const int t = spec.t, c = spec.c, ng = spec.rank_g();
  if (i < -1 || i > c) throw std::invalid_argument("D_i needs -1 <= i <= c");
  if (static_cast<int>(sm.rows()) != t || static_cast<int>(sm.cols()) != ng)
    throw std::invalid_argument("specialized matrix has the wrong shape for this spec");
  const auto& A = sm.entries;

  std::vector<detail::TensorBasis> bases;
  std::vector<bool> right;
  for (int k = 0; k <= i; ++k) {
    bases.emplace_back(ng, k, t, i - k);
    right.push_back(true);
  }
  for (int m = 0; m <= c - i - 1; ++m) {
    bases.emplace_back(ng, t + i + m, t, m);
    right.push_back(false);
  }

  RationalMatrixChain chain;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    std::vector<std::string> tags;
    for (auto& [S, alpha] : bases[k].elems)
      tags.push_back("e" + detail::list_tag(S) + (right[k] ? "⊗x^" : "⊗y^") + detail::list_tag(alpha) +
                     (right[k] ? "" : "⊗top"));
    chain.basis_tags.push_back(std::move(tags));
  }

  for (std::size_t k = 1; k < bases.size(); ++k) {
    const auto& src = bases[k];
    const auto& dst = bases[k - 1];
    RationalMatrix d(dst.size(), std::vector<Rational>(src.size(), Rational(0)));
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& [S, alpha] = src.elems[col];
      if (right[k]) {
        for (std::size_t p = 0; p < S.size(); ++p)
          for (int r = 0; r < t; ++r) {
            const Rational& x = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(S[p])];
            if (x == 0) continue;
            auto row = dst.at(detail::erase_at(S, p), detail::insert_sorted(alpha, r));
            d[row][col] += p % 2 == 0 ? x : Rational(-x);
          }
      } else if (!right[k - 1]) {
        for (std::size_t q = 0; q < alpha.size(); ++q) {
          if (q > 0 && alpha[q] == alpha[q - 1]) continue;
          const int r = alpha[q];
          const auto beta_r = std::count(alpha.begin(), alpha.end(), r);
          auto rest = detail::erase_at(alpha, q);
          for (std::size_t p = 0; p < S.size(); ++p) {
            const Rational& x = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(S[p])];
            if (x == 0) continue;
            auto row = dst.at(detail::erase_at(S, p), rest);
            Rational term = x * beta_r;
            d[row][col] += p % 2 == 0 ? term : Rational(-term);
          }
        }
      } else {
        detail::WedgeVector v{{S, Rational(1)}};
        for (int r = 0; r < t; ++r) v = detail::contract(v, A, static_cast<std::size_t>(r));
        for (auto& [U, coeff] : v) d[dst.at(U, {})][col] += coeff;
      }
    }
    chain.differentials.push_back(std::move(d));
  }
  return chain;
}

inline RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y)
{
  const std::size_t n = x.size(), inner = y.size(), m = y.empty() ? 0 : y.front().size();
  if (!x.empty() && x.front().size() != inner) throw std::invalid_argument("matrix dimensions do not compose");
  RationalMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

inline bool is_zero(const RationalMatrix& m)
{
  for (auto& row : m)
    for (auto& v : row)
      if (v != 0) return false;
  return true;
}

/// Rank by fraction-free Gaussian elimination: each row is cleared of
/// denominators, then eliminated over the integers with Bareiss division.
inline std::size_t exact_rank(const RationalMatrix& m)
{
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (auto& v : m[i]) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = m[i][j] * l;
      a[i][j] = boost::multiprecision::numerator(scaled);
    }
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

struct KoszulReport {
  MorphismSpec spec;
  int i = 0;
  std::uint64_t seed = 0;
  bool dd_zero = true;
  std::vector<std::size_t> ranks;  // r_1..r_L
  bool rank_conditions = true;
  std::int64_t h0_corank = 0;

  bool passed() const { return dd_zero && rank_conditions; }
};

/// d o d = 0, exact ranks, and r_k + r_{k+1} = dim_k for k = 1..L
/// (with r_{L+1} = 0). These are necessary conditions for acyclicity at a
/// generic point, not a proof of it.
inline KoszulReport verify_acyclicity(const RationalMatrixChain& chain)
{
  KoszulReport rep;
  const std::size_t L = chain.differentials.size();
  for (std::size_t k = 2; k <= L; ++k)
    if (!is_zero(multiply(chain.d(k - 1), chain.d(k)))) rep.dd_zero = false;
  for (std::size_t k = 1; k <= L; ++k) rep.ranks.push_back(exact_rank(chain.d(k)));
  for (std::size_t k = 1; k <= L; ++k) {
    std::size_t next = k < L ? rep.ranks[k] : 0;
    if (rep.ranks[k - 1] + next != chain.dim(k)) rep.rank_conditions = false;
  }
  const std::size_t dim0 = chain.positions() ? chain.dim(0) : 0;
  rep.h0_corank = static_cast<std::int64_t>(dim0) - static_cast<std::int64_t>(L ? rep.ranks[0] : 0);
  return rep;
}

inline KoszulReport verify_koszul(const MorphismSpec& spec, int i, std::uint64_t seed)
{
  auto sm = random_specialization(spec, seed);
  auto rep = verify_acyclicity(build_d_complex_matrices(spec, i, sm));
  rep.spec = spec;
  rep.i = i;
  rep.seed = seed;
  return rep;
}

/// Flips the sign of one entry of d_k (k >= 2) that feeds a nonzero column of
/// d_{k-1}, so that d_{k-1} o d_k can no longer vanish.
inline RationalMatrixChain corrupt_chain(RationalMatrixChain chain)
{
  for (std::size_t k = 2; k <= chain.differentials.size(); ++k) {
    auto& dk = chain.d(k);
    const auto& prev = chain.d(k - 1);
    for (std::size_t row = 0; row < dk.size(); ++row) {
      bool feeds = std::any_of(prev.begin(), prev.end(), [&](auto& r) { return r[row] != 0; });
      if (!feeds) continue;
      for (auto& v : dk[row])
        if (v != 0) {
          v = -v;
          return chain;
        }
    }
  }
  throw std::invalid_argument("chain has no entry whose sign flip breaks d o d = 0");
}

inline nlohmann::ordered_json to_json(const KoszulReport& rep)
{
  nlohmann::ordered_json j;
  j["spec"] = {{"t", rep.spec.t}, {"c", rep.spec.c}, {"a", rep.spec.a}, {"b", rep.spec.b}, {"nvars", rep.spec.nvars}};
  j["i"] = rep.i;
  j["seed"] = rep.seed;
  j["dd_zero"] = rep.dd_zero;
  j["ranks"] = rep.ranks;
  j["rank_conditions"] = rep.rank_conditions;
  j["h0_corank"] = rep.h0_corank;
  j["note"] = "rank conditions at a random rational point are necessary, not sufficient, for acyclicity";
  return j;
}

}  // namespace schurres
