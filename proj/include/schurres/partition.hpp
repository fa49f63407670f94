#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace schurres {

/// A partition written weakly increasing, 0 <= i_1 <= ... <= i_r.
///
/// Leading zeros are padding: they carry the slot count that several
/// constructions depend on, but two partitions that differ only in leading
/// zeros compare equal.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
  {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0) throw std::invalid_argument("partition parts must be nonnegative");
      if (k > 0 && parts_[k - 1] > parts_[k])
        throw std::invalid_argument("partition parts must be weakly increasing: " + to_string());
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Rectangle (k, k, ..., k) with `rows` parts.
  static Partition rectangle(int rows, int k) { return Partition(std::vector<int>(static_cast<std::size_t>(rows), k)); }

  /// Builds from parts listed largest first (the usual decreasing convention).
  static Partition from_decreasing(std::vector<int> parts)
  {
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
  }

  /// Parses "2,2,3,5,8"; the empty string is the empty partition.
  static Partition parse(std::string_view text)
  {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw std::invalid_argument("malformed partition list");
      std::size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument("malformed partition entry: " + cur);
      out.push_back(v);
      cur.clear();
    };
    if (text.empty()) return Partition();
    for (char ch : text) {
      if (ch == ',') flush();
      else if (ch != ' ') cur.push_back(ch);
    }
    flush();
    return Partition(std::move(out));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t slots() const noexcept { return parts_.size(); }
  int operator[](std::size_t k) const { return parts_.at(k); }

  int weight() const noexcept
  {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  /// Number of nonzero parts.
  int length() const noexcept
  {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; }));
  }

  int largest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  bool is_zero() const noexcept { return largest() == 0; }

  Partition stripped() const
  {
    auto first = std::find_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; });
    return Partition(std::vector<int>(first, parts_.end()));
  }

  /// Left-pads with zeros (or drops leading zeros) to exactly `n` slots.
  Partition padded(std::size_t n) const
  {
    if (static_cast<std::size_t>(length()) > n)
      throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) + " nonzero parts");
    std::vector<int> out(n, 0);
    std::copy(parts_.end() - static_cast<std::ptrdiff_t>(std::min(n, parts_.size())), parts_.end(),
              out.end() - static_cast<std::ptrdiff_t>(std::min(n, parts_.size())));
    return Partition(std::move(out));
  }

  /// Nonzero parts, largest first.
  std::vector<int> decreasing() const
  {
    std::vector<int> out;
    for (auto it = parts_.rbegin(); it != parts_.rend() && *it != 0; ++it) out.push_back(*it);
    return out;
  }

  std::string to_string() const
  {
    std::ostringstream os;
    for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
    return os.str();
  }

  friend bool operator==(const Partition& x, const Partition& y) { return x.decreasing() == y.decreasing(); }
  friend bool operator<(const Partition& x, const Partition& y) { return x.decreasing() < y.decreasing(); }

 private:
  std::vector<int> parts_;
};

/// Column lengths of the Young diagram, weakly increasing.
inline Partition conjugate(const Partition& p)
{
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int k = 0; k < part; ++k) ++cols[static_cast<std::size_t>(k)];
  std::reverse(cols.begin(), cols.end());
  return Partition(std::move(cols));
}

/// Side of the largest square inside the Young diagram.
inline int durfee(const Partition& p)
{
  auto d = p.decreasing();
  int s = 0;
  while (s < static_cast<int>(d.size()) && d[static_cast<std::size_t>(s)] >= s + 1) ++s;
  return s;
}

/// inner is contained in outer, comparing largest parts against largest parts.
inline bool contains(const Partition& inner, const Partition& outer)
{
  auto in = inner.decreasing();
  auto out = outer.decreasing();
  if (in.size() > out.size()) return false;
  for (std::size_t k = 0; k < in.size(); ++k)
    if (in[k] > out[k]) return false;
  return true;
}

struct SurgeryResult {
  std::optional<Partition> derived;  // I' with exactly t slots, when it exists
  int durfee = 0;                    // p_I
  int shift = 0;                     // n(I) = (i-1) p_I
  int homdeg = 0;                    // -|I| + n(I)
};

/// The I -> I' rule that indexes the terms of the Lascoux resolution of
/// R/I_i. `I` must have exactly q = t-i+1 slots with parts <= t+c-1.
inline SurgeryResult lascoux_surgery(const Partition& I, int i, int t, int c)
{
  if (t < 1 || c < 1) throw std::invalid_argument("t and c must be positive");
  if (i < 1 || i > t) throw std::invalid_argument("minor size i must satisfy 1 <= i <= t");
  const int q = t - i + 1;
  if (static_cast<int>(I.slots()) != q)
    throw std::invalid_argument("partition " + I.to_string() + " must have exactly " + std::to_string(q) + " slots");
  if (I.largest() > t + c - 1)
    throw std::invalid_argument("partition " + I.to_string() + " has a part exceeding t+c-1");

  SurgeryResult r;
  r.durfee = durfee(I);
  r.shift = (i - 1) * r.durfee;
  r.homdeg = -I.weight() + r.shift;
  if (I.is_zero()) return r;

  const int p = r.durfee;
  const auto& x = I.parts();
  const auto cut = static_cast<std::size_t>(q - p);  // 0-based index of i_{q-p+1}
  if (x[cut] < p + i - 1) return r;
  if (cut > 0 && x[cut - 1] > p) throw std::logic_error("Durfee square is not maximal for " + I.to_string());

  std::vector<int> out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(cut));
  out.insert(out.end(), static_cast<std::size_t>(i - 1), p);
  for (std::size_t k = cut; k < x.size(); ++k) out.push_back(x[k] - (i - 1));
  r.derived = Partition(std::move(out));
  return r;
}

namespace detail {
inline std::vector<std::size_t> differing_slots(const Partition& x, const Partition& y)
{
  const std::size_t n = std::max(x.slots(), y.slots());
  auto px = x.padded(n).parts();
  auto py = y.padded(n).parts();
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < n; ++k)
    if (px[k] != py[k]) diff.push_back(k);
  return diff;
}
}  // namespace detail

/// Shape of the Lascoux differential block from the I-term to the H-term.
///
/// Returns rho = a - h when H is contained in I and the two differ in a single
/// slot; nothing when H is not contained in I (the block is zero) or when
/// they differ in more than one slot (see adjacency_anomalies). Throws
/// std::logic_error if the derived partitions disagree on rho.
inline std::optional<int> adjacency(const Partition& I, const Partition& H, int i, int t, int c)
{
  auto sI = lascoux_surgery(I, i, t, c);
  auto sH = lascoux_surgery(H, i, t, c);
  if (!sI.derived || !sH.derived || I.is_zero() || H.is_zero())
    throw std::invalid_argument("adjacency needs partitions with derived partitions present");
  if (sI.homdeg != sH.homdeg - 1)
    throw std::invalid_argument("adjacency needs homdeg(I) = homdeg(H) - 1");
  if (!contains(H, I)) return std::nullopt;

  auto diff = detail::differing_slots(I, H);
  if (diff.size() != 1) return std::nullopt;
  const int rho = I.padded(I.slots())[diff[0]] - H.padded(I.slots())[diff[0]];

  auto cI = conjugate(*sI.derived);
  auto cH = conjugate(*sH.derived);
  auto ddiff = detail::differing_slots(cI, cH);
  const std::size_t n = std::max(cI.slots(), cH.slots());
  if (ddiff.size() != 1 || cI.padded(n)[ddiff[0]] - cH.padded(n)[ddiff[0]] != rho)
    throw std::logic_error("derived partitions of " + I.to_string() + " and " + H.to_string() +
                           " do not differ by rho in one spot");
  return rho;
}

/// All nonzero partitions with exactly `slots` slots and parts <= maxpart,
/// in increasing lexicographic order of the part vector.
inline std::vector<Partition> partitions_in_box(int slots, int maxpart)
{
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  auto rec = [&](auto&& self, int k, int lo) -> void {
    if (k == slots) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= maxpart; ++v) {
      cur[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct AdjacencyAnomaly {
  Partition I;
  Partition H;
};

/// Admissible pairs H inside I at consecutive homological degree that differ
/// in two or more slots; the one-spot claim predicts this list is empty.
inline std::vector<AdjacencyAnomaly> adjacency_anomalies(int i, int t, int c)
{
  std::vector<AdjacencyAnomaly> out;
  const int q = t - i + 1;
  std::vector<std::pair<Partition, int>> live;
  for (auto& P : partitions_in_box(q, t + c - 1)) {
    if (P.is_zero()) continue;
    auto s = lascoux_surgery(P, i, t, c);
    if (s.derived) live.emplace_back(P, s.homdeg);
  }
  for (auto& [I, hi] : live)
    for (auto& [H, hh] : live)
      if (hi == hh - 1 && contains(H, I) && detail::differing_slots(I, H).size() >= 2) out.push_back({I, H});
  return out;
}

/// Rank of the Schur module on a free module of rank r (Weyl dimension
/// product). Zero when the partition has more than r nonzero parts.
inline std::int64_t schur_rank(const Partition& P, int r)
{
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  if (P.length() > r) return 0;
  auto x = P.padded(static_cast<std::size_t>(r)).parts();
  BigInt num = 1, den = 1;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) {
      num *= (x[static_cast<std::size_t>(v)] - x[static_cast<std::size_t>(u)] + v - u);
      den *= (v - u);
    }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return to_int64(num / den);
}

/// Rank of L_p^q on a free module of rank n, with the vanishing conventions
/// L_p^0 = L_0^q = 0 (q != 1) and L_p^q = 0 for q > n.
inline std::int64_t lpq_rank(int p, int q, int n)
{
  if (p < 0 || q < 0 || n < 0) throw std::invalid_argument("lpq_rank arguments must be nonnegative");
  if (q == 0 || q > n) return 0;
  if (q == 1) return binomial(n + p - 1, p);
  if (p == 0) return 0;
  return to_int64(binomial_big(n + p - 1, q + p - 1) * binomial_big(q + p - 2, p - 1));
}

}  // namespace schurres
