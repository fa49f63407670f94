#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace schurres {

/// A graded free module  (+)_d R(d)^{m_d}, stored as twist -> multiplicity.
///
/// A stored twist d means a copy of R(d), whose generator sits in degree -d.
/// Paper-style tables transcribe with their printed signs: "R(-2)^30" is {-2: 30}.
class GradedFreeModule {
 public:
  using Map = std::map<int, std::int64_t>;

  GradedFreeModule() = default;
  GradedFreeModule(std::initializer_list<std::pair<const int, std::int64_t>> init)
  {
    for (auto& [d, m] : init) add(d, m);
  }

  /// R(d)^mult.
  static GradedFreeModule free(int twist, std::int64_t mult = 1)
  {
    GradedFreeModule m;
    m.add(twist, mult);
    return m;
  }

  /// One generator per listed twist.
  static GradedFreeModule from_twists(const std::vector<int>& twists)
  {
    GradedFreeModule m;
    for (int d : twists) m.add(d, 1);
    return m;
  }

  void add(int twist, std::int64_t mult)
  {
    if (mult < 0) throw std::invalid_argument("multiplicities must be nonnegative");
    if (mult == 0) return;
    summands_[twist] += mult;
  }

  /// Removes `other` summand-wise; throws if any multiplicity would go negative.
  void subtract(const GradedFreeModule& other)
  {
    for (auto& [d, m] : other.summands_) {
      auto it = summands_.find(d);
      if (it == summands_.end() || it->second < m)
        throw std::domain_error("graded difference would have a negative multiplicity at twist " + std::to_string(d));
      it->second -= m;
      if (it->second == 0) summands_.erase(it);
    }
  }

  std::int64_t multiplicity(int twist) const
  {
    auto it = summands_.find(twist);
    return it == summands_.end() ? 0 : it->second;
  }

  std::int64_t rank() const
  {
    std::int64_t r = 0;
    for (auto& [d, m] : summands_) r += m;
    return r;
  }

  bool empty() const noexcept { return summands_.empty(); }
  const Map& summands() const noexcept { return summands_; }
  auto begin() const { return summands_.begin(); }
  auto end() const { return summands_.end(); }

  std::string to_string() const
  {
    if (empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = summands_.rbegin(); it != summands_.rend(); ++it) {
      os << (first ? "" : " + ") << "R(" << it->first << ")^" << it->second;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

  friend GradedFreeModule operator+(GradedFreeModule x, const GradedFreeModule& y)
  {
    for (auto& [d, m] : y.summands_) x.add(d, m);
    return x;
  }

 private:
  Map summands_;
};

/// Multiset difference x - y; std::domain_error if y is not a submultiset.
inline GradedFreeModule difference(GradedFreeModule x, const GradedFreeModule& y)
{
  x.subtract(y);
  return x;
}

/// Dual, then twist by s: R(d) becomes R(-d + s).
inline GradedFreeModule dual_twist(const GradedFreeModule& m, int s = 0)
{
  GradedFreeModule out;
  for (auto& [d, k] : m) out.add(-d + s, k);
  return out;
}

inline GradedFreeModule twist(const GradedFreeModule& m, int s)
{
  GradedFreeModule out;
  for (auto& [d, k] : m) out.add(d + s, k);
  return out;
}

inline GradedFreeModule tensor(const GradedFreeModule& x, const GradedFreeModule& y)
{
  GradedFreeModule out;
  for (auto& [dx, mx] : x)
    for (auto& [dy, my] : y) out.add(dx + dy, mx * my);
  return out;
}

template <typename... Rest>
GradedFreeModule tensor(const GradedFreeModule& x, const GradedFreeModule& y, const Rest&... rest)
{
  return tensor(tensor(x, y), rest...);
}

/// The data of a graded map phi: F = (+) R(b_i) -> G = (+) R(a_j) with
/// rank F = t, rank G = t+c-1, over a polynomial ring in `nvars` variables.
struct MorphismSpec {
  int t = 1;
  int c = 1;
  std::vector<int> a;  // twists of G, t+c-1 entries
  std::vector<int> b;  // twists of F, t entries
  int nvars = 1;

  static MorphismSpec linear(int t, int c, int nvars = 0)
  {
    MorphismSpec s;
    s.t = t;
    s.c = c;
    s.a.assign(static_cast<std::size_t>(t + c - 1), 1);
    s.b.assign(static_cast<std::size_t>(t), 0);
    s.nvars = nvars > 0 ? nvars : 2 * (t + c);
    s.validate();
    return s;
  }

  /// a = (1,...,1,2), b = (0,...,0,-1): a spec with mixed entry degrees.
  static MorphismSpec mixed(int t, int c, int nvars = 0)
  {
    MorphismSpec s = linear(t, c, nvars);
    s.a.back() = 2;
    s.b.back() = -1;
    s.validate();
    return s;
  }

  /// Throws std::invalid_argument unless sizes match and every entry of phi
  /// has positive degree (phi(F) lies in mG).
  void validate() const
  {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (c < 1) throw std::invalid_argument("c must be at least 1");
    if (nvars < 1) throw std::invalid_argument("nvars must be at least 1");
    if (static_cast<int>(a.size()) != t + c - 1)
      throw std::invalid_argument("degree vector a must have t+c-1 = " + std::to_string(t + c - 1) + " entries");
    if (static_cast<int>(b.size()) != t)
      throw std::invalid_argument("degree vector b must have t = " + std::to_string(t) + " entries");
    for (int aj : a)
      for (int bi : b)
        if (aj - bi < 1) throw std::invalid_argument("phi is not minimal: some a_j - b_i < 1");
  }

  int rank_g() const noexcept { return t + c - 1; }

  /// ell = sum a_j - sum b_i.
  int ell() const noexcept
  {
    return std::accumulate(a.begin(), a.end(), 0) - std::accumulate(b.begin(), b.end(), 0);
  }

  std::vector<int> f_twists() const { return b; }
  std::vector<int> g_twists() const { return a; }
  std::vector<int> f_dual_twists() const
  {
    std::vector<int> out;
    for (int v : b) out.push_back(-v);
    return out;
  }
  std::vector<int> g_dual_twists() const
  {
    std::vector<int> out;
    for (int v : a) out.push_back(-v);
    return out;
  }

  std::string to_string() const
  {
    auto list = [](const std::vector<int>& v) {
      std::ostringstream os;
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
      return os.str();
    };
    std::ostringstream os;
    os << "t=" << t << " c=" << c << " a=(" << list(a) << ") b=(" << list(b) << ") nvars=" << nvars;
    return os.str();
  }

  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

enum class Minimality { ClaimedMinimal, PossiblyNonMinimal };

inline std::string to_string(Minimality m)
{
  return m == Minimality::ClaimedMinimal ? "claimed-minimal" : "possibly-non-minimal";
}

/// One labelled direct summand of a resolution term.
struct Summand {
  std::string source;
  GradedFreeModule module;

  friend bool operator==(const Summand&, const Summand&) = default;
};

using Position = std::vector<Summand>;

/// Betti-level description of a free complex: one list of labelled summands
/// per homological position, position 0 first.
struct ComplexSpec {
  std::vector<Position> positions;
  std::string resolved_name;
  Minimality minimality = Minimality::ClaimedMinimal;
  int codim = 0;                   // codimension of the support of the resolved module
  std::vector<std::string> notes;  // hypotheses assumed, conventions extended

  std::size_t size() const noexcept { return positions.size(); }

  /// Homological length (index of the last position); -1 when empty.
  int length() const noexcept { return static_cast<int>(positions.size()) - 1; }

  /// Summands at position k merged into one graded module.
  GradedFreeModule module_at(std::size_t k) const
  {
    GradedFreeModule m;
    if (k >= positions.size()) return m;
    for (auto& s : positions[k]) m = m + s.module;
    return m;
  }

  std::vector<GradedFreeModule> modules() const
  {
    std::vector<GradedFreeModule> out;
    for (std::size_t k = 0; k < positions.size(); ++k) out.push_back(module_at(k));
    return out;
  }

  std::int64_t rank_at(std::size_t k) const { return module_at(k).rank(); }

  /// Appends a summand at position k, growing the position list as needed.
  void add(std::size_t k, std::string source, GradedFreeModule module)
  {
    if (module.empty()) return;
    if (positions.size() <= k) positions.resize(k + 1);
    positions[k].push_back({std::move(source), std::move(module)});
  }

  /// Drops empty summands and trailing empty positions.
  void normalize()
  {
    for (auto& pos : positions)
      pos.erase(std::remove_if(pos.begin(), pos.end(), [](const Summand& s) { return s.module.empty(); }), pos.end());
    while (!positions.empty() && positions.back().empty()) positions.pop_back();
  }

  const Summand* find(std::size_t k, std::string_view source) const
  {
    if (k >= positions.size()) return nullptr;
    for (auto& s : positions[k])
      if (s.source == source) return &s;
    return nullptr;
  }
};

/// Graded content of two complexes agrees position by position (labels ignored).
inline bool same_betti(const ComplexSpec& x, const ComplexSpec& y) { return x.modules() == y.modules(); }

/// Reverses the positions and applies dual_twist(., s) to every summand.
inline ComplexSpec complex_dual_twist(const ComplexSpec& cx, int s)
{
  ComplexSpec out;
  out.resolved_name = cx.resolved_name;
  out.minimality = cx.minimality;
  out.codim = cx.codim;
  out.notes = cx.notes;
  for (auto it = cx.positions.rbegin(); it != cx.positions.rend(); ++it) {
    Position p;
    for (auto& sm : *it) p.push_back({sm.source, dual_twist(sm.module, s)});
    out.positions.push_back(std::move(p));
  }
  out.normalize();
  return out;
}

/// Twists every summand by s; `suffix` is appended to each label when given.
inline ComplexSpec complex_twist(const ComplexSpec& cx, int s, const std::string& suffix = "")
{
  ComplexSpec out = cx;
  for (auto& pos : out.positions)
    for (auto& sm : pos) {
      sm.module = twist(sm.module, s);
      sm.source += suffix;
    }
  return out;
}

/// Tensors every summand with a fixed graded module; labels become
/// `prefix` + label (or just `prefix` without its trailing tensor sign when
/// the label is the ring R).
inline ComplexSpec complex_tensor(const ComplexSpec& cx, const GradedFreeModule& m, const std::string& prefix)
{
  ComplexSpec out = cx;
  for (auto& pos : out.positions)
    for (auto& sm : pos) {
      sm.module = tensor(sm.module, m);
      sm.source = sm.source == "R" ? prefix : prefix + "⊗" + sm.source;
    }
  out.normalize();
  return out;
}

/// Removes every summand carrying the given label.
inline ComplexSpec drop_source(const ComplexSpec& cx, std::string_view source)
{
  ComplexSpec out = cx;
  for (auto& pos : out.positions)
    pos.erase(std::remove_if(pos.begin(), pos.end(), [&](const Summand& s) { return s.source == source; }), pos.end());
  out.normalize();
  return out;
}

inline std::int64_t euler_rank(const ComplexSpec& cx)
{
  std::int64_t e = 0;
  for (std::size_t k = 0; k < cx.positions.size(); ++k) e += (k % 2 == 0 ? 1 : -1) * cx.rank_at(k);
  return e;
}

/// Dense Laurent polynomial with integer coefficients: sum_k coeffs[k] T^(low+k).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  void add_term(int exponent, std::int64_t coeff)
  {
    if (coeff == 0) return;
    if (coeffs_.empty()) {
      low_ = exponent;
      coeffs_.push_back(coeff);
      return;
    }
    if (exponent < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - exponent), 0);
      low_ = exponent;
    }
    auto idx = static_cast<std::size_t>(exponent - low_);
    if (idx >= coeffs_.size()) coeffs_.resize(idx + 1, 0);
    coeffs_[idx] += coeff;
    trim();
  }

  std::int64_t coefficient(int exponent) const
  {
    if (coeffs_.empty() || exponent < low_ || exponent >= low_ + static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  /// Exponent -> coefficient for the nonzero terms.
  std::map<int, std::int64_t> terms() const
  {
    std::map<int, std::int64_t> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) out[low_ + static_cast<int>(k)] = coeffs_[k];
    return out;
  }

  /// Quotient by (1 - T), if it divides exactly.
  std::optional<LaurentPolynomial> divide_one_minus_t() const
  {
    if (is_zero()) return LaurentPolynomial();
    // p = (1 - T) q  <=>  q_k = sum_{j <= k} p_j, with the total sum zero.
    LaurentPolynomial q;
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      acc += coeffs_[k];
      if (k + 1 < coeffs_.size()) q.add_term(low_ + static_cast<int>(k), acc);
    }
    if (acc != 0) return std::nullopt;
    return q;
  }

  /// Largest k with (1 - T)^k dividing this polynomial (capped at `cap`).
  int one_minus_t_order(int cap = 1 << 20) const
  {
    if (is_zero()) return cap;
    int k = 0;
    LaurentPolynomial cur = *this;
    while (k < cap) {
      auto q = cur.divide_one_minus_t();
      if (!q) break;
      cur = *q;
      ++k;
    }
    return k;
  }

  bool divisible_by_one_minus_t_power(int k) const { return one_minus_t_order(k) >= k; }

  /// p(1/T) * T^shift.
  LaurentPolynomial reflected(int shift) const
  {
    LaurentPolynomial out;
    for (auto& [e, v] : terms()) out.add_term(-e + shift, v);
    return out;
  }

  LaurentPolynomial scaled(std::int64_t s) const
  {
    LaurentPolynomial out;
    for (auto& [e, v] : terms()) out.add_term(e, v * s);
    return out;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& x, const LaurentPolynomial& y)
  {
    LaurentPolynomial out = x;
    for (auto& [e, v] : y.terms()) out.add_term(e, v);
    return out;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& x, const LaurentPolynomial& y) { return x + y.scaled(-1); }
  friend bool operator==(const LaurentPolynomial& x, const LaurentPolynomial& y) { return x.terms() == y.terms(); }

  std::string to_string() const
  {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : terms()) {
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      std::int64_t a = v < 0 ? -v : v;
      if (e == 0) os << a;
      else {
        if (a != 1) os << a;
        os << "T";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// sum_k (-1)^k sum_d m_{k,d} T^{-d}: the numerator of the Hilbert series of
/// the resolved module over (1 - T)^{nvars}.
inline LaurentPolynomial hilbert_numerator(const ComplexSpec& cx)
{
  LaurentPolynomial p;
  for (std::size_t k = 0; k < cx.positions.size(); ++k)
    for (auto& [d, m] : cx.module_at(k)) p.add_term(-d, (k % 2 == 0 ? 1 : -1) * m);
  return p;
}

/// A twist shared by two adjacent positions: a degree-0 map could cancel
/// up to `multiplicity` copies. Reported only, never applied.
struct CancellationCandidate {
  std::size_t position;  // the higher position; the partner sits at position - 1
  int twist;
  std::int64_t multiplicity;
};

inline std::vector<CancellationCandidate> cancellation_candidates(const ComplexSpec& cx)
{
  std::vector<CancellationCandidate> out;
  for (std::size_t k = 1; k < cx.positions.size(); ++k) {
    auto hi = cx.module_at(k);
    auto lo = cx.module_at(k - 1);
    for (auto& [d, m] : hi) {
      auto other = lo.multiplicity(d);
      if (other > 0) out.push_back({k, d, std::min(m, other)});
    }
  }
  return out;
}

enum class Format { Text, Json, Csv };

inline Format parse_format(std::string_view name)
{
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

namespace detail {

/// (twist, source, multiplicity) rows of one position: twists descending,
/// summand order kept for equal twists.
inline std::vector<std::tuple<int, std::string, std::int64_t>> position_rows(const Position& pos)
{
  std::vector<std::tuple<int, std::string, std::int64_t>> rows;
  for (auto& s : pos)
    for (auto& [d, m] : s.module) rows.emplace_back(d, s.source, m);
  std::stable_sort(rows.begin(), rows.end(), [](auto& x, auto& y) { return std::get<0>(x) > std::get<0>(y); });
  return rows;
}

inline std::string render_text(const ComplexSpec& cx)
{
  std::ostringstream os;
  os << "resolution of " << cx.resolved_name << " (" << to_string(cx.minimality) << ")\n";
  const auto mods = cx.modules();
  if (mods.empty()) {
    os << "(empty complex)\n";
    return os.str();
  }
  // Row r holds generators of degree r + k at position k, i.e. twist -(r + k).
  int rmin = 0, rmax = 0;
  bool any = false;
  for (std::size_t k = 0; k < mods.size(); ++k)
    for (auto& [d, m] : mods[k]) {
      int r = -d - static_cast<int>(k);
      if (!any) rmin = rmax = r;
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      any = true;
    }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (std::size_t k = 0; k < mods.size(); ++k) header.push_back(std::to_string(k));
  grid.push_back(header);
  std::vector<std::string> total{"total:"};
  for (auto& m : mods) total.push_back(std::to_string(m.rank()));
  grid.push_back(total);
  for (int r = rmin; any && r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (std::size_t k = 0; k < mods.size(); ++k) {
      auto m = mods[k].multiplicity(-(r + static_cast<int>(k)));
      row.push_back(m == 0 ? "." : std::to_string(m));
    }
    grid.push_back(row);
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  for (auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(width[j])) << row[j];
    os << "\n";
  }
  for (auto& n : cx.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ComplexSpec& cx)
{
  nlohmann::ordered_json j;
  j["resolved_name"] = cx.resolved_name;
  j["minimality"] = to_string(cx.minimality);
  j["positions"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < cx.positions.size(); ++k) {
    nlohmann::ordered_json pos;
    pos["index"] = k;
    pos["summands"] = nlohmann::ordered_json::array();
    for (auto& [d, src, m] : detail::position_rows(cx.positions[k])) {
      nlohmann::ordered_json s;
      s["twist"] = d;
      s["rank"] = m;
      s["source"] = src;
      pos["summands"].push_back(std::move(s));
    }
    j["positions"].push_back(std::move(pos));
  }
  if (!cx.notes.empty()) j["notes"] = cx.notes;
  return j;
}

inline std::string render(const ComplexSpec& cx, Format format)
{
  switch (format) {
    case Format::Text:
      return detail::render_text(cx);
    case Format::Json:
      return to_json(cx).dump(2) + "\n";
    case Format::Csv: {
      std::ostringstream os;
      os << "position,twist,multiplicity,source\n";
      for (std::size_t k = 0; k < cx.positions.size(); ++k)
        for (auto& [d, src, m] : detail::position_rows(cx.positions[k]))
          os << k << "," << d << "," << m << ",\"" << src << "\"\n";
      return os.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

inline std::string render(const ComplexSpec& cx, std::string_view format) { return render(cx, parse_format(format)); }

}  // namespace schurres
