#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "graded.hpp"
#include "lascoux.hpp"
#include "partition.hpp"
#include "schur.hpp"

namespace schurres {

/// Betti-level cone over three complexes Q -> P -> F: output position m is
/// Q_{m-2} (+) P_{m-1} (+) F_m, with leading empty positions removed.
/// Labels are kept; the result is flagged possibly-non-minimal.
inline ComplexSpec mapping_cone3(const ComplexSpec& Q, const ComplexSpec& P, const ComplexSpec& F)
{
  ComplexSpec out;
  out.minimality = Minimality::PossiblyNonMinimal;
  auto place = [&](const ComplexSpec& cx, std::size_t shift) {
    for (std::size_t k = 0; k < cx.positions.size(); ++k)
      for (auto& s : cx.positions[k]) out.add(k + shift, s.source, s.module);
  };
  place(F, 0);
  place(P, 1);
  place(Q, 2);
  while (!out.positions.empty() && out.positions.front().empty()) out.positions.erase(out.positions.begin());
  out.normalize();
  out.codim = std::max({Q.codim, P.codim, F.codim});
  for (auto* cx : {&Q, &P, &F})
    for (auto& n : cx->notes)
      if (std::find(out.notes.begin(), out.notes.end(), n) == out.notes.end()) out.notes.push_back(n);
  return out;
}

namespace detail {

inline Summand& find_summand(ComplexSpec& cx, std::size_t pos, const std::string& label)
{
  if (pos < cx.positions.size())
    for (auto& s : cx.positions[pos])
      if (s.source == label) return s;
  throw std::logic_error("no summand '" + label + "' at position " + std::to_string(pos));
}

inline void rename(ComplexSpec& cx, std::size_t pos, const std::string& from, const std::string& to)
{
  find_summand(cx, pos, from).source = to;
}

}  // namespace detail

/// Cancels a copy of X between the summand `hi_label` at position `hi` and the
/// summand `lo_label` at position hi-1 (a unit component of the differential).
/// What remains of each keeps the given new label. Throws if X does not fit.
inline void split_off(ComplexSpec& cx, std::size_t hi, const std::string& hi_label, const std::string& lo_label,
                      const GradedFreeModule& X, const std::string& hi_rest = "", const std::string& lo_rest = "")
{
  if (hi == 0) throw std::invalid_argument("split_off needs a position >= 1");
  auto& top = detail::find_summand(cx, hi, hi_label);
  top.module = difference(top.module, X);
  if (!hi_rest.empty()) top.source = hi_rest;
  auto& bottom = detail::find_summand(cx, hi - 1, lo_label);
  bottom.module = difference(bottom.module, X);
  if (!lo_rest.empty()) bottom.source = lo_rest;
  cx.normalize();
}

/// Commonly used modules attached to phi.
struct Pieces {
  MorphismSpec spec;
  GradedFreeModule F, G, Fd, Gd;
  int ell = 0;

  explicit Pieces(const MorphismSpec& s)
      : spec(s),
        F(GradedFreeModule::from_twists(s.b)),
        G(GradedFreeModule::from_twists(s.a)),
        Fd(GradedFreeModule::from_twists(s.f_dual_twists())),
        Gd(GradedFreeModule::from_twists(s.g_dual_twists())),
        ell(s.ell())
  {
  }

  GradedFreeModule wedge_f(int k) const { return exterior_power(spec.b, k); }
  GradedFreeModule wedge_g(int k) const { return exterior_power(spec.a, k); }
  GradedFreeModule wedge_fd(int k) const { return exterior_power(spec.f_dual_twists(), k); }
  GradedFreeModule wedge_gd(int k) const { return exterior_power(spec.g_dual_twists(), k); }
  GradedFreeModule sym_f(int k) const { return symmetric_power(spec.b, k); }
  GradedFreeModule sym_g(int k) const { return symmetric_power(spec.a, k); }
  GradedFreeModule sym_fd(int k) const { return symmetric_power(spec.f_dual_twists(), k); }
};

inline void require_c(const MorphismSpec& spec, std::initializer_list<int> allowed, const char* what)
{
  for (int c : allowed)
    if (spec.c == c) return;
  throw std::invalid_argument(std::string(what) + " is not available for c = " + std::to_string(spec.c));
}

/// Resolution of the normal module Hom(I_t, B_t) in codimension 3.
///
/// Cone over R -> G (x) BR <- F (x) BR style data, with BR = [F*; G*; G(-l); F(-l)]
/// the Buchsbaum-Rim resolution, followed by the four unit cancellations
/// that leave
///   G(x)F* <- (F(x)F* (+) G(x)G*)/R <- F(x)G* (+) S_2G(-l) <- G(x)F(-l) <- wedge^2 F(-l).
inline ComplexSpec normal_module_resolution(const MorphismSpec& spec)
{
  spec.validate();
  require_c(spec, {3}, "the normal-module resolution");
  const Pieces x(spec);
  const int l = x.ell;

  ComplexSpec br;
  br.add(0, "F*", x.Fd);
  br.add(1, "G*", x.Gd);
  br.add(2, "G(-ℓ)", twist(x.G, -l));
  br.add(3, "F(-ℓ)", twist(x.F, -l));

  ComplexSpec Q;
  Q.add(0, "R", GradedFreeModule::free(0));
  Q.add(1, "∧^2G(-ℓ)", twist(x.wedge_g(2), -l));
  Q.add(2, "G⊗F(-ℓ)", twist(tensor(x.G, x.F), -l));
  Q.add(3, "S_2F(-ℓ)", twist(x.sym_f(2), -l));

  auto cx = mapping_cone3(Q, complex_tensor(br, x.F, "F"), complex_tensor(br, x.G, "G"));
  split_off(cx, 2, "R", "F⊗F*", GradedFreeModule::free(0), "", "(F⊗F*)/R");
  split_off(cx, 4, "G⊗F(-ℓ)", "F⊗G(-ℓ)", twist(tensor(x.G, x.F), -l));
  split_off(cx, 5, "S_2F(-ℓ)", "F⊗F(-ℓ)", twist(x.sym_f(2), -l), "", "∧^2F(-ℓ)");
  split_off(cx, 3, "∧^2G(-ℓ)", "G⊗G(-ℓ)", twist(x.wedge_g(2), -l), "", "S_2G(-ℓ)");
  cx.resolved_name = "N_{B_" + std::to_string(spec.t) + "}";
  cx.minimality = Minimality::ClaimedMinimal;
  cx.codim = 3;
  return cx;
}

/// Canonical label of the summand that the M (x) M assembly splits by Pieri.
inline std::string pieri_split_label() { return "S_2F*⊗∧^{t+1}G*⊗F⊗∧^tF"; }

/// Resolution of S_2 M (x) I_t for c in {2, 3}.
///
/// c = 2: cone over D_1 -> F (x) D_2 -> G (x) D_2, twisted by -l.
/// c = 3: cone over HomE -> P_{-2}* (x) P -> P_{-3}* (x) P, twisted by -l, where
/// P = [wedge^2 G(-l); G(x)F(-l); S_2F(-l)] (labels P_{-1}, P_{-2}, P_{-3}) and
/// HomE is (P_{-1}* (x) P with R split off) (+) N.
inline ComplexSpec s2m_tensor_it_resolution(const MorphismSpec& spec)
{
  spec.validate();
  require_c(spec, {2, 3}, "the S_2M⊗I_t resolution");
  const Pieces x(spec);
  const int l = x.ell;
  ComplexSpec cx;

  if (spec.c == 2) {
    auto d1 = eagon_northcott_family(spec, 1);
    auto d2 = eagon_northcott_family(spec, 2);
    cx = mapping_cone3(d1, complex_tensor(d2, x.F, "F"), complex_tensor(d2, x.G, "G"));
    cx = complex_twist(cx, -l);
    detail::rename(cx, 1, "F⊗S_2F*", pieri_split_label());
  } else {
    const std::vector<std::pair<std::string, GradedFreeModule>> p{
        {"P_{-1}", twist(x.wedge_g(2), -l)},
        {"P_{-2}", twist(tensor(x.G, x.F), -l)},
        {"P_{-3}", twist(x.sym_f(2), -l)},
    };
    auto block = [&](std::size_t k) {
      ComplexSpec b;
      const auto dual = dual_twist(p[k].second);
      for (std::size_t j = 0; j < p.size(); ++j)
        b.add(j, p[k].first + "*⊗" + p[j].first, tensor(dual, p[j].second));
      return b;
    };
    // The cone of R -> P_{-1}* (x) P, after R cancels against the identity.
    auto C = block(0);
    {
      auto& s = detail::find_summand(C, 0, "P_{-1}*⊗P_{-1}");
      s.module = difference(s.module, GradedFreeModule::free(0));
      s.source = "P_{-1}*⊗P_{-1}/R";
    }
    auto N = normal_module_resolution(spec);
    ComplexSpec homE;
    for (std::size_t k = 0; k < std::max(C.size(), N.size()); ++k) {
      if (k < C.size())
        for (auto& s : C.positions[k]) homE.add(k, s.source, s.module);
      if (k < N.size())
        for (auto& s : N.positions[k]) homE.add(k, "N:" + s.source, s.module);
    }
    cx = mapping_cone3(homE, block(1), block(2));
    cx = complex_twist(cx, -l);
  }
  cx.resolved_name = "S_2M⊗I_" + std::to_string(spec.t);
  cx.minimality = Minimality::PossiblyNonMinimal;
  cx.codim = spec.c;
  cx.notes.clear();
  return cx;
}

/// The H summand F* (x) wedge^t F (x) wedge^{t+1} G*.
inline GradedFreeModule h_summand(const MorphismSpec& spec)
{
  const Pieces x(spec);
  return tensor(x.Fd, x.wedge_f(spec.t), x.wedge_gd(spec.t + 1));
}

/// Pieri split S_2F* (x) F (x) wedge^{t+1}G* (x) wedge^t F
///   = H (+) Sigma^{(0,1^{t-2},3)}F* (x) wedge^t F (x) wedge^{t+1}G* (x) wedge^t F.
inline std::pair<GradedFreeModule, GradedFreeModule> pieri_split_pieces(const MorphismSpec& spec)
{
  const Pieces x(spec);
  const int t = spec.t;
  std::vector<int> shape(static_cast<std::size_t>(t), 1);
  shape.front() = 0;
  shape.back() = 3;
  auto rest = tensor(schur_generator_degrees(Partition(shape), spec.f_dual_twists()), x.wedge_f(t),
                     x.wedge_gd(t + 1), x.wedge_f(t));
  return {h_summand(spec), rest};
}

/// Resolution of M (x) M from 0 -> S_2M(x)I_t -> G*(x)M -> F*(x)M -> M(x)M -> 0,
/// for c in {2, 3} and t >= 2. The position-3 summand
/// S_2F*(x)wedge^{t+1}G*(x)F(x)wedge^tF is split by Pieri into H and the rest;
/// F*(x)(top of D_1's dual strand) at position 2 is labelled H.
inline ComplexSpec tensor_mm_resolution(const MorphismSpec& spec)
{
  spec.validate();
  require_c(spec, {2, 3}, "the M⊗M assembly");
  if (spec.t < 2) throw std::invalid_argument("the M⊗M assembly needs t >= 2");
  const Pieces x(spec);
  const int t = spec.t;

  auto s2m = s2m_tensor_it_resolution(spec);
  if (spec.c == 3) detail::rename(s2m, 1, "P_{-3}*⊗P_{-2}", pieri_split_label());
  auto d1 = eagon_northcott_family(spec, 1);
  auto cx = mapping_cone3(s2m, complex_tensor(d1, x.Gd, "G*"), complex_tensor(d1, x.Fd, "F*"));

  const std::string h_source = "F*⊗∧^" + std::to_string(t + 1) + "G*⊗∧^" + std::to_string(t) + "F";
  detail::rename(cx, 2, h_source, "H");

  auto [h, rest] = pieri_split_pieces(spec);
  auto& whole = detail::find_summand(cx, 3, pieri_split_label());
  if (h + rest != whole.module)
    throw std::logic_error("Pieri split pieces do not add up to " + pieri_split_label());
  auto& pos3 = cx.positions[3];
  auto it = std::find_if(pos3.begin(), pos3.end(), [](const Summand& s) { return s.source == pieri_split_label(); });
  *it = Summand{"H", h};
  pos3.insert(it + 1, Summand{"Σ^{(0,1^{t-2},3)}F*⊗∧^tF⊗∧^{t+1}G*⊗∧^tF", rest});

  cx.resolved_name = "M⊗M";
  cx.minimality = Minimality::PossiblyNonMinimal;
  cx.codim = spec.c;
  return cx;
}

/// Resolution of wedge^2 M: cone over D_2 -> (M (x) M assembly) with the three
/// licensed cancellations (S_2F* against F*(x)F*, G*(x)F* against one F*(x)G*,
/// wedge^2 G* against G*(x)G*). The H summands are kept.
inline ComplexSpec wedge2_resolution(const MorphismSpec& spec)
{
  spec.validate();
  require_c(spec, {2, 3}, "the wedge^2 M assembly");
  const Pieces x(spec);
  auto d2 = eagon_northcott_family(spec, 2);
  auto cx = mapping_cone3(ComplexSpec{}, d2, tensor_mm_resolution(spec));
  split_off(cx, 1, "S_2F*", "F*⊗F*", x.sym_fd(2), "", "∧^2F*");
  split_off(cx, 2, "G*⊗F*", "G*⊗F*", tensor(x.Gd, x.Fd));
  split_off(cx, 3, "∧^2G*", "G*⊗G*", x.wedge_gd(2), "", "S_2G*");
  cx.resolved_name = "∧^2M";
  cx.minimality = Minimality::PossiblyNonMinimal;
  cx.codim = spec.c;
  return cx;
}

/// Predicted first three terms of a resolution of wedge^p M (p >= 2):
/// wedge^p F*, wedge^{p-1}G* (x) F*, and L_2^{p-1}(G)* (+) A^p(F) (x) wedge^t G*,
/// with A^p(F) = (wedge^{t-p+1}F (x) F*) minus wedge^{t-p}F.
inline std::vector<GradedFreeModule> be_predicted_terms(const MorphismSpec& spec, int p)
{
  spec.validate();
  if (p < 2 || p > spec.t) throw std::invalid_argument("predicted terms need 2 <= p <= t");
  const Pieces x(spec);
  const int t = spec.t;
  std::vector<int> hook(static_cast<std::size_t>(p - 1), 1);
  hook.back() = 2;
  auto l2 = schur_generator_degrees(Partition(hook), spec.g_dual_twists());
  auto ap = difference(tensor(x.wedge_f(t - p + 1), x.Fd), x.wedge_f(t - p));
  return {x.wedge_fd(p), tensor(x.wedge_gd(p - 1), x.Fd), l2 + tensor(ap, x.wedge_gd(t))};
}

}  // namespace schurres
