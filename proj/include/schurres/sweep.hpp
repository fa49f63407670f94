#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "graded.hpp"
#include "koszul.hpp"
#include "lascoux.hpp"

namespace schurres {

struct SweepCheck {
  std::string spec;
  std::string name;
  bool ok = false;
  std::string detail;
};

/// (-1)^L T^{-s} N_in(1/T), the numerator expected after complex_dual_twist(., s)
/// of a complex of length L with numerator N_in.
inline LaurentPolynomial dual_numerator(const ComplexSpec& in, int s)
{
  auto r = hilbert_numerator(in).reflected(-s);
  return in.length() % 2 == 0 ? r : r.scaled(-1);
}

/// Euler rank 0 and divisibility of the numerator by (1-T)^codim.
inline std::string shape_problem(const ComplexSpec& cx)
{
  if (euler_rank(cx) != 0) return "euler rank " + std::to_string(euler_rank(cx));
  auto hn = hilbert_numerator(cx);
  if (!hn.divisible_by_one_minus_t_power(cx.codim))
    return "numerator " + hn.to_string() + " not divisible by (1-T)^" + std::to_string(cx.codim);
  return "";
}

/// Runs the Betti-level and explicit-matrix invariant suite for one spec.
inline void check_spec(const MorphismSpec& spec, const std::string& tag, const std::vector<std::uint64_t>& seeds,
                       int koszul_max_t, std::vector<SweepCheck>& out)
{
  const int t = spec.t, c = spec.c;
  auto record = [&](std::string name, const std::function<std::string()>& body) {
    SweepCheck chk{tag, std::move(name), false, ""};
    try {
      chk.detail = body();
      chk.ok = chk.detail.empty();
    } catch (const std::exception& e) {
      chk.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(chk));
  };

  for (int i = 1; i <= t; ++i)
    record("lascoux i=" + std::to_string(i), [&]() -> std::string {
      auto L = lascoux_resolution(spec, i);
      if (auto p = shape_problem(L); !p.empty()) return p;
      if (L.length() != L.codim) return "length " + std::to_string(L.length());
      if (L.positions[1].size() != 1 || L.positions.back().size() != 1) return "extreme positions not unique";
      auto want = binomial(t, i) * binomial(t + c - 1, i);
      if (L.rank_at(1) != want) return "first syzygy rank " + std::to_string(L.rank_at(1));
      return "";
    });

  record("lascoux(t) == D_0", [&]() -> std::string {
    return same_betti(lascoux_resolution(spec, t), eagon_northcott_family(spec, 0)) ? "" : "tables differ";
  });

  for (int i = -1; i <= c; ++i)
    record("D_" + std::to_string(i), [&]() { return shape_problem(eagon_northcott_family(spec, i)); });

  for (int p = 1; p <= t; ++p)
    record("schur power p=" + std::to_string(p), [&]() -> std::string {
      auto S = schur_power_resolution(spec, p);
      if (auto pr = shape_problem(S); !pr.empty()) return pr;
      auto L = lascoux_resolution(spec, t + 1 - p);
      if (hilbert_numerator(S) != dual_numerator(L, -p * spec.ell())) return "duality of numerators fails";
      auto J = Partition::rectangle(p, c - 1);
      if (S.module_at(0) != schur_generator_degrees(J, spec.f_dual_twists())) return "position 0 is not Σ^J F*";
      return "";
    });

  if (c == 2)
    record("schur power p=1 == D_1", [&]() -> std::string {
      return same_betti(schur_power_resolution(spec, 1), eagon_northcott_family(spec, 1)) ? "" : "tables differ";
    });

  if ((c == 2 || c == 3) && t >= 2) {
    record("M⊗M assembly", [&]() { return shape_problem(tensor_mm_resolution(spec)); });
    record("S_2M⊗I_t assembly", [&]() -> std::string {
      auto s2m = s2m_tensor_it_resolution(spec);
      if (auto p = shape_problem(s2m); !p.empty()) return p;
      auto d1 = eagon_northcott_family(spec, 1);
      const Pieces x(spec);
      LaurentPolynomial mm;
      if (c == 2)
        mm = hilbert_numerator(schur_power_resolution(spec, 2)) + hilbert_numerator(eagon_northcott_family(spec, 2));
      else
        mm = hilbert_numerator(tensor_mm_resolution(spec));
      auto expect = hilbert_numerator(complex_tensor(d1, x.Gd, "G*")) -
                    hilbert_numerator(complex_tensor(d1, x.Fd, "F*")) + mm;
      return hilbert_numerator(s2m) == expect ? "" : "four-term numerator identity fails";
    });
    record("∧^2M assembly", [&]() -> std::string {
      auto w = wedge2_resolution(spec);
      if (auto p = shape_problem(w); !p.empty()) return p;
      if (hilbert_numerator(w) !=
          hilbert_numerator(tensor_mm_resolution(spec)) - hilbert_numerator(eagon_northcott_family(spec, 2)))
        return "numerator differs from M⊗M minus S_2M";
      if (c == 2 && hilbert_numerator(w) != hilbert_numerator(schur_power_resolution(spec, 2)))
        return "numerator differs from the wedge^2 M Schur-power resolution";
      auto h2 = w.find(2, "H");
      auto h3 = w.find(3, "H");
      if (!h2 || !h3 || h2->module != h3->module || h2->module != h_summand(spec)) return "H summands mismatch";
      auto pred = be_predicted_terms(spec, 2);
      auto trimmed = drop_source(w, "H");
      for (std::size_t k = 0; k < 3; ++k)
        if (trimmed.module_at(k) != pred[k]) return "predicted term " + std::to_string(k) + " differs";
      return "";
    });
  }

  if (c == 3)
    record("normal module", [&]() -> std::string {
      auto N = normal_module_resolution(spec);
      if (auto p = shape_problem(N); !p.empty()) return p;
      return N.rank_at(0) == t * (t + 2) ? "" : "position 0 rank";
    });

  if (t <= koszul_max_t)
    for (int i = -1; i <= c; ++i)
      for (auto seed : seeds)
        record("koszul i=" + std::to_string(i) + " seed=" + std::to_string(seed), [&]() -> std::string {
          auto sm = random_specialization(spec, seed);
          auto chain = build_d_complex_matrices(spec, i, sm);
          auto table = eagon_northcott_family(spec, i);
          if (chain.positions() != table.size()) return "position count differs from D_i table";
          for (std::size_t k = 0; k < chain.positions(); ++k)
            if (static_cast<std::int64_t>(chain.dim(k)) != table.rank_at(k)) return "basis size differs from D_i table";
          auto rep = verify_acyclicity(chain);
          if (!rep.dd_zero) return "d∘d != 0";
          if (!rep.rank_conditions) return "rank conditions fail";
          if (rep.h0_corank != 0) return "nonzero corank at position 0";
          if (chain.differentials.size() >= 2 && verify_acyclicity(corrupt_chain(chain)).dd_zero)
            return "corrupted chain not detected";
          return "";
        });
}

/// All specs with t <= max_t, c <= max_c, in linear and mixed degrees.
inline std::vector<SweepCheck> run_sweep(int max_t, int max_c, const std::vector<std::uint64_t>& seeds,
                                         int koszul_max_t = 3, int nvars = 6)
{
  std::vector<SweepCheck> out;
  for (int t = 1; t <= max_t; ++t)
    for (int c = 1; c <= max_c; ++c)
      for (bool mixed : {false, true}) {
        auto spec = mixed ? MorphismSpec::mixed(t, c, nvars) : MorphismSpec::linear(t, c, nvars);
        check_spec(spec, (mixed ? "mixed " : "linear ") + spec.to_string(), seeds, koszul_max_t, out);
      }
  return out;
}

}  // namespace schurres
