#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graded.hpp"
#include "partition.hpp"
#include "schur.hpp"

namespace schurres {

namespace detail {

/// "wedge^k X" style factor names; empty for the trivial factor.
inline std::string power_name(const char* op, int k, const std::string& base)
{
  if (k == 0) return "";
  if (k == 1) return base;
  return std::string(op) + std::to_string(k) + base;
}

inline std::string join_factors(std::initializer_list<std::string> parts)
{
  std::string out;
  for (auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "⊗";
    out += p;
  }
  return out.empty() ? "R" : out;
}

}  // namespace detail

/// Betti-level Lascoux resolution of R/I_i(phi).
///
/// Position 0 is R; position k collects, for each nonzero partition I with
/// t-i+1 slots (parts <= t+c-1) whose derived partition I' exists and
/// whose homological degree is -k, the module Sigma^{I*}(G*) (x) Sigma^{I'}(F).
/// Summands are labelled by I.
inline ComplexSpec lascoux_resolution(const MorphismSpec& spec, int i)
{
  spec.validate();
  const int t = spec.t, c = spec.c;
  if (i < 1 || i > t) throw std::invalid_argument("minor size i must satisfy 1 <= i <= t");
  const int q = t - i + 1;
  const int len = q * (t + c - i);

  ComplexSpec cx;
  cx.resolved_name = "R/I_" + std::to_string(i);
  cx.minimality = Minimality::ClaimedMinimal;
  cx.codim = len;
  cx.notes.push_back("assumes depth of I_" + std::to_string(i) + " equals " + std::to_string(len));
  cx.positions.resize(static_cast<std::size_t>(len) + 1);
  cx.positions[0].push_back({"R", GradedFreeModule::free(0)});

  const auto gdual = spec.g_dual_twists();
  for (auto& I : partitions_in_box(q, t + c - 1)) {
    if (I.is_zero()) continue;
    auto s = lascoux_surgery(I, i, t, c);
    if (!s.derived) continue;
    const int pos = -s.homdeg;
    if (pos < 1 || pos > len)
      throw std::logic_error("partition " + I.to_string() + " lands outside the resolution range");
    auto term = tensor(schur_generator_degrees(conjugate(I), gdual), schur_generator_degrees(*s.derived, spec.b));
    cx.add(static_cast<std::size_t>(pos), I.to_string(), std::move(term));
  }
  cx.normalize();
  return cx;
}

/// Betti-level D_i(phi*), -1 <= i <= c, resolving S_i M.
///
/// Positions 0..i carry wedge^k G* (x) S_{i-k} F*; positions i+1+m for
/// m = 0..c-i-1 carry wedge^{t+i+m} G* (x) S_m F (x) wedge^t F.
inline ComplexSpec eagon_northcott_family(const MorphismSpec& spec, int i)
{
  spec.validate();
  const int t = spec.t, c = spec.c;
  if (i < -1 || i > c) throw std::invalid_argument("D_i needs -1 <= i <= c");

  const auto gd = spec.g_dual_twists();
  const auto fd = spec.f_dual_twists();
  const auto detf = exterior_power(spec.b, t);

  ComplexSpec cx;
  switch (i) {
    case 0: cx.resolved_name = "R/I_" + std::to_string(t); break;
    case 1: cx.resolved_name = "M"; break;
    default: cx.resolved_name = "S_" + std::to_string(i) + "M";
  }
  cx.minimality = Minimality::ClaimedMinimal;
  cx.codim = c;
  if (i == -1) cx.notes.push_back("convention-extended: D_-1 is the bare dual strand");

  for (int k = 0; k <= i; ++k) {
    auto m = tensor(exterior_power(gd, k), symmetric_power(fd, i - k));
    std::string label = detail::join_factors(
        {detail::power_name("∧^", k, "G*"), detail::power_name("S_", i - k, "F*")});
    cx.add(static_cast<std::size_t>(k), label, std::move(m));
  }
  for (int m = 0; m <= c - i - 1; ++m) {
    const int w = t + i + m;
    auto mod = tensor(exterior_power(gd, w), symmetric_power(spec.b, m), detf);
    std::string label = detail::join_factors({detail::power_name("∧^", w, "G*"),
                                              detail::power_name("S_", m, "F"),
                                              detail::power_name("∧^", t, "F")});
    cx.add(static_cast<std::size_t>(i + 1 + m), label, std::move(mod));
  }
  cx.normalize();
  return cx;
}

/// Dual of the Lascoux resolution for i = t+1-p, twisted by -p*ell: a
/// resolution of Sigma^{(c-1)^p} M (wedge^p M when c = 2).
inline ComplexSpec schur_power_resolution(const MorphismSpec& spec, int p)
{
  spec.validate();
  if (p < 1 || p > spec.t) throw std::invalid_argument("p must satisfy 1 <= p <= t");
  auto cx = complex_dual_twist(lascoux_resolution(spec, spec.t + 1 - p), -p * spec.ell());
  std::string shape = "(" + std::to_string(spec.c - 1) + "^" + std::to_string(p) + ")";
  cx.resolved_name = "Σ^" + shape + "M";
  if (spec.c == 2) cx.resolved_name += " = ∧^" + std::to_string(p) + "M";
  cx.codim = p * (p + spec.c - 1);
  return cx;
}

}  // namespace schurres
