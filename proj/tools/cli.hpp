#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <schurres/schurres.hpp>

namespace schurres::cli {

enum ExitCode : int { Ok = 0, ValidationError = 1, InvariantFailure = 2 };

struct Result {
  int code = Ok;
  std::string out;
  std::string err;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed degree list '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed degree list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty degree list");
  return out;
}

struct SpecOptions {
  int t = 0;
  int c = 0;
  std::string a;
  std::string b;
  bool linear = false;
  int nvars = 6;

  MorphismSpec build() const
  {
    if (linear && (!a.empty() || !b.empty())) throw std::invalid_argument("--linear excludes --a and --b");
    MorphismSpec s;
    if (linear) {
      if (t < 1 || c < 1) throw std::invalid_argument("t and c must be positive");
      s = MorphismSpec::linear(t, c, nvars);
    } else {
      if (a.empty() || b.empty()) throw std::invalid_argument("give --linear or both --a and --b");
      s.t = t;
      s.c = c;
      s.a = parse_int_list(a);
      s.b = parse_int_list(b);
      s.nvars = nvars;
    }
    s.validate();
    return s;
  }
};

inline void add_spec_options(CLI::App* sub, SpecOptions& o)
{
  sub->add_option("--t", o.t, "rank of F")->required();
  sub->add_option("--c", o.c, "codimension (rank G = t+c-1)")->required();
  sub->add_option("--a", o.a, "twists of G, comma separated");
  sub->add_option("--b", o.b, "twists of F, comma separated");
  sub->add_flag("--linear", o.linear, "a = (1,...,1), b = (0,...,0)");
  sub->add_option("--nvars", o.nvars, "number of variables")->capture_default_str();
}

inline std::string koszul_text(const KoszulReport& rep)
{
  std::ostringstream os;
  os << "D_" << rep.i << " for " << rep.spec.to_string() << ", seed " << rep.seed << "\n";
  os << "d∘d = 0: " << (rep.dd_zero ? "yes" : "NO") << "\n";
  os << "ranks:";
  for (auto r : rep.ranks) os << " " << r;
  os << "\n";
  os << "rank conditions: " << (rep.rank_conditions ? "hold" : "FAIL") << "\n";
  os << "corank at position 0: " << rep.h0_corank << "\n";
  os << "note: rank conditions at a random rational point are necessary, not sufficient, for acyclicity\n";
  return os.str();
}

}  // namespace detail

/// Runs one command line (without the program name). `default_format` is
/// used when --format is absent.
inline Result run(const std::vector<std::string>& args, const std::string& default_format = "text")
{
  CLI::App app{"Betti tables of determinantal resolutions", "schur-resolve"};
  app.require_subcommand(1);

  detail::SpecOptions spec_opts;
  int i = 0;
  int p = 0;
  std::uint64_t seed = 42;
  std::string format = default_format;
  std::string output;
  bool drop_h = false;
  int max_t = 4, max_c = 3;

  auto common = [&](CLI::App* sub) {
    detail::add_spec_options(sub, spec_opts);
    sub->add_option("--format", format, "text, json or csv");
    sub->add_option("--output", output, "write to this file instead of standard output");
  };

  auto* resolve = app.add_subcommand("resolve", "Lascoux resolution of R/I_i");
  common(resolve);
  resolve->add_option("--i", i, "minor size")->required();
  auto* power = app.add_subcommand("schur-power", "resolution of the Schur power Σ^{(c-1)^p} M");
  common(power);
  power->add_option("--p", p, "power")->required();
  auto* eagon = app.add_subcommand("eagon-northcott", "the complex D_i resolving S_i M");
  common(eagon);
  eagon->add_option("--i", i, "symmetric power, -1 <= i <= c")->required();
  auto* wedge2 = app.add_subcommand("wedge2", "cone assembly resolving ∧^2 M");
  common(wedge2);
  wedge2->add_flag("--drop-H", drop_h, "hide the summands labelled H");
  auto* normal = app.add_subcommand("normal", "resolution of the normal module (c = 3)");
  common(normal);
  auto* s2m = app.add_subcommand("s2m-it", "resolution of S_2M ⊗ I_t (c = 2 or 3)");
  common(s2m);
  auto* predict = app.add_subcommand("predict-be", "predicted first three terms for ∧^p M");
  common(predict);
  predict->add_option("--p", p, "power, 2 <= p <= t")->required();
  auto* koszul = app.add_subcommand("verify-koszul", "explicit D_i matrices at a random point");
  common(koszul);
  koszul->add_option("--i", i, "symmetric power, -1 <= i <= c")->required();
  koszul->add_option("--seed", seed, "random seed")->capture_default_str();
  auto* sweep = app.add_subcommand("sweep", "invariant suite over a parameter grid");
  sweep->add_option("--max-t", max_t, "largest t")->capture_default_str();
  sweep->add_option("--max-c", max_c, "largest c")->capture_default_str();
  sweep->add_option("--seed", seed, "random seed for the matrix checks")->capture_default_str();
  sweep->add_option("--output", output, "write to this file instead of standard output");

  Result res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.code = ValidationError;
    res.err = e.what();
    return res;
  }

  auto emit = [&](const std::string& text) {
    if (output.empty()) {
      res.out = text;
      return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + output);
    f << text;
  };

  try {
    auto* sub = app.get_subcommands().front();
    if (sub == sweep) {
      if (max_t < 1 || max_c < 1) throw std::invalid_argument("sweep bounds must be positive");
      auto checks = run_sweep(max_t, max_c, {seed});
      std::ostringstream os;
      std::size_t failed = 0;
      for (auto& chk : checks) {
        if (chk.ok) continue;
        ++failed;
        os << "FAIL [" << chk.spec << "] " << chk.name << ": " << chk.detail << "\n";
      }
      os << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
      emit(os.str());
      if (failed) res.code = InvariantFailure;
      return res;
    }

    const auto fmt = parse_format(format);
    const auto spec = spec_opts.build();

    if (sub == koszul) {
      auto rep = verify_koszul(spec, i, seed);
      emit(fmt == Format::Json ? to_json(rep).dump(2) + "\n" : detail::koszul_text(rep));
      if (!rep.passed() || rep.h0_corank != 0) res.code = InvariantFailure;
      return res;
    }

    ComplexSpec cx;
    if (sub == resolve) cx = lascoux_resolution(spec, i);
    else if (sub == power) cx = schur_power_resolution(spec, p);
    else if (sub == eagon) cx = eagon_northcott_family(spec, i);
    else if (sub == wedge2) {
      cx = wedge2_resolution(spec);
      if (drop_h) cx = drop_source(cx, "H");
    } else if (sub == normal) cx = normal_module_resolution(spec);
    else if (sub == s2m) cx = s2m_tensor_it_resolution(spec);
    else if (sub == predict) {
      auto terms = be_predicted_terms(spec, p);
      cx.resolved_name = "∧^" + std::to_string(p) + "M (predicted first terms)";
      cx.minimality = Minimality::PossiblyNonMinimal;
      cx.add(0, "∧^pF*", terms[0]);
      cx.add(1, "∧^{p-1}G*⊗F*", terms[1]);
      cx.add(2, "L_2^{p-1}(G)*⊕A^p(F)⊗∧^tG*", terms[2]);
    }
    emit(render(cx, fmt));
  } catch (const std::invalid_argument& e) {
    res.code = ValidationError;
    res.err = e.what();
  } catch (const std::exception& e) {
    res.code = InvariantFailure;
    res.err = e.what();
  }
  return res;
}

/// Default format from SCHUR_RESOLVE_FORMAT, falling back to text.
inline std::string env_default_format()
{
  const char* v = std::getenv("SCHUR_RESOLVE_FORMAT");
  return v && *v ? std::string(v) : std::string("text");
}

}  // namespace schurres::cli
