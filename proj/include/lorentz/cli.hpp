#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentz/ag_algebra.hpp"
#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/hessian.hpp"
#include "lorentz/json.hpp"
#include "lorentz/lgv.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/stability.hpp"
#include "lorentz/toeplitz.hpp"

namespace lorentz::cli {

using json::Json;

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_internal = 3 };

inline LinearForm parse_point(std::string_view text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 2) throw Error(ErrorCode::parse_error, "expected a pair a,b but got '" + std::string(text) + "'");
  return LinearForm{v[0], v[1]};
}

/// `a,b; c,d; ...`; blank text is the empty list.
inline std::vector<LinearForm> parse_points(std::string_view text) {
  std::vector<LinearForm> out;
  for (auto part : detail::split(detail::trim(text), ';')) {
    if (detail::trim(part).empty()) continue;
    out.push_back(parse_point(part));
  }
  return out;
}

/// Point sets for j = 0, 1, ... separated by `|`.
inline std::vector<std::vector<LinearForm>> parse_pointsets(std::string_view text) {
  std::vector<std::vector<LinearForm>> out;
  for (auto part : detail::split(text, '|')) out.push_back(parse_points(part));
  return out;
}

/// Reads a form file: `#` lines are comments, the rest is joined.
inline std::string read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
  std::string line, text;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    text += std::string(t) + " ";
  }
  return text;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void flatten(const Json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out << prefix << ": [";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar_text(v[k]);
      out << "]\n";
      return;
    }
    for (std::size_t k = 0; k < v.size(); ++k) flatten(v[k], prefix + "[" + std::to_string(k) + "]", out);
    return;
  }
  out << prefix << ": " << scalar_text(v) << "\n";
}

inline void emit(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "table") flatten(doc, "", out);
  else out << doc.dump(2) << "\n";
}

inline MinorOptions minor_options_from_env() {
  MinorOptions opts;
  if (const char* raw = std::getenv("LORENTZ_MINOR_BUDGET"); raw && *raw) {
    const std::string_view text = lorentz::detail::trim(raw);
    if (!lorentz::detail::is_integer_literal(text) || text.front() == '-')
      throw Error(ErrorCode::invalid_argument, "LORENTZ_MINOR_BUDGET must be a nonnegative integer");
    opts.max_order = std::stoul(std::string(text));
  }
  return opts;
}

inline int exit_for(ErrorCode code) { return code == ErrorCode::budget_exhausted ? exit_internal : exit_usage; }

inline void emit_error(std::string_view code, const std::string& message, std::ostream& out) {
  Json doc;
  doc["error"] = Json{{"code", std::string(code)}, {"message", message}};
  out << doc.dump(2) << "\n";
}

}  // namespace detail

/// Runs one invocation; args excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total-positivity and Hodge-Riemann checks for binary forms", "lorentz"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string form_text, file, format = "json";
  auto* form_opt = app.add_option("--form", form_text, "form text `[c:|monomial:] [d:] r_0, ..., r_d`");
  auto* file_opt = app.add_option("--file", file, "file holding the form text");
  form_opt->excludes(file_opt);
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  int i = 0, j = 0, window = -1, budget = 64;
  std::string ell, ell0, forms, cone, generators, pointsets, points, matrix_text, property = "both";
  std::string epsilon = "1/1024";

  auto* classify_cmd = app.add_subcommand("classify", "strict and non-strict Lorentzian orders");
  auto* toeplitz_cmd = app.add_subcommand("toeplitz", "phi^i(F) with TP/TN verdicts");
  auto* i_opt = toeplitz_cmd->add_option("--i", i, "order");
  auto* m_opt = toeplitz_cmd->add_option("--matrix", matrix_text, "dense matrix `a,b; c,d` instead of a form");
  i_opt->excludes(m_opt);
  toeplitz_cmd->add_option("--property", property, "tp, tn or both")->check(CLI::IsMember({"tp", "tn", "both"}));

  auto* hessian_cmd = app.add_subcommand("hessian", "Hessian matrix, determinants and signature");
  hessian_cmd->add_option("--i", i, "index")->required();
  auto* h_ell = hessian_cmd->add_option("--ell", ell, "evaluation point a,b");
  auto* h_pts = hessian_cmd->add_option("--points", points, "points `a,b; ...` for the mixed Hessian");
  h_ell->excludes(h_pts);

  auto* hrr_cmd = app.add_subcommand("hrr", "ordinary HRR_i at a linear form");
  auto* sl_cmd = app.add_subcommand("sl", "SL_i at a linear form");
  for (auto* sub : {hrr_cmd, sl_cmd}) {
    sub->add_option("--ell", ell, "linear form a,b")->required();
    sub->add_option("--up-to,--i", i, "order i")->required();
  }

  auto* mixed_cmd = app.add_subcommand("mixed-hrr", "mixed HRR_i on a cone or at point sets");
  mixed_cmd->add_option("--up-to,--i", i, "order i")->required();
  auto* cone_opt = mixed_cmd->add_option("--cone", cone, "open or closed")->check(CLI::IsMember({"open", "closed"}));
  mixed_cmd->add_option("--cone-generators", generators, "generators `a,b; c,d` of a nonstandard cone")->needs(cone_opt);
  auto* ps_opt = mixed_cmd->add_option("--pointsets", pointsets, "point sets `a,b; a,b | a,b` for j = 0..i");
  cone_opt->excludes(ps_opt);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of A_F");
  auto* sperner_cmd = app.add_subcommand("sperner", "Sperner number s(F)");
  auto* annihilator_cmd = app.add_subcommand("annihilator", "generators of Ann(F)");

  auto* primitive_cmd = app.add_subcommand("primitive", "primitive subspace basis");
  primitive_cmd->add_option("--j", j, "degree")->required();
  primitive_cmd->add_option("--ell0", ell0, "linear form a,b")->required();
  primitive_cmd->add_option("--forms", forms, "d-2j forms `a,b; ...` (default: copies of ell0)");

  auto* stable_cmd = app.add_subcommand("stable", "stability of F");
  auto* nstable_cmd = app.add_subcommand("normally-stable", "stability of the tilde form");
  auto* pf_cmd = app.add_subcommand("pf", "TN of phi^i for i up to a window");
  pf_cmd->add_option("--window", window, "largest order checked (default d/2)");

  auto* approximate_cmd = app.add_subcommand("approximate", "certified TP approximation of an i-Lorentzian form");
  approximate_cmd->add_option("--i", i, "order")->required();
  approximate_cmd->add_option("--epsilon", epsilon, "target sup distance");
  approximate_cmd->add_option("--budget", budget, "number of halvings");

  auto* straighten_cmd = app.add_subcommand("straighten", "coordinate change from an HRR witness");
  straighten_cmd->add_option("--ell", ell, "linear form a,b")->required();
  straighten_cmd->add_option("--i", i, "order")->required();
  straighten_cmd->add_option("--budget", budget, "number of halvings");

  auto* factor_cmd = app.add_subcommand("verify-factorization", "");
  factor_cmd->group("");
  factor_cmd->add_option("--i", i, "index")->required();
  factor_cmd->add_option("--points", points, "d-2i points `a,b; ...`");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    detail::emit_error("usage", e.what(), out);
    return exit_usage;
  }

  try {
    const MinorOptions minors = detail::minor_options_from_env();
    CLI::App* sub = app.get_subcommands().front();
    Json doc;
    doc["command"] = sub->get_name();
    bool pass = true;

    ParsedForm parsed;
    bool have_form = false;
    auto load = [&]() -> const BivariateForm& {
      if (!have_form) {
        if (form_text.empty() && file.empty())
          throw Error(ErrorCode::invalid_argument, "a form is required (--form or --file)");
        parsed = parse_form(file.empty() ? form_text : read_form_file(file));
        have_form = true;
        doc["input"] = json::form(parsed.form, parsed.convention);
      }
      return parsed.form;
    };
    auto put_verdict = [&](const char* key, const Verdict& v) {
      doc[key] = json::verdict(v);
      pass = pass && v.pass;
    };

    if (sub == classify_cmd) {
      doc["classification"] = json::lorentz_class(classify(load(), minors));
    } else if (sub == toeplitz_cmd) {
      Matrix m;
      if (!matrix_text.empty()) {
        m = parse_matrix(matrix_text);
      } else {
        const auto& f = load();
        if (i_opt->count() == 0) throw Error(ErrorCode::invalid_argument, "toeplitz needs --i or --matrix");
        doc["i"] = i;
        m = phi(f, i).dense();
      }
      doc["matrix"] = json::matrix(m);
      if (property != "tn") put_verdict("TP", is_totally_positive(m));
      if (property != "tp") put_verdict("TN", is_totally_nonnegative(m, minors));
    } else if (sub == hessian_cmd) {
      const auto& f = load();
      const auto spec = hessian_spec(f, i);
      Matrix h;
      doc["i"] = i;
      if (h_pts->count() > 0) {
        const auto pts = parse_points(points);
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(json::point(p));
        doc["points"] = std::move(arr);
        h = eval_mixed_hessian(spec, pts);
      } else {
        if (ell.empty()) throw Error(ErrorCode::invalid_argument, "hessian needs --ell or --points");
        const auto l = parse_point(ell);
        doc["ell"] = json::point(l);
        h = eval_hessian(spec, l.a, l.b);
      }
      doc["matrix"] = json::matrix(h);
      doc["det"] = json::rational(determinant(h));
      doc["permuted_det"] = json::rational(permuted_det(h));
      doc["signature"] = json::signature(signature(h));
    } else if (sub == hrr_cmd || sub == sl_cmd) {
      const auto& f = load();
      const auto l = parse_point(ell);
      doc["ell"] = json::point(l);
      put_verdict("verdict", sub == hrr_cmd ? check_hrr(f, i, l) : check_sl(f, i, l));
    } else if (sub == mixed_cmd) {
      const auto& f = load();
      if (cone_opt->count() > 0) {
        const Cone c = cone == "open" ? Cone::open : Cone::closed;
        doc["cone"] = cone;
        if (!generators.empty()) {
          const auto gens = parse_points(generators);
          if (gens.size() != 2) throw Error(ErrorCode::parse_error, "--cone-generators needs exactly two forms");
          doc["generators"] = Json::array({json::point(gens[0]), json::point(gens[1])});
          put_verdict("verdict", check_mixed_hrr_cone(f, i, c, gens[0], gens[1], minors));
        } else {
          put_verdict("verdict", check_mixed_hrr_cone(f, i, c, minors));
        }
      } else if (ps_opt->count() > 0) {
        put_verdict("verdict", check_mixed_hrr_at(f, i, parse_pointsets(pointsets)));
      } else {
        throw Error(ErrorCode::invalid_argument, "mixed-hrr needs --cone or --pointsets");
      }
    } else if (sub == hilbert_cmd) {
      doc["profile"] = json::profile(profile(load()));
    } else if (sub == sperner_cmd) {
      doc["sperner"] = sperner_number(load());
    } else if (sub == annihilator_cmd) {
      const auto [f1, f2] = annihilator_generators(load());
      Json gens = Json::array();
      for (const auto* g : {&f1, &f2}) gens.push_back(Json{{"degree", g->degree()}, {"text", format_dual(*g)}});
      doc["generators"] = std::move(gens);
    } else if (sub == primitive_cmd) {
      const auto& f = load();
      const auto l0 = parse_point(ell0);
      std::vector<LinearForm> fs = forms.empty()
                                       ? std::vector<LinearForm>(static_cast<std::size_t>(std::max(f.degree() - 2 * j, 0)), l0)
                                       : parse_points(forms);
      const auto ps = primitive_subspace(f, j, l0, fs);
      Json basis = Json::array();
      for (const auto& b : ps.basis) basis.push_back(format_dual(b));
      doc["degree"] = ps.degree;
      doc["basis"] = std::move(basis);
      doc["dimension"] = ps.basis.size();
      doc["expected_dimension"] = ps.expected_dimension;
      doc["dimension_matches"] = ps.dimension_matches;
      pass = ps.dimension_matches;
    } else if (sub == stable_cmd) {
      put_verdict("verdict", is_stable(load()));
    } else if (sub == nstable_cmd) {
      put_verdict("verdict", is_normally_stable(load()));
    } else if (sub == pf_cmd) {
      const auto& f = load();
      put_verdict("verdict", pf_window_check(f, window < 0 ? f.degree() / 2 : window, minors));
    } else if (sub == approximate_cmd) {
      const auto& f = load();
      ApproxOptions opts;
      opts.epsilon = parse_rational(epsilon);
      opts.budget = budget;
      opts.minors = minors;
      doc["i"] = i;
      doc["epsilon"] = json::rational(opts.epsilon);
      doc["steps"] = json::approximation(approximate_tp(f, i, opts));
    } else if (sub == straighten_cmd) {
      const auto& f = load();
      const auto l = parse_point(ell);
      const auto sigma = straighten_from_hrr(f, l, i, budget);
      const auto g = substitute(f, sigma);
      doc["sigma"] = json::coord_change(sigma);
      doc["form"] = json::form(g);
      put_verdict("certificate", is_strictly_lorentzian(g, i));
    } else if (sub == factor_cmd) {
      put_verdict("verdict", verify_factorization(load(), i, parse_points(points)));
    }

    detail::emit(doc, format, out);
    return pass ? exit_pass : exit_fail;
  } catch (const Error& e) {
    detail::emit_error(to_string(e.code()), e.what(), out);
    return detail::exit_for(e.code());
  } catch (const std::exception& e) {
    detail::emit_error("internal", e.what(), out);
    return exit_internal;
  }
}

}  // namespace lorentz::cli
