#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lorentz/ag_algebra.hpp"
#include "lorentz/bipoly.hpp"
#include "lorentz/hessian.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz::json {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

inline Json rational(const Rational& r) { return to_string(r); }

inline Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational(r));
  return out;
}

inline Json point(const LinearForm& l) { return Json::array({rational(l.a), rational(l.b)}); }

inline Json matrix(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json form(const BivariateForm& f, CoeffConvention convention = CoeffConvention::normalized) {
  Json out;
  out["degree"] = f.degree();
  out["convention"] = std::string(to_string(convention));
  out["c"] = rationals(f.coeffs());
  out["monomial"] = rationals(to_monomial_coeffs(f));
  return out;
}

inline Json verdict(const Verdict& v) {
  Json out;
  out["property"] = v.property;
  out["pass"] = v.pass;
  if (v.order) out["order"] = *v.order;
  if (v.witness) {
    out["witness"] = Json{{"rows", v.witness->rows}, {"cols", v.witness->cols}, {"value", rational(v.witness->value)}};
  }
  if (v.failure) {
    Json pts = Json::array();
    for (const auto& p : v.failure->points) pts.push_back(point(p));
    out["failure"] = Json{{"degree", v.failure->degree}, {"points", std::move(pts)}, {"value", rational(v.failure->value)}};
  }
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

inline Json signature(const SignatureReport& s) {
  return Json{{"n_plus", s.n_plus}, {"n_zero", s.n_zero}, {"n_minus", s.n_minus}, {"signature", s.signature()}};
}

inline Json profile(const AlgebraProfile& p) {
  return Json{{"hilbert", p.hilbert}, {"sperner", p.sperner}, {"socle_degree", p.socle_degree}};
}

inline Json lorentz_class(const LorentzClass& c) {
  Json out;
  out["order_strict"] = c.order_strict;
  out["order"] = c.order;
  Json per = Json::array();
  for (std::size_t i = 0; i < c.strict.size(); ++i)
    per.push_back(Json{{"i", i}, {"strict", verdict(c.strict[i])}, {"lorentzian", verdict(c.nonstrict[i])}});
  out["per_order"] = std::move(per);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

inline Json coord_change(const CoordChange& s) {
  return Json::array({Json::array({rational(s.p), rational(s.r)}), Json::array({rational(s.q), rational(s.s)})});
}

inline Json approximation(const std::vector<ApproxStep>& steps) {
  Json out = Json::array();
  for (const auto& st : steps) {
    Json rs = Json::array();
    for (const auto& r : st.rank_steps)
      rs.push_back(Json{{"t", rational(r.t)}, {"u", rational(r.u)}, {"sign", r.sign}, {"rank_after", r.rank_after}});
    out.push_back(Json{{"level", st.level},
                       {"t", rational(st.t_final)},
                       {"rank_steps", std::move(rs)},
                       {"c", rationals(st.form.coeffs())},
                       {"distance", rational(st.distance)}});
  }
  return out;
}

}  // namespace lorentz::json
