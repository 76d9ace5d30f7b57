#ifndef PARTIBLE_JSON_IO_HPP
#define PARTIBLE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "partible/harness.hpp"
#include "partible/reduction.hpp"
#include "partible/text_io.hpp"

namespace partible {

using json = nlohmann::json;

// {"order": 2, "coeffs": ["k", "-(2*k+3)*(1+2*z)", "k+3"], "epsilon": 1}
// coeffs holds a_0 .. a_J in the exact-core text grammar.
inline json operator_to_json(const ShiftOp& L) {
  json j;
  j["order"] = L.order();
  json coeffs = json::array();
  for (const auto& a : L.coeffs()) coeffs.push_back(render_kpoly(a));
  j["coeffs"] = coeffs;
  if (L.epsilon() != 0) j["epsilon"] = L.epsilon();
  return j;
}

inline ShiftOp operator_from_json(const json& j) {
  std::vector<KPoly> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_kpoly(s.get<std::string>()));
  int eps = j.value("epsilon", 0);
  ShiftOp L(std::move(coeffs), eps);
  if (j.contains("order") && j["order"].get<int>() != L.order())
    throw error("operator_from_json: declared order does not match coefficients");
  return L;
}

namespace detail {

// Re-express a Z[z] numerator as a polynomial in eta, using the linear
// relation z = -eta (eps = 1) or z = eta - 1 (eps = -1).
inline std::string render_in_eta(const ZPoly& num, int epsilon) {
  ZPoly in_eta = (epsilon == 1) ? num.compose_linear(Rat(-1), Rat(0))
                                : num.compose_linear(Rat(1), Rat(-1));
  std::string s = render_zpoly(in_eta, "eta");
  if (!in_eta.is_constant() && in_eta.coeffs().size() > 1) return "(" + s + ")";
  return s;
}

}  // namespace detail

inline json certificate_to_json(const ReductionCertificate& cert) {
  json j;
  j["m"] = cert.m;
  j["gamma"] = Rat(cert.gamma).get_str();
  if (cert.epsilon != 0) j["epsilon"] = cert.epsilon;
  j["degree"] = cert.degree;
  j["ell"] = cert.ell;
  j["basis"] = cert.ell_basis ? "schroder" : "centered";
  if (cert.ell_basis) j["eta"] = "(1-epsilon*(1+2*z))/2";

  json residual = json::array();
  for (const auto& [i, u] : cert.residual) {
    if (cert.ell_basis)
      residual.push_back({i, detail::render_in_eta(u.as_polynomial(), cert.epsilon)});
    else
      residual.push_back({i, render_zpoly(u.num()) +
                                 (u.is_polynomial() ? "" : " / " + render_zpoly(u.den()))});
  }
  j["residual"] = residual;

  json combo = json::array();
  ZPoly eta = cert.epsilon != 0 ? eta_poly(cert.epsilon) : ZPoly(1);
  for (const auto& term : cert.combo) {
    if (cert.ell_basis) {
      auto [pow, num] = term.v.as_power_denominator(eta);
      combo.push_back({term.j, detail::render_in_eta(num, cert.epsilon),
                       "eta^" + std::to_string(pow)});
    } else {
      combo.push_back({term.j, render_zpoly(term.v.num()), render_zpoly(term.v.den())});
    }
  }
  j["combo"] = combo;
  return j;
}

// Only the schroder ("ell_basis") form is accepted back; it is the one
// the CLI emits and the harness certifies.
inline ReductionCertificate certificate_from_json(const json& j) {
  if (j.at("basis").get<std::string>() != "schroder")
    throw error("certificate_from_json: only the schroder basis form is supported");
  ReductionCertificate cert;
  cert.m = j.at("m").get<long>();
  cert.gamma = Rat(j.at("gamma").get<std::string>());
  cert.epsilon = j.at("epsilon").get<int>();
  cert.degree = j.value("degree", 1);
  cert.ell = j.value("ell", 2);
  cert.ell_basis = true;

  ZPoly eta = eta_poly(cert.epsilon);
  KPoly eta_k(eta);
  auto parse_num = [&](const std::string& s) {
    KPoly f = parse_kpoly(s, &eta_k);
    if (f.degree() > 0) throw error("certificate_from_json: coefficient depends on k");
    return f.coeff(0);
  };

  for (const auto& entry : j.at("residual")) {
    int i = entry.at(0).get<int>();
    cert.residual.push_back({i, RatFunc(parse_num(entry.at(1).get<std::string>()))});
  }
  for (const auto& entry : j.at("combo")) {
    int jj = entry.at(0).get<int>();
    ZPoly num = parse_num(entry.at(1).get<std::string>());
    std::string dens = entry.at(2).get<std::string>();
    if (dens.rfind("eta^", 0) != 0)
      throw error("certificate_from_json: denominator must be eta^u");
    unsigned long u = std::stoul(dens.substr(4));
    cert.combo.push_back({jj, RatFunc(num, eta.pow(u)), schroder_basis(jj)});
  }
  return cert;
}

inline json report_to_json(const CongruenceReport& rep, bool include_points = true) {
  json j;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  j["ok"] = rep.ok();
  if (include_points) {
    json pts = json::array();
    for (const auto& rec : rep.points) {
      pts.push_back({{"p", rec.p},
                     {"r", rec.r},
                     {"epsilon", rec.epsilon},
                     {"z", rec.z.get_str()},
                     {"family", rec.family},
                     {"residue", rec.residue},
                     {"expected", rec.expected},
                     {"pass", rec.pass}});
    }
    j["points"] = pts;
  }
  return j;
}

}  // namespace partible

#endif
