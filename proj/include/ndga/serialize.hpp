#pragma once

#include <json.hpp>
#include <string>

#include "ndga/mirror.hpp"

namespace ndga {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

inline void to_json(Json& j, const GR& z) { j = z.to_string(); }

inline void to_json(Json& j, const Matrix& m) {
  j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    j.push_back(row);
  }
}

inline void to_json(Json& j, const Fingerprint& f) {
  j = Json{{"dim", f.dim},
           {"dual_sequence", f.dual},
           {"lower_central", f.lower_central},
           {"ascending", f.ascending},
           {"derived", f.derived},
           {"betti", f.betti},
           {"exact_two_forms", f.exact_dim},
           {"pencil_rank", f.pencil_rank},
           {"pencil_form_rank", f.pencil_form_rank},
           {"pencil_form_gap", f.pencil_form_gap}};
}

inline void to_json(Json& j, const ComplexStructureEq& e) {
  j = Json{{"epsilon", e.epsilon}, {"rho", e.rho}, {"A", e.A}, {"B", e.B}, {"C", e.C}, {"D", e.D}};
}

inline GR gr_from_json(const Json& v, const char* key) {
  if (!v.contains(key)) return GR(0);
  const Json& x = v.at(key);
  if (x.is_string()) return GR::parse(x.get<std::string>());
  if (x.is_number_integer()) return GR(x.get<long>());
  throw Error(ErrorCode::SyntaxError, std::string("coefficient ") + key + " must be a string or an integer");
}

// {"epsilon": "1", "rho": "0", "A": "0", "B": "3", "C": "2", "D": "0"}; missing keys are 0
inline ComplexStructureEq eq_from_json(const Json& v) {
  if (!v.is_object()) throw Error(ErrorCode::SyntaxError, "structure equations must be a JSON object");
  for (auto& [k, x] : v.items())
    if (k != "epsilon" && k != "rho" && k != "A" && k != "B" && k != "C" && k != "D")
      throw Error(ErrorCode::SyntaxError, "unknown key " + k);
  ComplexStructureEq e{gr_from_json(v, "epsilon"), gr_from_json(v, "rho"), gr_from_json(v, "A"),
                       gr_from_json(v, "B"),       gr_from_json(v, "C"),   gr_from_json(v, "D")};
  e.validate();
  return e;
}

inline void to_json(Json& j, const InvariantProfile& p) {
  j = Json{{"n1", p.n1},
           {"n2", p.n2},
           {"delta1", p.delta1},
           {"delta2", to_string(p.delta2)},
           {"d", p.d_span},
           {"rank_x", p.rank_x},
           {"abs_b_squared", to_string(p.abs_b2)},
           {"abs_c_squared", to_string(p.abs_c2)},
           {"disc_sign", p.sign_disc},
           {"abelian", p.abelian}};
}

inline Json dga_json(const DGAlgebra& a) {
  const BasisSpace& sp = a.space();
  Json d = Json::object(), br = Json::object();
  for (int i = 0; i < a.dim(); ++i) {
    d[sp.names()[i]] = a.d_table()[i].to_string(&sp);
    for (int j = i + 1; j < a.dim(); ++j) {
      Multivector b = Multivector::from_vector(a.dim(), a.bracket(i, j));
      if (!b.is_zero()) br["[" + sp.names()[i] + "," + sp.names()[j] + "]"] = b.to_string(&sp);
    }
  }
  return Json{{"generators", sp.names()}, {"d", d}, {"brackets", br}};
}

inline void to_json(Json& j, const AxiomReport& r) {
  j = Json{{"graded_commutativity", r.graded_commutativity},
           {"jacobi", r.jacobi},
           {"distributivity", r.distributivity},
           {"leibniz", r.leibniz},
           {"compatibility", r.compatibility},
           {"d_squared", r.d_squared},
           {"first_failure", r.first_failure}};
}

inline void to_json(Json& j, const SymplecticReport& r) {
  j = Json{{"exists", r.exists},
           {"closed_two_forms", r.closed_dim},
           {"cubic", r.cubic.to_string()},
           {"witness", r.exists ? Json(r.witness.to_string()) : Json(nullptr)}};
}

inline void to_json(Json& j, const RowReport& r) {
  j = Json{{"row", r.row + 1},
           {"expected", r.expected},
           {"samples", r.samples},
           {"constraint_ok", r.constraint_ok},
           {"class_ok", r.class_ok},
           {"underlying_ok", r.underlying_ok},
           {"underlying_seen", r.underlying_seen},
           {"failures", r.failures},
           {"passed", r.passed()}};
}

inline void to_json(Json& j, const ChainStep& s) {
  j = Json{{"label", s.label}, {"equation", s.equation.to_string()}, {"in_raw_span", s.in_raw_span}};
}

inline void to_json(Json& j, const ObstructionReport& r) {
  j = Json{{"B", r.B},
           {"C", r.C},
           {"a1", r.a1},
           {"a2", r.a2},
           {"a3", r.a3},
           {"raw_equations", r.raw_equations},
           {"steps", r.steps},
           {"factorization_residual", r.factorization_residual.to_string()},
           {"forced", r.forced.to_string()},
           {"expected", r.expected.to_string()},
           {"verdict", r.verdict}};
}

inline void to_json(Json& j, const MirrorCase& c) {
  j = Json{{"name", c.name},
           {"equations", c.eq},
           {"real_algebra", print(c.real)},
           {"omega", c.omega.to_string()},
           {"phi", c.phi},
           {"verified", c.verified()},
           {"first_failure", c.report.first_failure}};
}

inline void to_json(Json& j, const IsoSearchResult& r) {
  Json ob = Json::array();
  for (auto& p : r.obstruction) ob.push_back(p.to_string());
  j = Json{{"found", r.found}, {"reason", r.reason}, {"obstruction", ob}};
  if (r.found) j["phi"] = r.phi;
}

inline void to_json(Json& j, const TheoremRow& r) {
  j = Json{{"name", r.name}, {"verdict", r.verdict}, {"samples", r.samples}, {"confirmed", r.confirmed},
           {"detail", r.detail}};
}

inline void to_json(Json& j, const TheoremReport& r) {
  j = Json{{"rows", r.rows}, {"candidates", r.candidates}, {"passed", r.passed()}};
}

}  // namespace ndga
