#include "gkz/io/json.hpp"

#include <cmath>
#include <limits>

#include "gkz/error.hpp"

namespace gkz::io {

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return to_int64(v);
  return to_string(v);
}

json to_json(const Rational& v) {
  if (mp::denominator(v) == 1) return to_json(Integer(mp::numerator(v)));
  return to_string(v);
}

json to_json(const FiniteField& k) {
  return {{"p", k.characteristic()}, {"e", k.degree()}, {"modulus", k.modulus()}, {"generator", k.generator().code}};
}

json to_json(const CharacterSpec& chi) { return {{"chi", chi.exponents}}; }

json to_json(const IntMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CycloNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(to_json(c));
  return {{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

json value_json(const CycloNumber& x) {
  const auto z = embed_double(x);
  return {{"value", to_json(x)}, {"complex", {z.re, z.im}}, {"magnitude", std::hypot(z.re, z.im)}};
}

json to_json(const WeightPolynomial& f) {
  json coeffs = json::object();
  for (int k = 0; k <= f.degree(); ++k)
    if (f.coeff(k) != 0) coeffs[std::to_string(k)] = to_json(f.coeff(k));
  return {{"coeffs", std::move(coeffs)}};
}

json to_json(const SpectrumPrediction& s) {
  json w = json::object();
  for (const auto& [v, c] : s.weights) w[std::to_string(v)] = to_json(c);
  return {{"degree", to_json(s.degree)}, {"weights", std::move(w)}, {"signs_consistent", s.signs_consistent}};
}

json to_json(const FaceLattice& L) {
  json faces = json::array();
  for (const auto& f : L.faces()) faces.push_back({{"dim", f.dim}, {"generators", f.generators}, {"parents", f.parents}});
  return {{"faces", std::move(faces)}};
}

json to_json(const FaceEvidence& ev) {
  return {{"face_id", ev.face_id},
          {"dim", ev.dim},
          {"factors", ev.factors},
          {"chi_tau", ev.chi_tau ? json(ev.chi_tau->exponents) : json(nullptr)}};
}

json to_json(const NonresonanceReport& r) {
  json ev = json::array();
  for (const auto& e : r.evidence) ev.push_back(to_json(e));
  return {{"nonresonant", r.nonresonant}, {"evidence", std::move(ev)}};
}

json to_json(const NondegeneracyReport& r) {
  json faces = json::array();
  for (const auto& f : r.faces) {
    json j = {{"face_id", f.face_id}, {"dim", f.dim}, {"columns", f.columns}, {"degenerate", f.degenerate}};
    if (f.degenerate) {
      json w = json::array();
      for (auto e : f.witness) w.push_back(e.code);
      j["degree"] = f.degree;
      j["witness"] = std::move(w);
      j["witness_logs"] = f.witness_logs;
    }
    faces.push_back(std::move(j));
  }
  return {{"nondegenerate", r.nondegenerate}, {"m_max", r.m_max}, {"faces", std::move(faces)}};
}

json to_json(const Charpoly& cp) {
  std::uint64_t L = 1;
  for (const auto& c : cp.coeffs) L = lcm_u64(L, c.conductor());
  json coeffs = json::array();
  for (const auto& c : cp.coeffs) coeffs.push_back(to_json(c.in_conductor(L))["coeffs"]);
  return {{"degree", cp.degree()},
          {"conductor", L},
          {"coeffs", std::move(coeffs)},
          {"consistent", cp.consistent},
          {"mismatches", cp.mismatches}};
}

json to_json(const Check& c) {
  return {{"pass", c.pass ? json(*c.pass) : json(nullptr)}, {"detail", c.detail}};
}

json to_json(const WeightReport& r) {
  json j;
  j["status"] = r.status;
  j["degree"] = to_json(r.degree);
  j["charpoly"] = to_json(r.charpoly);
  json roots = json::array();
  json weights = json::object();
  if (r.spectrum) {
    for (const auto& root : r.spectrum->roots)
      roots.push_back({{"re", root.value.re.convert_to<double>()},
                       {"im", root.value.im.convert_to<double>()},
                       {"abs", root.magnitude.convert_to<double>()},
                       {"radius", root.radius.convert_to<double>()},
                       {"v", root.v.convert_to<double>()}});
    for (const auto& [v, c] : r.spectrum->weights) weights[std::to_string(v)] = c;
  }
  j["roots"] = std::move(roots);
  j["weights"] = std::move(weights);
  j["expected"] = to_json(r.expected);
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = to_json(c);
  j["checks"] = std::move(checks);
  j["e"] = to_json(r.e);
  j["E"] = to_json(r.E);
  j["nonresonant"] = r.nonresonant;
  j["generates_lattice"] = r.generates_lattice;
  j["nondegeneracy"] = to_json(r.nondegeneracy);
  json S = json::array();
  for (const auto& s : r.sums.S) S.push_back(value_json(s));
  j["power_sums"] = std::move(S);
  return j;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a nonempty array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw DomainError("matrix rows must be arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DomainError("matrix entries must be integers");
      r.push_back(v.get<long>());
    }
    rows.push_back(std::move(r));
  }
  return int_matrix(rows);
}

CycloNumber cyclo_from_json(const json& j) {
  const auto L = j.at("conductor").get<std::uint64_t>();
  CycloNumber out;
  std::int64_t k = 0;
  for (const auto& c : j.at("coeffs")) {
    const Rational r = c.is_string() ? Rational(c.get<std::string>()) : Rational(c.get<std::int64_t>());
    out += CycloNumber::root_of_unity(L, k++) * r;
  }
  return out;
}

}  // namespace gkz::io
