#include "spectau/io.hpp"

#include <fstream>
#include <sstream>

namespace spectau {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

Rational parse_entry(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_number_float()) fail(where, "floats rejected; use p/q");
  if (!v.is_string()) fail(where, "expected a rational string \"p/q\"");
  const auto& s = v.get_ref<const std::string&>();
  if (s.find_first_of(".eE") != std::string::npos) fail(where, "floats rejected; use p/q");
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

int parse_int(const Json& doc, const char* key) {
  if (!doc.contains(key)) fail(key, "missing");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<int>();
}

// + 0.0 folds -0 into 0
Json complex_json(std::complex<double> z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json sheet_tuple(const IndexTuple& a) {
  Json out = Json::array();
  for (int x : a) out.push_back(x + 1);
  return out;
}

}  // namespace

MatrixPolynomial parse_matrix_polynomial(const Json& doc) {
  if (!doc.is_object()) fail("input", "expected a JSON object");
  int n = parse_int(doc, "n");
  int m = parse_int(doc, "m");
  if (n < 1 || n > 64) fail("n", "out of range");
  if (m < 0 || m > 256) fail("m", "out of range");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) fail("coefficients", "expected an array");
  const Json& cs = doc["coefficients"];
  if (cs.size() != static_cast<std::size_t>(m) + 1)
    fail("coefficients", "expected m+1 = " + std::to_string(m + 1) + " matrices, got " + std::to_string(cs.size()));
  std::vector<RatMatrix> B;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::string where = "coefficients[" + std::to_string(k) + "]";
    if (!cs[k].is_array() || cs[k].size() != static_cast<std::size_t>(n))
      fail(where, "expected " + std::to_string(n) + " rows");
    RatMatrix M(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      const Json& row = cs[k][static_cast<std::size_t>(i)];
      std::string rw = where + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) fail(rw, "expected " + std::to_string(n) + " entries");
      for (int j = 0; j < n; ++j) M(i, j) = parse_entry(row[static_cast<std::size_t>(j)], rw + "[" + std::to_string(j) + "]");
    }
    B.push_back(std::move(M));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !is_zero(B[0](i, j))) fail("coefficients[0]", "leading coefficient must be diagonal");
  try {
    return MatrixPolynomial(n, m, std::move(B));
  } catch (const InputError& e) {
    fail("input", e.what());
  }
}

MatrixPolynomial parse_matrix_polynomial_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_matrix_polynomial(doc);
}

MatrixPolynomial load_matrix_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix_polynomial_text(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json rat_matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json matrix_polynomial_json(const MatrixPolynomial& W) {
  Json cs = Json::array();
  for (const auto& B : W.coefficients()) cs.push_back(rat_matrix_json(B));
  return {{"n", W.n()}, {"m", W.m()}, {"coefficients", cs}};
}

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json curve_info_json(const MatrixPolynomial& W, const SpectralCurveData& curve) {
  Json a = Json::array();
  for (const auto& p : curve.a) a.push_back(poly_json(p));
  Json diags = Json::array();
  for (const auto& d : curve.diagnostics) diags.push_back({{"name", d.name}, {"level", level_name(d.level)}, {"detail", d.detail}});
  Json eig = Json::array();
  for (int i = 0; i < W.n(); ++i) eig.push_back(to_string(W.leading_eigenvalue(i)));
  return {{"n", curve.n},
          {"m", curve.m},
          {"genus", curve.genus},
          {"leading_eigenvalues", eig},
          {"characteristic_coefficients", a},
          {"discriminant", poly_json(discriminant_w(curve))},
          {"diagnostics", diags},
          {"notes", Json::array({"irreducibility of R(z,w) is assumed, not checked"})}};
}

Json correlator_table_json(const CorrelatorTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries)
    entries.push_back({{"a", sheet_tuple(key.a)}, {"k", key.k}, {"value", to_string(value)}});
  return {{"N", table.N}, {"trusted_order", table.trusted_order}, {"entries", entries}};
}

Json free_energy_json(const FreeEnergy& f) {
  Json terms = Json::array();
  for (const auto& [labels, c] : f) {
    Json ls = Json::array();
    for (const auto& [a, k] : labels) ls.push_back(Json::array({a + 1, k}));
    terms.push_back({{"t", ls}, {"coefficient", to_string(c)}});
  }
  return terms;
}

Json divisor_point_json(const DivisorPoint& p) {
  return {{"z", complex_json(p.z)}, {"w", complex_json(p.w)}, {"residual_R", p.residual_R}, {"residual_eig", p.residual_eig}};
}

Json divisor_report_json(const DivisorReport& r) {
  Json pts = Json::array(), rej = Json::array();
  for (const auto& p : r.points) pts.push_back(divisor_point_json(p));
  for (const auto& p : r.rejected) rej.push_back(divisor_point_json(p));
  return {{"points", pts}, {"rejected", rej}, {"warnings", r.warnings}, {"expected_count", r.expected_count}, {"tolerance", r.tolerance}};
}

Json jet_json(const JetPoint& jet) {
  Json dy = Json::array(), d2y = Json::array();
  for (const auto& m : jet.dy) dy.push_back(rat_matrix_json(m));
  for (const auto& row : jet.d2y) {
    Json r = Json::array();
    for (const auto& m : row) r.push_back(rat_matrix_json(m));
    d2y.push_back(r);
  }
  Json out = {{"n", jet.n}, {"depth", jet.depth}, {"y", rat_matrix_json(jet.y)}};
  if (jet.depth >= 1) out["dy"] = dy;
  if (jet.depth >= 2) out["d2y"] = d2y;
  return out;
}

Json theta_report_json(const ThetaReport& r) {
  Json ids = Json::array();
  for (const auto& c : r.identities)
    ids.push_back({{"N", c.k.size()},
                   {"k", c.k},
                   {"F", to_string(c.f)},
                   {"T", complex_json(c.t)},
                   {"abs_err", c.abs_err},
                   {"rel_err", c.rel_err},
                   {"pass", c.pass},
                   {"shift_used", r.shift_used}});
  Json shifts = Json::array();
  for (std::size_t i = 0; i < r.shifts.size(); ++i)
    shifts.push_back({{"index", i}, {"m", r.shifts[i].m}, {"n", r.shifts[i].n}, {"anchor_err", r.shifts[i].anchor_err}, {"worst_err", r.shifts[i].worst_err}});
  Json u0 = Json::array();
  for (const auto& x : r.u0) u0.push_back(complex_json(x));
  const ShiftRow& used = r.shifts.at(r.shift_used);
  return {{"genus", r.g},
          {"tol", r.tol},
          {"identities", ids},
          {"shift_used", {{"index", r.shift_used}, {"m", used.m}, {"n", used.n}}},
          {"shift_scan", shifts},
          {"u0", u0},
          {"theta_u0", complex_json(r.theta_u0)},
          {"checks",
           {{"B_symmetry", r.symmetry_error},
            {"quadrature", r.quadrature_error},
            {"quasi_periodicity", r.quasi_periodicity_error},
            {"integer_periodicity", r.integer_period_error},
            {"evenness", r.evenness_error},
            {"V_convention", r.v_convention_error},
            {"path_discrepancy", r.path_discrepancy},
            {"B_negative_definite", r.b_negative_definite}}},
          {"pass", r.pass},
          {"failures", r.failures}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spectau
