#pragma once

#include <json.hpp>
#include <string>

#include "spectau/correlators.hpp"
#include "spectau/curve.hpp"
#include "spectau/divisor.hpp"
#include "spectau/jets.hpp"
#include "spectau/theta.hpp"

namespace spectau {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

// {"n": int, "m": int, "coefficients": [B0, B1, ..., Bm]}, Bk the coefficient
// of z^(m-k) as an n x n array of "p/q" strings (integers also accepted).
// Errors are InputError with the offending field in the message.
MatrixPolynomial parse_matrix_polynomial(const Json& doc);
MatrixPolynomial parse_matrix_polynomial_text(const std::string& text);
MatrixPolynomial load_matrix_polynomial(const std::string& path);

Json matrix_polynomial_json(const MatrixPolynomial& W);

// Polynomials are written as ascending coefficient lists.
Json poly_json(const Poly& p);
Json rat_matrix_json(const RatMatrix& m);

Json curve_info_json(const MatrixPolynomial& W, const SpectralCurveData& curve);

// Sheet labels are 1-based, k is 0-based.
Json correlator_table_json(const CorrelatorTable& table);
Json free_energy_json(const FreeEnergy& f);

Json divisor_point_json(const DivisorPoint& p);
Json divisor_report_json(const DivisorReport& r);

Json jet_json(const JetPoint& jet);

Json theta_report_json(const ThetaReport& r);

// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace spectau
