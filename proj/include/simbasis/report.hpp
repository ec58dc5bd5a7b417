#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simbasis/basis.hpp"
#include "simbasis/certificates.hpp"
#include "simbasis/chamber_complex.hpp"
#include "simbasis/relations.hpp"

namespace simbasis {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";

// {"dim": n, "points": [["1/2", "3"], [0, 1], ...]}; coordinates are rational
// strings or JSON integers. Throws InputError on anything else.
Configuration parse_config(const json& doc);
Configuration parse_config_text(const std::string& text);

// Lowercase hex SHA-256 of the raw bytes.
std::string sha256_hex(std::string_view bytes);

// "1,2,5" -> {1, 2, 5}. Throws InputError on a malformed list.
std::vector<Label> parse_label_list(const std::string& csv);
RationalVector parse_rational_list(const std::string& csv);

json to_json(const Rational& q);
json to_json(const Point& p);
json to_json(const Simplex& s);

json order_json(const ShellingOrder& order);
json chambers_json(const ChamberComplex& complex);
json matrix_json(const ChamberComplex& complex);
json basis_json(const BasisPair& pair, const ChamberComplex& complex);
json certificate_json(const TriangularCertificate& cert, const BasisPair& pair);
json rank_json(const RankReport& report);
json relation_json(const ConeRelation& rel);
json trace_json(const ExpressionTrace& trace, const TraceCheck& check);

}  // namespace simbasis
