#include "simbasis/report.hpp"

#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "simbasis/errors.hpp"

namespace simbasis {

namespace {

Rational coordinate(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    // Route through the string parser so 64-bit values stay exact.
    return parse_rational(v.dump());
  }
  throw InputError("coordinates must be rational strings or integers, got " + v.dump());
}

}  // namespace

Configuration parse_config(const json& doc) {
  if (!doc.is_object()) throw InputError("configuration must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("missing integer field \"dim\"");
  if (!doc.contains("points") || !doc["points"].is_array()) throw InputError("missing array field \"points\"");
  const auto dim = doc["dim"].get<long long>();
  if (dim < 1) throw InputError("dim must be positive");
  std::vector<Point> points;
  for (const auto& row : doc["points"]) {
    if (!row.is_array()) throw InputError("each point must be an array of coordinates");
    if (row.size() != static_cast<std::size_t>(dim)) {
      throw InputError("point " + std::to_string(points.size() + 1) + " has " + std::to_string(row.size()) +
                       " coordinates, expected " + std::to_string(dim));
    }
    RationalVector coords;
    for (const auto& v : row) coords.push_back(coordinate(v));
    points.emplace_back(std::move(coords));
  }
  return Configuration(static_cast<std::size_t>(dim), std::move(points));
}

Configuration parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr)) {
    throw InternalError("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::vector<Label> parse_label_list(const std::string& csv) {
  std::vector<Label> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw InputError("bad label \"" + item + "\" in \"" + csv + "\"");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw InputError("empty label list");
  return out;
}

RationalVector parse_rational_list(const std::string& csv) {
  RationalVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty rational list");
  return out;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(to_json(c));
  return out;
}

json to_json(const Simplex& s) { return s.vertices; }

json order_json(const ShellingOrder& order) {
  json f = json::array(), t = json::array();
  for (const auto& v : order.functional) f.push_back(to_json(v));
  for (const auto& v : order.thresholds) t.push_back(to_json(v));
  return {{"permutation", order.permutation}, {"functional", f}, {"thresholds", t}};
}

json chambers_json(const ChamberComplex& complex) {
  const auto& en = complex.enumeration;
  json list = json::array();
  for (const auto& ch : complex.chambers()) {
    list.push_back({{"id", ch.id},
                    {"representative", to_json(ch.representative)},
                    {"cells", ch.cells.size()},
                    {"convex", is_convex(ch)}});
  }
  return {{"count", en.chambers.size()},
          {"chambers", list},
          {"cell_count", en.cell_count},
          {"merge_count", en.merge_count},
          {"volume_check", en.cells_volume == en.hull_volume}};
}

json matrix_json(const ChamberComplex& complex) {
  json simplices = json::array(), chambers = json::array(), rows = json::array();
  for (const auto& s : complex.simplices.simplices) simplices.push_back(to_json(s));
  for (const auto& ch : complex.chambers()) chambers.push_back(to_json(ch.representative));
  for (std::size_t r = 0; r < complex.matrix.rows(); ++r) rows.push_back(complex.matrix.row_string(r));
  return {{"simplices", simplices},
          {"chambers", chambers},
          {"rows", rows},
          {"shape", {complex.matrix.rows(), complex.matrix.cols()}}};
}

json basis_json(const BasisPair& pair, const ChamberComplex& complex) {
  json b = json::array(), bp = json::array();
  std::map<std::size_t, std::size_t> per_step;
  for (const auto& e : pair.elements) {
    json item = {{"simplex", to_json(e.simplex)},
                 {"depth_path", e.depth_path},
                 {"apex", e.apex},
                 {"chamber", e.chamber},
                 {"candidates", e.candidates}};
    if (e.edge_target) item["edge_target"] = *e.edge_target;
    b.push_back(std::move(item));
    bp.push_back({{"chamber", e.chamber}, {"representative", to_json(complex.chambers()[e.chamber].representative)}});
    ++per_step[e.depth_path.front()];
  }
  json steps = json::array();
  for (const auto& [k, count] : per_step) steps.push_back({{"step", k}, {"apex", pair.construction.order.at(k)}, {"size", count}});
  return {{"B", b}, {"B_prime", bp}, {"size", pair.size()}, {"per_step", steps}};
}

json certificate_json(const TriangularCertificate& cert, const BasisPair& pair) {
  json order = json::array();
  for (auto i : cert.order) {
    order.push_back({{"simplex", to_json(pair.elements[i].simplex)}, {"chamber", pair.elements[i].chamber}});
  }
  json out = {{"ok", cert.ok()}, {"order", order}, {"block_starts", cert.block_starts}, {"size", cert.order.size()}};
  if (cert.violation) {
    const auto& v = *cert.violation;
    out["violation"] = {{"row", v.row},
                        {"col", v.col},
                        {"level", v.level},
                        {"block", std::string(1, v.block)},
                        {"diagonal", v.diagonal}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

json rank_json(const RankReport& r) {
  return {{"rank_A", r.rank_A},
          {"basis_size", r.basis_size},
          {"chamber_basis_size", r.chamber_basis_size},
          {"submatrix_rank", r.submatrix_rank},
          {"submatrix_nonsingular", r.submatrix_nonsingular},
          {"basis_rows_rank", r.basis_rows_rank},
          {"chamber_columns_rank", r.chamber_columns_rank},
          {"spans", r.spans},
          {"ok", r.ok()}};
}

json relation_json(const ConeRelation& rel) {
  json plus = json::array(), minus = json::array(), flags = json::array();
  for (const auto& s : rel.plus_terms) plus.push_back(to_json(s));
  for (const auto& s : rel.minus_terms) minus.push_back(to_json(s));
  if (rel.degenerate_reduced) flags.push_back("degenerate-reduced");
  return {{"target", to_json(rel.target)},
          {"point", rel.apex},
          {"plus", plus},
          {"minus", minus},
          {"flags", flags},
          {"verified", true}};
}

json trace_json(const ExpressionTrace& trace, const TraceCheck& check) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json members = json::array();
    for (const auto& m : s.f.members) members.push_back(to_json(m));
    steps.push_back({{"simplex", to_json(s.simplex)}, {"support", s.f.support}, {"members", members}});
  }
  json out = {{"target", to_json(trace.target)}, {"steps", steps}, {"length", trace.steps.size()}, {"verified", check.ok}};
  if (!check.ok) {
    out["failure"] = {{"step", check.failing_step ? json(*check.failing_step) : json(nullptr)}, {"reason", check.reason}};
  }
  return out;
}

}  // namespace simbasis
