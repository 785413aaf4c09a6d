#include "f2orbit/export.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "f2orbit/errors.hpp"

namespace f2orbit {

namespace {

using Json = nlohmann::ordered_json;

Json count_json(const BigCount& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return Json(c.convert_to<std::uint64_t>());
  return Json(to_decimal(c));
}

BigCount count_from_json(const Json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return BigCount(j.get<std::uint64_t>());
  if (j.is_string()) return BigCount(j.get<std::string>());
  throw ParseError("census JSON: count must be an integer or decimal string");
}

std::string height_text(const OrbitRecord& r) { return r.height ? r.height->to_string() : std::string(); }

}  // namespace

std::string census_to_json(const OrbitCensus& census) {
  Json j;
  j["spec"] = census.descriptor;
  j["n"] = census.n;
  j["kind"] = census.kind;
  j["state_dim"] = census.state_dim;
  j["total_states"] = count_json(census.total_states);
  Json orbits = Json::array();
  for (const auto& r : census.records) {
    Json o;
    o["representative_hex"] = r.representative.to_hex();
    o["cardinality"] = count_json(r.cardinality);
    o["height_bits"] = height_text(r);
    if (!r.type_label.empty()) o["type_label"] = r.type_label;
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  return j.dump(2) + "\n";
}

OrbitCensus census_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
    OrbitCensus c;
    c.descriptor = j.at("spec").get<std::string>();
    c.n = j.at("n").get<int>();
    c.kind = j.at("kind").get<std::string>();
    c.state_dim = j.at("state_dim").get<std::size_t>();
    c.total_states = count_from_json(j.at("total_states"));
    for (const auto& o : j.at("orbits")) {
      OrbitRecord r;
      r.representative = F2Vector::from_hex(c.state_dim, o.at("representative_hex").get<std::string>());
      r.cardinality = count_from_json(o.at("cardinality"));
      const auto h = o.at("height_bits").get<std::string>();
      if (!h.empty()) r.height = Height::parse(h);
      if (o.contains("type_label")) r.type_label = o.at("type_label").get<std::string>();
      c.records.push_back(std::move(r));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("census JSON: ") + e.what());
  }
}

std::string census_to_csv(const OrbitCensus& census) {
  std::ostringstream out;
  out << "representative_hex,cardinality,height_bits,type_label\n";
  for (const auto& r : census.records) {
    out << r.representative.to_hex() << ',' << r.cardinality << ',' << height_text(r) << ',' << r.type_label << '\n';
  }
  return out.str();
}

std::string census_to_table(const OrbitCensus& census) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"representative", "cardinality", "height", "type"});
  for (const auto& r : census.records) {
    rows.push_back({r.representative.to_hex(), to_decimal(r.cardinality), height_text(r), r.type_label});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "# " << census.descriptor << ": " << census.orbit_count() << " orbits, " << census.total_states
      << " states\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      std::string cell = row[c];
      if (c + 1 < 4) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  Json j;
  j["n"] = report.n;
  j["kind"] = std::string(to_string(report.kind));
  j["mode"] = report.mode;
  j["pass"] = report.passed();
  j["orbit_count"] = report.census.orbit_count();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"observed", c.observed}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace f2orbit
