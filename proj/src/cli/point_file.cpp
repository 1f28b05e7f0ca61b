#include "fatpoints/cli.hpp"
#include "fatpoints/errors.hpp"

#include <fstream>
#include <sstream>

namespace fatpoints::cli {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

json parse_document(const std::string& text, const std::string& source) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw InputError(source + ": empty document");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ":" + std::to_string(line_of(text, e.byte)) + ": parse error: " +
                     e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_entry(const json& v, const std::string& field) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const InvalidArgument& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
  throw InputError("field '" + field + "': expected a rational string such as \"3/4\"");
}

std::size_t parse_dimension(const json& doc, const std::string& source) {
  if (!doc.is_object()) throw InputError(source + ": top level must be an object");
  if (!doc.contains("N")) throw InputError(source + ": missing field 'N'");
  const json& N = doc["N"];
  if (!N.is_number_integer() || N.get<long long>() < 1) {
    throw InputError(source + ": field 'N' must be an integer >= 1");
  }
  return N.get<std::size_t>();
}

std::vector<std::vector<Rational>> parse_rows(const json& doc, const char* key,
                                              const std::string& source) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(source + ": field '" + key + "' must be an array");
  }
  std::vector<std::vector<Rational>> rows;
  const json& arr = doc[key];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) throw InputError(source + ": field '" + field + "' must be an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < arr[i].size(); ++j) {
      row.push_back(parse_entry(arr[i][j], field + "[" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PointConfig parse_points_text(const std::string& text, const std::string& source) {
  const json doc = parse_document(text, source);
  const std::size_t N = parse_dimension(doc, source);
  const auto raw = parse_rows(doc, "points", source);
  if (raw.empty()) throw InputError(source + ": field 'points' is empty");

  const auto violations = validate_raw_points(N, raw);
  if (!violations.empty()) {
    std::vector<std::string> details;
    for (const auto& v : violations) details.push_back(v.message);
    throw InputError(source + ": invalid point configuration", std::move(details));
  }
  PointConfig cfg{N, {}, source};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError(source + ": field 'label' must be a string");
    cfg.label = doc["label"].get<std::string>();
  }
  for (const auto& r : raw) cfg.points.emplace_back(r);
  return cfg;
}

PointConfig parse_points_file(const std::string& path) {
  return parse_points_text(read_file(path), path);
}

std::vector<Hyperplane> parse_hyperplanes_text(const std::string& text,
                                               const std::string& source) {
  const json doc = parse_document(text, source);
  const std::size_t N = parse_dimension(doc, source);
  const auto raw = parse_rows(doc, "hyperplanes", source);
  std::vector<Hyperplane> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != N + 1) {
      throw InputError(source + ": hyperplane " + std::to_string(i) + " needs " +
                       std::to_string(N + 1) + " coefficients");
    }
    try {
      out.emplace_back(raw[i]);
    } catch (const InvalidPoint&) {
      throw InputError(source + ": hyperplane " + std::to_string(i) + " has all coefficients zero");
    }
  }
  return out;
}

MonomialIdeal parse_ideal_text(const std::string& text, const std::string& source) {
  const json doc = parse_document(text, source);
  if (!doc.is_object()) throw InputError(source + ": top level must be an object");
  if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty()) {
    throw InputError(source + ": field 'variables' must be a nonempty array of strings");
  }
  std::vector<std::string> vars;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw InputError(source + ": variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InputError(source + ": field 'generators' must be an array");
  }
  const MonomialIdeal shell = MonomialIdeal::zero(vars);
  std::vector<Monomial> gens;
  const json& arr = doc["generators"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    if (arr[i].is_string()) {
      try {
        gens.push_back(shell.parse_monomial(arr[i].get<std::string>()));
      } catch (const InvalidArgument& e) {
        throw InputError(source + ": field '" + field + "': " + e.what());
      }
      continue;
    }
    if (!arr[i].is_array() || arr[i].size() != vars.size()) {
      throw InputError(source + ": field '" + field + "' must be an exponent vector of length " +
                       std::to_string(vars.size()) + " or a monomial string");
    }
    Monomial w;
    for (const auto& e : arr[i]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw InputError(source + ": field '" + field + "' has a negative or non-integer exponent");
      }
      w.exponents.push_back(e.get<unsigned>());
    }
    gens.push_back(std::move(w));
  }
  return minimalize(std::move(vars), std::move(gens));
}

nlohmann::ordered_json point_config_json(const PointConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["N"] = cfg.N;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : cfg.points) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : p.coords()) row.push_back(c.get_str());
    pts.push_back(std::move(row));
  }
  doc["points"] = std::move(pts);
  doc["label"] = cfg.label;
  return doc;
}

}  // namespace fatpoints::cli
