#include "pisot/field_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace pisot {

namespace {

using nlohmann::json;

std::string format_number(double x, int digits) {
  if (x == 0.0) return "0";  // also folds -0
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

json complex_to_json(Complex z, int digits) {
  return json::array({format_number(z.real(), digits), format_number(z.imag(), digits)});
}

double number_from_json(const json& j, const std::string& where) {
  double value = 0.0;
  if (j.is_number()) {
    value = j.get<double>();
  } else if (j.is_string()) {
    const std::string text = j.get<std::string>();
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw ValidationError("numbers: " + where + " is not a decimal number: \"" + text + "\"");
  } else {
    throw ValidationError("numbers: " + where + " must be a number or a decimal string");
  }
  if (!std::isfinite(value)) throw ValidationError("numbers: " + where + " is not finite");
  return value;
}

Complex complex_from_json(const json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2) return {number_from_json(j[0], where), number_from_json(j[1], where)};
  if (j.is_number() || j.is_string()) return {number_from_json(j, where), 0.0};
  throw ValidationError("numbers: " + where + " must be [re, im]");
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("field file: missing key \"") + key + "\"");
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const json& j = require(doc, key);
  if (!j.is_number_integer()) throw ValidationError(std::string("field file: \"") + key + "\" must be an integer");
  return j.get<int>();
}

}  // namespace

std::string field_to_json_text(const FieldData& field) {
  const int n = field.degree();
  const int digits = field.precision_digits();
  json doc = json::object();
  doc["name"] = field.name();
  doc["r"] = field.signature().r;
  doc["s"] = field.signature().s;
  doc["precision_digits"] = digits;
  json basis = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) basis.push_back(complex_to_json(field.basis_embeddings()(i, j), digits));
  }
  doc["integral_basis"] = std::move(basis);
  json units = json::array();
  for (const auto& u : field.unit_generators()) {
    json tuple = json::array();
    for (Complex z : u) tuple.push_back(complex_to_json(z, digits));
    units.push_back(std::move(tuple));
  }
  doc["unit_generators"] = std::move(units);
  doc["torsion_order"] = field.torsion_order();
  json perms = json::array();
  for (const auto& p : field.galois_perms()) {
    json row = json::array();
    for (int v : p) row.push_back(v + 1);
    perms.push_back(std::move(row));
  }
  doc["galois_perms"] = std::move(perms);
  if (field.regulator_hint()) doc["regulator_hint"] = format_number(*field.regulator_hint(), digits);
  return doc.dump(2) + "\n";
}

FieldData field_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("parse error: field file must be a JSON object");

  FieldData::Spec spec;
  const json& name = require(doc, "name");
  if (!name.is_string()) throw ValidationError("field file: \"name\" must be a string");
  spec.name = name.get<std::string>();
  spec.signature = Signature::make(require_int(doc, "r"), require_int(doc, "s"));
  const int n = spec.signature.degree();
  if (doc.contains("precision_digits")) spec.precision_digits = require_int(doc, "precision_digits");

  const json& basis = require(doc, "integral_basis");
  if (!basis.is_array()) throw ValidationError("integral basis: must be an array");
  spec.basis_embeddings.resize(n, n);
  const auto un = static_cast<std::size_t>(n);
  const bool nested = basis.size() == un && basis[0].is_array() && basis[0].size() == un;
  if (!nested && basis.size() != un * un) {
    throw ValidationError("integral basis: expected " + std::to_string(n * n) + " entries (n x n)");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const json& e = nested ? basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                             : basis[static_cast<std::size_t>(i * n + j)];
      spec.basis_embeddings(i, j) =
          complex_from_json(e, "integral_basis[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
    }
  }

  const json& units = require(doc, "unit_generators");
  if (!units.is_array()) throw ValidationError("unit generators: must be an array");
  for (std::size_t g = 0; g < units.size(); ++g) {
    if (!units[g].is_array() || units[g].size() != un) {
      throw ValidationError("unit generators: generator " + std::to_string(g + 1) + " must list n embeddings");
    }
    EmbeddingTuple u;
    for (std::size_t i = 0; i < un; ++i) {
      u.push_back(complex_from_json(units[g][i], "unit_generators[" + std::to_string(g + 1) + "]"));
    }
    spec.unit_generators.push_back(std::move(u));
  }

  spec.torsion_order = require_int(doc, "torsion_order");

  const json& perms = require(doc, "galois_perms");
  if (!perms.is_array()) throw ValidationError("galois permutations: must be an array");
  for (const auto& p : perms) {
    if (!p.is_array()) throw ValidationError("galois permutations: each permutation must be an array");
    std::vector<int> row;
    for (const auto& v : p) {
      if (!v.is_number_integer()) throw ValidationError("galois permutations: entries must be integers");
      const int k = v.get<int>();
      if (k < 1 || k > n) throw ValidationError("galois permutations: entries must lie in 1..n");
      row.push_back(k - 1);
    }
    spec.galois_perms.push_back(std::move(row));
  }

  if (doc.contains("regulator_hint") && !doc["regulator_hint"].is_null()) {
    spec.regulator_hint = number_from_json(doc["regulator_hint"], "regulator_hint");
  }
  return FieldData::create(std::move(spec));
}

FieldData load_field_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("field file: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return field_from_json_text(buf.str());
}

void save_field_file(const FieldData& field, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("field file: cannot write " + path.string());
  out << field_to_json_text(field);
  if (!out) throw std::runtime_error("field file: write failed for " + path.string());
}

}  // namespace pisot
