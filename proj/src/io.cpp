#include "suptrop/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace suptrop {

namespace {

std::string location(std::size_t line, std::size_t column) {
  if (line == 0) return "";
  return " at line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string at(const std::string& where) { return where.empty() ? "" : " at " + where; }

// 2^53: beyond this an integral double may not print back to itself as int64.
constexpr double kExactIntegerLimit = 9007199254740992.0;

bool is_exact_integer(double v) { return std::floor(v) == v && std::fabs(v) < kExactIntegerLimit; }

ExtReal slot_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) {
    if (value.get<std::string>() == "eps") return eps;
    throw BadScalar("unknown scalar token \"" + value.get<std::string>() + "\"" + at(where));
  }
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw BadScalar("scalar must be finite" + at(where));
    return ExtReal(v);
  }
  throw BadScalar("expected a number or \"eps\"" + at(where));
}

void require_keys(const Json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) known |= item.key() == key;
    if (!known) throw ParseError("unexpected key \"" + item.key() + "\"" + at(where));
  }
}

std::size_t dimension_from_json(const Json& object, const std::string& where) {
  if (!object.contains("n")) throw ParseError("missing \"n\"" + at(where));
  const Json& n = object["n"];
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer" + at(where));
  return static_cast<std::size_t>(n.get<long long>());
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError, message + location(line, column)), line_(line), column_(column) {}

SuperScalar scalar_from_json(const Json& value, const std::string& where) {
  if (value.is_array()) {
    if (value.size() != 2) throw BadScalar("a pair scalar needs exactly two slots" + at(where));
    return SuperScalar(slot_from_json(value[0], where), slot_from_json(value[1], where));
  }
  return SuperScalar(slot_from_json(value, where));
}

Json ext_real_to_json(ExtReal a) {
  if (a.is_eps()) return "eps";
  if (is_exact_integer(a.value())) return static_cast<long long>(a.value());
  return a.value();
}

Json scalar_to_json(const SuperScalar& x) {
  if (x.gh.is_eps()) return ext_real_to_json(x.re);
  return Json::array({ext_real_to_json(x.re), ext_real_to_json(x.gh)});
}

SuperMatrix matrix_from_json(const Json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError("matrix must be an object" + at(where));
  require_keys(value, {"n", "entries"}, where);
  const std::size_t n = dimension_from_json(value, where);
  if (!value.contains("entries") || !value["entries"].is_array())
    throw ParseError("missing \"entries\" array" + at(where));
  const Json& rows = value["entries"];
  if (rows.size() != n)
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()) + at(where));

  SuperMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "/entries/" + std::to_string(i);
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row must be an array of " + std::to_string(n) + " scalars" + at(row_where));
    for (std::size_t j = 0; j < n; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          scalar_from_json(row[j], row_where + "/" + std::to_string(j));
  }
  return a;
}

Json matrix_to_json(const SuperMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["n"] = a.rows();
  out["entries"] = std::move(rows);
  return out;
}

SuperSystem system_from_json(const Json& value) {
  if (!value.is_object()) throw ParseError("system must be an object");
  require_keys(value, {"n", "generators"}, "");
  const std::size_t n = dimension_from_json(value, "");
  if (!value.contains("generators") || !value["generators"].is_array())
    throw ParseError("missing \"generators\" array");
  const Json& list = value["generators"];
  if (list.empty()) throw ParseError("\"generators\" must be nonempty");
  std::vector<SuperMatrix> generators;
  for (std::size_t t = 0; t < list.size(); ++t) {
    const std::string where = "/generators/" + std::to_string(t);
    if (list[t].is_object() && list[t].contains("n")) {
      const std::size_t gn = dimension_from_json(list[t], where);
      if (gn != n) throw DimensionMismatch(n, gn);
    }
    generators.push_back(matrix_from_json(list[t], where));
  }
  return SuperSystem(std::move(generators));
}

Json system_to_json(const SuperSystem& system) {
  Json list = Json::array();
  for (const auto& g : system.generators()) list.push_back(matrix_to_json(g));
  Json out = Json::object();
  out["n"] = system.dimension();
  out["generators"] = std::move(list);
  return out;
}

ParsedInput parse_input_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
  if (doc.is_object() && doc.contains("generators")) return system_from_json(doc);
  if (doc.is_object() && doc.contains("entries")) return matrix_from_json(doc);
  throw ParseError("document is neither a matrix nor a generator system");
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str());
}

SuperSystem as_system(const ParsedInput& input) {
  if (const auto* m = std::get_if<SuperMatrix>(&input)) return SuperSystem({*m});
  return std::get<SuperSystem>(input);
}

std::string format_ext_real(ExtReal a) {
  if (a.is_eps()) return "eps";
  if (is_exact_integer(a.value())) return std::to_string(static_cast<long long>(a.value()));
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, a.value());
  return std::string(buffer, end);
}

std::string format_scalar(const SuperScalar& x) {
  if (x.gh.is_eps()) return format_ext_real(x.re);
  return "[" + format_ext_real(x.re) + "," + format_ext_real(x.gh) + "]";
}

std::string format_matrix(const SuperMatrix& a) {
  std::string out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace suptrop
