#pragma once

// Text forms.
//   scalar : "eps" | number (n + iε) | [re, gh], each slot a number or "eps"
//   matrix : {"n": int, "entries": [[scalar, ...], ...]}, row-major
//   system : {"n": int, "generators": [matrix, ...]}

#include <cstddef>
#include <string>
#include <variant>

#include "json.hpp"

#include "suptrop/error.hpp"
#include "suptrop/lie.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/scalar.hpp"

namespace suptrop {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  /// line/column are 1-based; 0 when the error is structural rather than lexical.
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

using SuperSystem = LieSystem<SuperScalar>;
using ParsedInput = std::variant<SuperMatrix, SuperSystem>;

SuperScalar scalar_from_json(const Json& value, const std::string& where = "");
Json scalar_to_json(const SuperScalar& x);
Json ext_real_to_json(ExtReal a);

SuperMatrix matrix_from_json(const Json& value, const std::string& where = "");
Json matrix_to_json(const SuperMatrix& a);

SuperSystem system_from_json(const Json& value);
Json system_to_json(const SuperSystem& system);

/// Accepts either a bare matrix or a system document.
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

/// A bare matrix becomes a one-generator system.
SuperSystem as_system(const ParsedInput& input);

/// "eps", "4", "-1.5", "[3,3]", "[eps,2]".
std::string format_ext_real(ExtReal a);
std::string format_scalar(const SuperScalar& x);
/// One line per row, entries separated by single spaces.
std::string format_matrix(const SuperMatrix& a);

}  // namespace suptrop
