#pragma once

// Text <-> value conversions for command-line payloads.
//
// Complex numbers are written either as shorthand ("1.5-2i", "i", "-i", "3")
// or as a JSON pair [re, im]. Every formatter emits 17 significant digits so
// that parsing its output recovers the value bit for bit.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "junction/boundary.hpp"
#include "junction/matrix2.hpp"

namespace junction::cli {

/// Malformed payload text; maps to the input-validation exit code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite decimal number, parsed with std::from_chars.
double parse_double(std::string_view text);

/// A number, or a multiple/fraction of pi: "pi", "-pi/2", "3pi/2", "0.25*pi".
double parse_angle(std::string_view text);

Complex parse_complex(std::string_view text);

/// "+inf"/"inf" or a finite number.
ExtendedReal parse_extended(std::string_view text);

/// A comma-separated shorthand list or a JSON array of [re, im] pairs.
/// Throws ParseError unless exactly `count` entries are present.
std::vector<Complex> parse_complex_list(std::string_view text, std::size_t count);

std::vector<double> parse_real_list(std::string_view text, std::size_t count);

/// JSON [[z11, z12], [z21, z22]] where each z is [re, im] or a real number.
C2Matrix parse_matrix(std::string_view text);

std::string format_double(double value);
std::string format_complex(Complex z);
std::string format_extended(const ExtendedReal& x);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const C2Vector& v);
nlohmann::json to_json(const C2Matrix& m);
nlohmann::json to_json(const ExtendedReal& x);
nlohmann::json to_json(const AlphaBC& a);
nlohmann::json to_json(const QuaternionForm& q);

}  // namespace junction::cli
