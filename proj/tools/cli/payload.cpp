#include "cli/payload.hpp"

#include <charconv>
#include <cmath>

namespace junction::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON " + quoted(text) + ": " + e.what());
  }
}

double json_number(const nlohmann::json& j) {
  if (!j.is_number()) throw ParseError("expected a number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError("number out of range: " + j.dump());
  return v;
}

Complex json_complex(const nlohmann::json& j) {
  if (j.is_number()) return {json_number(j), 0.0};
  if (j.is_array() && j.size() == 2) return {json_number(j[0]), json_number(j[1])};
  throw ParseError("expected [re, im], got " + j.dump());
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

void require_count(std::size_t got, std::size_t want, std::string_view text) {
  if (got != want) {
    throw ParseError("expected " + std::to_string(want) + " entries, got " + std::to_string(got) + " in " +
                     quoted(text));
  }
}

}  // namespace

double parse_double(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = !s.empty() && s.front() == '+' ? s.substr(1) : s;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc{} || end != body.data() + body.size() || !std::isfinite(value)) {
    throw ParseError("not a finite number: " + quoted(text));
  }
  return value;
}

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  const auto pi = s.find("pi");
  if (pi == std::string_view::npos) return parse_double(s);

  std::string_view coef = trim(s.substr(0, pi));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double scale = 1.0;
  if (coef == "-") {
    scale = -1.0;
  } else if (!coef.empty() && coef != "+") {
    scale = parse_double(coef);
  }

  const std::string_view rest = trim(s.substr(pi + 2));
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ParseError("malformed angle " + quoted(text));
    divisor = parse_double(rest.substr(1));
    if (divisor == 0.0) throw ParseError("zero divisor in angle " + quoted(text));
  }
  return scale * kPi / divisor;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex number");
  if (s.front() == '[') return json_complex(parse_json(s));
  if (s.back() != 'i') return {parse_double(s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  const std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_double(im);
  }
  return {re.empty() ? 0.0 : parse_double(re), imag};
}

ExtendedReal parse_extended(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") return ExtendedReal::plus_infinity();
  if (s == "-inf" || s == "-infinity") throw ParseError("-inf is not an admissible value");
  return ExtendedReal(parse_double(s));
}

std::vector<Complex> parse_complex_list(std::string_view text, std::size_t count) {
  const std::string_view s = trim(text);
  std::vector<Complex> out;
  if (!s.empty() && s.front() == '[') {
    const nlohmann::json j = parse_json(s);
    if (!j.is_array()) throw ParseError("expected a JSON array: " + quoted(text));
    for (const auto& e : j) out.push_back(json_complex(e));
  } else {
    for (std::string_view part : split_commas(s)) out.push_back(parse_complex(part));
  }
  require_count(out.size(), count, text);
  return out;
}

std::vector<double> parse_real_list(std::string_view text, std::size_t count) {
  const std::string_view s = trim(text);
  std::vector<double> out;
  if (!s.empty() && s.front() == '[') {
    const nlohmann::json j = parse_json(s);
    if (!j.is_array()) throw ParseError("expected a JSON array: " + quoted(text));
    for (const auto& e : j) out.push_back(json_number(e));
  } else {
    for (std::string_view part : split_commas(s)) out.push_back(parse_double(part));
  }
  require_count(out.size(), count, text);
  return out;
}

C2Matrix parse_matrix(std::string_view text) {
  const nlohmann::json j = parse_json(trim(text));
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw ParseError("expected a 2x2 JSON matrix: " + quoted(text));
  }
  return {json_complex(j[0][0]), json_complex(j[0][1]), json_complex(j[1][0]), json_complex(j[1][1])};
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, end);
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  return format_double(z.real()) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "i";
}

std::string format_extended(const ExtendedReal& x) { return x.is_infinite() ? "inf" : format_double(x.value()); }

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const C2Vector& v) { return nlohmann::json::array({to_json(v.up), to_json(v.down)}); }

nlohmann::json to_json(const C2Matrix& m) {
  return nlohmann::json::array({nlohmann::json::array({to_json(m.u11), to_json(m.u12)}),
                                nlohmann::json::array({to_json(m.u21), to_json(m.u22)})});
}

nlohmann::json to_json(const ExtendedReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

nlohmann::json to_json(const AlphaBC& a) {
  return nlohmann::json::array({to_json(a.a1), to_json(a.a2), to_json(a.a3), to_json(a.a4)});
}

nlohmann::json to_json(const QuaternionForm& q) {
  return {{"gamma1", to_json(q.g1)}, {"gamma2", to_json(q.g2)}, {"gamma3", to_json(q.g3)}};
}

}  // namespace junction::cli
