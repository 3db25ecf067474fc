#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "tornheim/app.hpp"

namespace tornheim::app {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the unsigned decimal/scientific number starting at pos, 0 if none.
std::size_t scan_unsigned(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  std::size_t mantissa = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++mantissa;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++mantissa;
  }
  if (mantissa == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    std::size_t exp_digits = 0;
    while (j < s.size() && is_digit(s[j])) ++j, ++exp_digits;
    if (exp_digits > 0) i = j;  // otherwise the 'e' is left for the caller to reject
  }
  return i - pos;
}

double to_double(std::string_view token) {
  // from_chars does not take a leading '+'
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ParseError("number out of range: '" + std::string(token) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void reject(std::string_view text, std::size_t pos) {
  const std::string_view rest = text.substr(pos);
  std::string msg = "malformed complex literal '" + std::string(text) + "': ";
  if (rest.empty()) {
    msg += "unexpected end of input";
  } else {
    msg += "unexpected token '" + std::string(rest) + "'";
  }
  throw ParseError(msg);
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  const std::size_t len = scan_unsigned(s, pos);
  if (len == 0 || pos + len != s.size()) {
    throw ParseError("malformed real literal '" + std::string(text) + "'");
  }
  return to_double(s);
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t len = scan_unsigned(s, pos);
  if (len == 0) reject(s, pos);
  const double re = to_double(s.substr(0, pos + len));
  pos += len;
  if (pos == s.size()) return {re, 0.0};

  if (s[pos] != '+' && s[pos] != '-') reject(s, pos);
  const std::size_t sign_at = pos++;
  len = scan_unsigned(s, pos);
  if (len == 0) reject(s, pos);
  double im = to_double(s.substr(pos, len));
  if (s[sign_at] == '-') im = -im;
  pos += len;
  if (pos == s.size() || s[pos] != 'i') reject(s, pos);
  if (++pos != s.size()) reject(s, pos);
  return {re, im};
}

std::string format_complex(Complex z) {
  char buf[64];
  const double im = z.imag();
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", z.real(), std::signbit(im) ? '-' : '+', std::abs(im));
  return buf;
}

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown output format '" + std::string(name) + "' (expected text, json or csv)");
}

}  // namespace tornheim::app
