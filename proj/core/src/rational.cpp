#include "phk/rational.hpp"

#include <cctype>
#include <string>

#include "phk/error.hpp"

namespace phk {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  std::size_t end = text.size();
  while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(start, end - start);

  bool negative = false;
  std::size_t pos = 0;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    pos = 1;
  }
  auto slash = body.find('/', pos);
  std::string_view num = body.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", start + pos);

  Integer n(std::string(num), 10);
  Integer d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", start + slash + 1);
    d = Integer(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", start + slash + 1);
  }
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace phk
