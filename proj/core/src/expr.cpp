#include "phk/expr.hpp"

#include <cctype>
#include <vector>

#include "phk/error.hpp"

namespace phk {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Poly parse_poly() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      if (text_[pos_] == '@') error("'@' is only allowed in tensor expressions");
      error("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
    }
    return p;
  }

  TensorPoly parse_tensor() {
    TensorPoly out(names_.size());
    skip_ws();
    bool negative = false;
    if (peek('-') || peek('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    out += tensor_term() * Rational(negative ? -1 : 1);
    while (true) {
      skip_ws();
      if (peek('+') || peek('-')) {
        bool neg = text_[pos_] == '-';
        ++pos_;
        out += tensor_term() * Rational(neg ? -1 : 1);
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ < text_.size()) {
      if (text_[pos_] == '@') error("nested '@': a summand may contain only one tensor sign");
      error("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
    }
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  TensorPoly tensor_term() {
    std::size_t start = pos_;
    Poly left = term();
    if (!peek('@')) {
      pos_ = start;
      skip_ws();
      error("missing '@' in tensor summand");
    }
    ++pos_;
    Poly right = term();
    if (peek('@')) error("nested '@': a summand may contain only one tensor sign");
    return tensor(left, right);
  }

  Poly expr() {
    skip_ws();
    bool negative = false;
    if (peek('-') || peek('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    while (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      Integer e = digits();
      if (e > kMaxExponent) {
        pos_ = start;
        error("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a non-negative integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den(1);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          error("malformed rational: expected a denominator after '/'");
        }
        den = digits();
        if (den == 0) {
          pos_ = at;
          error("malformed rational: zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(names_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Poly::variable(names_.size(), i);
      }
      pos_ = start;
      error("unknown variable '" + std::string(name) + "'");
    }
    if (c == '@') error("unexpected '@'");
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// |c| · m with the sign stripped.
std::string format_abs_term(const Rational& c, const Monomial& m, std::span<const std::string> names) {
  Rational a = abs(c);
  if (m.is_one()) return to_string(a);
  if (a == 1) return format_monomial(m, names);
  return to_string(a) + "*" + format_monomial(m, names);
}

std::string unit_or_monomial(const Monomial& m, std::span<const std::string> names) {
  return m.is_one() ? std::string("1") : format_monomial(m, names);
}

template <class Map, class Fn>
std::string join_signed(const Map& terms, Fn&& body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    bool negative = it->second < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += body(it->first, it->second);
    first = false;
  }
  return out;
}

}  // namespace

Poly parse_poly_expr(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse_poly();
}

TensorPoly parse_tensor_expr(std::string_view text, std::span<const std::string> names) {
  // "0" is how format_tensor writes the zero tensor.
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "0") return TensorPoly(names.size());
  return Parser(text, names).parse_tensor();
}

std::string format_poly(const Poly& p, std::span<const std::string> names) {
  return join_signed(p.terms(), [&](const Monomial& m, const Rational& c) { return format_abs_term(c, m, names); });
}

std::string format_tensor(const TensorPoly& t, std::span<const std::string> names) {
  return join_signed(t.terms(), [&](const TensorPoly::Key& k, const Rational& c) {
    return format_abs_term(c, k[0], names) + "@" + unit_or_monomial(k[1], names);
  });
}

std::string format_tensor(const TensorPoly3& t, std::span<const std::string> names) {
  return join_signed(t.terms(), [&](const TensorPoly3::Key& k, const Rational& c) {
    return format_abs_term(c, k[0], names) + "@" + unit_or_monomial(k[1], names) + "@" +
           unit_or_monomial(k[2], names);
  });
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace phk
