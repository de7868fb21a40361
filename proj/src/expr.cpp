#include "gfi/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace gfi {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  double number() {
    skip_ws();
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negate = s_[pos_] == '-';
      ++pos_;  // from_chars takes no leading sign
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' ||
            ((s_[pos_] == '+' || s_[pos_] == '-') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    double v = 0.0;
    auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != s_.data() + pos_) fail("malformed number");
    return negate ? -v : v;
  }

  /// re | imi | re±imi, where the imaginary part ends in 'i'.
  Cx number_complex() {
    double first = number();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {0.0, first};
    }
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      std::size_t save = pos_;
      bool tail_is_number = pos_ + 1 < s_.size() &&
                            (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '.');
      if (tail_is_number) {
        double second = number();
        if (pos_ < s_.size() && s_[pos_] == 'i') {
          ++pos_;
          return {first, second};
        }
        pos_ = save;  // not a complex tail; leave for the caller
      }
    }
    return {first, 0.0};
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

L2Fn parse_l2_expr(Cursor& c, double T) {
  std::string head = c.ident();
  c.expect('(');
  if (head == "poly") {
    std::vector<double> coeffs{c.number()};
    while (c.accept(',')) coeffs.push_back(c.number());
    c.expect(')');
    return L2Fn::polynomial(RPoly(std::move(coeffs)), T);
  }
  if (head == "indicator") {
    double a = c.number();
    c.expect(',');
    double b = c.number();
    c.expect(')');
    return L2Fn::indicator(a, b, T);
  }
  if (head == "scale") {
    double s = c.number();
    c.expect(',');
    L2Fn inner = parse_l2_expr(c, T);
    c.expect(')');
    return inner.scaled(s);
  }
  if (head == "sum") {
    L2Fn acc = parse_l2_expr(c, T);
    while (c.accept(',')) acc = acc + parse_l2_expr(c, T);
    c.expect(')');
    return acc;
  }
  c.fail("unknown function form '" + head + "'");
}

CPoly parse_cpoly(Cursor& c) {
  std::string head = c.ident();
  if (head != "poly") c.fail("expected poly(...)");
  c.expect('(');
  std::vector<Cx> coeffs{c.number_complex()};
  while (c.accept(',')) coeffs.push_back(c.number_complex());
  c.expect(')');
  return CPoly(std::move(coeffs));
}

AxisFactor parse_axis(Cursor& c) {
  c.expect('[');
  AxisFactor ax;
  ax.poly = parse_cpoly(c);
  c.expect(';');
  ax.rate = c.number_complex();
  c.expect(';');
  ax.shift = c.number_complex();
  c.expect(']');
  return ax;
}

GaussPolyFn parse_term(Cursor& c, std::size_t arity) {
  std::string head = c.ident();
  if (head != "term") c.fail("expected term(...)");
  c.expect('(');
  Cx coeff = c.number_complex();
  std::vector<AxisFactor> axes;
  while (c.accept(',')) axes.push_back(parse_axis(c));
  c.expect(')');
  if (axes.size() != arity)
    c.fail("term has " + std::to_string(axes.size()) + " axes, expected " + std::to_string(arity));
  return GaussPolyFn::term(coeff, std::move(axes));
}

}  // namespace

L2Fn parse_l2(std::string_view text, double domain_end) {
  Cursor c(text);
  L2Fn f = parse_l2_expr(c, domain_end);
  if (!c.done()) c.fail("trailing input");
  return f.with_label(std::string(text));
}

GaussPolyFn parse_kernel(std::string_view text, std::size_t arity) {
  Cursor c(text);
  GaussPolyFn acc = parse_term(c, arity);
  while (c.accept('+')) acc = acc + parse_term(c, arity);
  if (!c.done()) c.fail("trailing input");
  return acc;
}

Cx parse_complex(std::string_view text) {
  Cursor c(text);
  Cx v = c.number_complex();
  if (!c.done()) c.fail("trailing input");
  return v;
}

}  // namespace gfi
