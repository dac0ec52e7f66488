#include "dms/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace dms {

namespace {

// Decimal literal -> exact rational: digits after the point scale the
// denominator by powers of ten.
Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (after_point) throw std::invalid_argument("bad rational literal: " + text);
      after_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad rational literal: " + text);
    if (num > (INT64_MAX - 9) / 10 || (after_point && den > INT64_MAX / 10))
      throw std::overflow_error("rational literal too long: " + text);
    num = num * 10 + (c - '0');
    if (after_point) den *= 10;
    any_digit = true;
  }
  if (!any_digit) throw std::invalid_argument("bad rational literal: " + text);
  return Rational(neg ? -num : num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  Rational p = parse_decimal(text.substr(0, slash));
  Rational q = parse_decimal(text.substr(slash + 1));
  if (q.is_zero()) throw std::invalid_argument("bad rational literal: " + text);
  return p / q;
}

RationalComplex parse_rational_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // Split real and imaginary at the last top-level +/- that is not a
    // leading sign and not part of the real component's own sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if (s[i] == '+' || s[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      std::string im = s.empty() || s == "+" ? "1" : (s == "-" ? "-1" : s);
      return RationalComplex(Rational(0), parse_rational(im));
    }
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return RationalComplex(parse_rational(re), parse_rational(im));
  }
  return RationalComplex(parse_rational(s));
}

}  // namespace dms
