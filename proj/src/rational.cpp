#include "shl/rational.hpp"

#include <sstream>

namespace shl {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  // Accept only [-]digits[/digits]; mpq_set_str is laxer than we want.
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw std::invalid_argument("malformed rational literal: " + text);
  if (pos != text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("malformed rational literal: " + text);
    ++pos;
    std::size_t den_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != text.size())
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  mpq_class value;
  if (value.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
  value.canonicalize();
  return value;
}

std::string rational_str(const Rational& x) {
  return x.get_str();
}

double shadow(const Rational& x) {
  return x.get_d();
}

Rational pow_int(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0 && e < 0) throw std::domain_error("pow_int: 0 raised to a negative power");
  Rational base = e > 0 ? x : Rational(1) / x;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1UL;
  }
  return acc;
}

Rational pochhammer_t(const Rational& a, const Rational& t, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer_t: negative length");
  Rational acc(1);
  Rational power(1);
  for (long i = 0; i < k; ++i) {
    acc *= (1 - a * power);
    power *= t;
  }
  return acc;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

}  // namespace shl
