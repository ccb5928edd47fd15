#include "besicover/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace besicover {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(Int(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const Int d = Int(std::string(den));
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(Int(std::string(num)), d);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

int ceil_neg_log2(const Rational& t) {
  if (t <= 0 || t > 1) throw std::invalid_argument("ceil_neg_log2 requires t in (0, 1]");
  Int num = numerator(t);
  const Int den = denominator(t);
  int k = 0;
  while (num < den) {
    num <<= 1;
    ++k;
  }
  return k;
}

int ceil_log2(const Rational& t) {
  if (t < 1) throw std::invalid_argument("ceil_log2 requires t >= 1");
  const Int num = numerator(t);
  Int den = denominator(t);
  int k = 0;
  while (den < num) {
    den <<= 1;
    ++k;
  }
  return k;
}

int ceil_log2_sqrt(const Rational& q) {
  if (q < 1) throw std::invalid_argument("ceil_log2_sqrt requires q >= 1");
  const Int num = numerator(q);
  Int den = denominator(q);
  int k = 0;
  while (den < num) {
    den <<= 2;
    ++k;
  }
  return k;
}

Int ipow(const Int& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow requires exponent >= 0");
  Int result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational pow2(int exponent) {
  if (exponent >= 0) return Rational(Int(1) << exponent);
  return Rational(Int(1), Int(1) << (-exponent));
}

}  // namespace besicover
