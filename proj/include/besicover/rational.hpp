#ifndef BESICOVER_RATIONAL_HPP
#define BESICOVER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace besicover {

// Exact arithmetic throughout: all distances, radii and scale factors are
// rationals over unbounded integers. Expression templates are switched off
// so Rational behaves as a plain value type.
using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
// std::invalid_argument with a message naming the offending token.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" reduced.
std::string to_string(const Rational& value);

// ceil(-log2(t)) for t in (0, 1]: the smallest k >= 0 with 2^-k <= t.
// Pure integer arithmetic, no floating point.
int ceil_neg_log2(const Rational& t);

// ceil(log2(t)) for t >= 1: the smallest k >= 0 with t <= 2^k.
int ceil_log2(const Rational& t);

// ceil(log2(sqrt(q))) for q >= 1: the smallest k >= 0 with q <= 4^k.
// Used for ratio exponents on squared-distance spaces.
int ceil_log2_sqrt(const Rational& q);

Int ipow(const Int& base, int exponent);

// 2^-k as a Rational.
Rational pow2(int exponent);

}  // namespace besicover

#endif
