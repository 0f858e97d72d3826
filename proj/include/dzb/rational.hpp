#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dzb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Representative in [0,1).
Rational mod1(const Rational& r);
bool is_integer(const Rational& r);
Integer floor(const Rational& r);

// Reduced "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

std::int64_t to_i64(const Integer& z);
std::int64_t to_i64(const Rational& r);  // requires an integer value

Integer lcm(const Integer& a, const Integer& b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// lcm of all denominators (1 for an empty vector).
Integer common_denominator(const QVec& v);

QVec mod1(const QVec& v);

// k with q = base^k (k may be negative); throws NotAPower otherwise.
int exact_log(const Rational& q, std::int64_t base);
bool is_zero_mod1(const QVec& v);

}  // namespace dzb
