#include "dzb/rational.hpp"

#include "dzb/errors.hpp"

#include <numeric>

namespace dzb {

Integer floor(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational mod1(const Rational& r) { return r - Rational(floor(r)); }

bool is_integer(const Rational& r) { return den(r) == 1; }

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view t) {
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    return t;
  };
  s = trim(s);
  auto parse_int = [](std::string_view t) {
    if (t.empty()) throw ParseError("empty integer");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError("malformed integer '" + std::string(t) + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw ParseError("malformed integer '" + std::string(t) + "'");
    return Integer(std::string(t[0] == '+' ? t.substr(1) : t));
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Integer n = parse_int(trim(s.substr(0, slash)));
  Integer d = parse_int(trim(s.substr(slash + 1)));
  if (d == 0) throw ParseError("zero denominator");
  return Rational(n, d);
}

std::int64_t to_i64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN))
    throw ArithmeticOverflow("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(z);
}

std::int64_t to_i64(const Rational& r) {
  if (den(r) != 1) throw InvariantViolation("expected an integer, got " + to_string(r));
  return to_i64(num(r));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = boost::multiprecision::gcd(a, b);
  Integer l = a / g * b;
  return l < 0 ? Integer(-l) : l;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  Integer l = lcm(Integer(a), Integer(b));
  return to_i64(l);
}

Integer common_denominator(const QVec& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, den(x));
  return d;
}

QVec mod1(const QVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(mod1(x));
  return out;
}

bool is_zero_mod1(const QVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

int exact_log(const Rational& q, std::int64_t base) {
  auto fail = [&] { return NotAPower(to_string(q) + " is not a power of " + std::to_string(base)); };
  if (q <= 0 || base < 2) throw fail();
  Integer a = num(q), b = den(q);
  if (a != 1 && b != 1) throw fail();
  Integer x = a == 1 ? b : a;
  int e = 0;
  while (x > 1 && x % base == 0) {
    x /= base;
    ++e;
  }
  if (x != 1) throw fail();
  return a == 1 ? -e : e;
}

}  // namespace dzb
