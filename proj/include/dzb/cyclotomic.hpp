#pragma once

#include "dzb/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dzb {

// Element of ℚ(ζ_N) in the power basis 1, ζ, …, ζ^{φ(N)-1}, reduced modulo Φ_N.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r, int order = 1);
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}

  static Cyclotomic zeta(int order, std::int64_t k);
  // Σ_k counts[k] ζ^k for counts indexed by k ∈ ℤ/N.
  static Cyclotomic from_counts(int order, const std::vector<std::int64_t>& counts);

  int order() const { return n_; }
  const QVec& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic promote(int order) const;  // order must be a multiple of this->order()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic inverse() const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Cyclotomic(int order, QVec c) : n_(order), c_(std::move(c)) {}
  int n_;
  QVec c_;
};

// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

}  // namespace dzb
