#pragma once

#include <cstdint>
#include <vector>

namespace dzb {

// GF(Q) with elements 0..Q−1 encoding polynomials in base-p digits; 0 is zero and 1 is one.
class FiniteField {
public:
  explicit FiniteField(std::int64_t Q);
  int size() const { return Q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int add(int a, int b) const { return add_[a * Q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * Q_ + b]; }
  int inv(int a) const;
  int pow(int a, std::int64_t e) const;
  int from_int(std::int64_t n) const;
  int generator() const { return gen_; }
  int exp(std::int64_t e) const;  // generator^e
  int log(int a) const;           // a ≠ 0, in [0, Q−1)
  int frobenius(int a, int j) const;  // a^{p^j}

private:
  int Q_, p_, k_, gen_ = 1;
  std::vector<int> add_, mul_, neg_, log_, exp_;
};

}  // namespace dzb
