#include "dzb/finite_field.hpp"

#include "dzb/errors.hpp"
#include "dzb/rootdata.hpp"

namespace dzb {

namespace {

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) d[i] = a % p, a /= p;
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = int(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

FiniteField::FiniteField(std::int64_t Q) {
  std::int64_t p = 0;
  int k = 0;
  if (!is_prime_power(Q, &p, &k)) throw BadPrimePower(std::to_string(Q) + " is not a prime power");
  if (Q > 4096) throw OracleTooLarge("field of order " + std::to_string(Q) + " exceeds the table bound");
  Q_ = int(Q), p_ = int(p), k_ = k;
  add_.resize(std::size_t(Q_) * Q_);
  neg_.resize(Q_);
  for (int a = 0; a < Q_; ++a) {
    const auto da = digits(a, p_, k_);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn, p_);
    for (int b = 0; b < Q_; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<int> ds(k_);
      for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * Q_ + b] = encode(ds, p_);
    }
  }
  // Brute-force a monic modulus f of degree k making the quotient ring a field.
  for (int tail = 0; tail < Q_; ++tail) {
    const auto f = digits(tail, p_, k_);  // f = x^k + Σ f_i x^i
    mul_.assign(std::size_t(Q_) * Q_, 0);
    for (int a = 0; a < Q_; ++a) {
      const auto da = digits(a, p_, k_);
      for (int b = 0; b < Q_; ++b) {
        const auto db = digits(b, p_, k_);
        std::vector<int> prod(2 * k_, 0);
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int d = 2 * k_ - 1; d >= k_; --d) {
          const int c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * f[i]) % p_ + p_) % p_;
        }
        prod.resize(k_);
        mul_[a * Q_ + b] = encode(prod, p_);
      }
    }
    bool field = true;
    for (int a = 1; a < Q_ && field; ++a)
      for (int b = 1; b < Q_ && field; ++b) field = mul_[a * Q_ + b] != 0;
    if (field) break;
  }
  for (int g = 1; g < Q_; ++g) {
    int x = g, order = 1;
    while (x != 1) x = mul(x, g), ++order;
    if (order == Q_ - 1) {
      gen_ = g;
      break;
    }
  }
  exp_.resize(Q_ - 1);
  log_.assign(Q_, -1);
  int x = 1;
  for (int e = 0; e < Q_ - 1; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = mul(x, gen_);
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InvariantViolation("inverse of zero");
  return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
}

int FiniteField::pow(int a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::int64_t m = Q_ - 1;
  return exp_[((std::int64_t(log_[a]) * (e % m)) % m + m) % m];
}

int FiniteField::from_int(std::int64_t n) const { return int(((n % p_) + p_) % p_); }

int FiniteField::exp(std::int64_t e) const {
  const std::int64_t m = Q_ - 1;
  return exp_[((e % m) + m) % m];
}

int FiniteField::log(int a) const {
  if (a == 0) throw InvariantViolation("logarithm of zero");
  return log_[a];
}

int FiniteField::frobenius(int a, int j) const {
  std::int64_t e = 1;
  for (int i = 0; i < j; ++i) e *= p_;
  return pow(a, e);
}

}  // namespace dzb
