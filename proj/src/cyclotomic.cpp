#include "dzb/cyclotomic.hpp"

#include "dzb/errors.hpp"
#include "dzb/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace dzb {

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic order must be positive");
  // x^n - 1 divided by Φ_d for proper divisors d.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1, p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = cyclotomic_polynomial(d);
    // exact division p / q, q monic
    std::vector<std::int64_t> out(p.size() - q.size() + 1, 0);
    for (int k = int(out.size()) - 1; k >= 0; --k) {
      std::int64_t c = p[k + q.size() - 1];
      out[k] = c;
      for (std::size_t j = 0; j < q.size(); ++j) p[k + j] -= c * q[j];
    }
    p = out;
  }
  return p;
}

namespace {

struct FieldData {
  int n = 1, deg = 1;
  std::vector<IVec> power;  // ζ^k in the power basis, k ∈ [0, n)
};

const FieldData& field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<FieldData>();
  f->n = n;
  auto phi = cyclotomic_polynomial(n);
  f->deg = int(phi.size()) - 1;
  IVec cur(f->deg, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->power.push_back(cur);
    // multiply by x and reduce with the monic Φ_n
    IVec next(f->deg, 0);
    for (int j = 0; j + 1 < f->deg; ++j) next[j + 1] = cur[j];
    std::int64_t top = cur[f->deg - 1];
    if (f->deg == 1) next[0] = 0;
    for (int j = 0; j < f->deg; ++j) next[j] -= top * phi[j];
    cur = next;
  }
  auto& ref = *f;
  cache.emplace(n, std::move(f));
  return ref;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r, int order) : n_(order) {
  const auto& f = field(order);
  c_.assign(f.deg, Rational(0));
  c_[0] = r;
}

Cyclotomic Cyclotomic::zeta(int order, std::int64_t k) {
  const auto& f = field(order);
  std::int64_t e = ((k % order) + order) % order;
  QVec c(f.deg);
  for (int j = 0; j < f.deg; ++j) c[j] = f.power[e][j];
  return Cyclotomic(order, c);
}

Cyclotomic Cyclotomic::from_counts(int order, const std::vector<std::int64_t>& counts) {
  const auto& f = field(order);
  std::vector<Integer> acc(f.deg, 0);
  for (int k = 0; k < order; ++k) {
    if (counts[k] == 0) continue;
    for (int j = 0; j < f.deg; ++j)
      if (f.power[k][j] != 0) acc[j] += Integer(counts[k]) * f.power[k][j];
  }
  QVec c(acc.begin(), acc.end());
  return Cyclotomic(order, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw NonRationalStructureConstants("value " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::promote(int order) const {
  if (order == n_) return *this;
  if (order % n_ != 0) throw InvariantViolation("cyclotomic promotion to a non-multiple order");
  int step = order / n_;
  Cyclotomic out(Rational(0), order);
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) out += Cyclotomic(c_[j], order) * zeta(order, std::int64_t(j) * step);
  return out;
}

namespace {
int common_order(int a, int b) { return std::lcm(a, b); }
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    int m = common_order(n_, o.n_);
    return promote(m) + o.promote(m);
  }
  QVec c = c_;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += o.c_[j];
  return Cyclotomic(n_, c);
}

Cyclotomic Cyclotomic::operator-() const {
  QVec c = c_;
  for (auto& x : c) x = -x;
  return Cyclotomic(n_, c);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    if (o.n_ == 1) {
      QVec c = c_;
      for (auto& x : c) x *= o.c_[0];
      return Cyclotomic(n_, c);
    }
    if (n_ == 1) return o * *this;
    int m = common_order(n_, o.n_);
    return promote(m) * o.promote(m);
  }
  const auto& f = field(n_);
  QVec prod(2 * f.deg - 1, Rational(0));
  for (int i = 0; i < f.deg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < f.deg; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  QVec c(f.deg, Rational(0));
  for (int k = 0; k < int(prod.size()); ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = f.power[k % n_];
    for (int j = 0; j < f.deg; ++j)
      if (pw[j] != 0) c[j] += prod[k] * pw[j];
  }
  return Cyclotomic(n_, c);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvariantViolation("division by zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(1 / c_[0], n_);
  const auto& f = field(n_);
  QMat m(f.deg, QVec(f.deg, Rational(0)));
  for (int j = 0; j < f.deg; ++j) {
    QVec e(f.deg, Rational(0));
    e[j] = 1;
    Cyclotomic col = *this * Cyclotomic(n_, e);
    for (int i = 0; i < f.deg; ++i) m[i][j] = col.c_[i];
  }
  QVec rhs(f.deg, Rational(0));
  rhs[0] = 1;
  auto x = solve_rational(m, rhs);
  if (!x) throw InvariantViolation("cyclotomic inverse failed");
  return Cyclotomic(n_, *x);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    int m = common_order(n_, o.n_);
    return promote(m).c_ == o.promote(m).c_;
  }
  return c_ == o.c_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return dzb::to_string(c_[0]);
  std::string s;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!s.empty()) s += " + ";
    s += dzb::to_string(c_[j]);
    if (j > 0) s += "*z" + std::to_string(n_) + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return s;
}

}  // namespace dzb
