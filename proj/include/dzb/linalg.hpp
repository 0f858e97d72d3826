#pragma once

#include "dzb/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dzb {

using IVec = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Dense row-major integer matrix with overflow-checked products.
class IMat {
public:
  IMat() = default;
  IMat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0) {}
  static IMat identity(int n);
  static IMat from_rows(const std::vector<IVec>& rows, int cols = -1);
  static IMat from_cols(const std::vector<IVec>& cols, int rows = -1);

  int rows() const { return r_; }
  int cols() const { return c_; }
  std::int64_t& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
  const std::vector<std::int64_t>& data() const { return a_; }

  IVec row(int i) const;
  IVec col(int j) const;
  IMat transpose() const;
  IMat operator*(const IMat& o) const;
  IVec operator*(const IVec& v) const;
  QVec operator*(const QVec& v) const;
  IMat operator-(const IMat& o) const;
  IMat operator+(const IMat& o) const;
  bool operator==(const IMat& o) const = default;
  bool is_identity() const;

private:
  int r_ = 0, c_ = 0;
  std::vector<std::int64_t> a_;
};

struct IMatHash {
  std::size_t operator()(const IMat& m) const;
};
struct IVecHash {
  std::size_t operator()(const IVec& v) const;
};

std::int64_t dot(const IVec& a, const IVec& b);
Rational dot(const QVec& a, const IVec& b);
Rational dot(const QVec& a, const QVec& b);
QVec to_q(const IVec& v);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(std::int64_t k, const IVec& a);
IVec neg(const IVec& a);
bool is_zero(const IVec& v);

// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i > 0 for i < rank.
struct SmithForm {
  IMat U, D, V;
  int rank = 0;
  std::int64_t d(int i) const { return i < rank ? D(i, i) : 0; }
};
SmithForm smith_normal_form(const IMat& M);

// Inverse of a unimodular matrix.
IMat unimodular_inverse(const IMat& M);

// Integer solutions of A x = b: particular solution (free coordinates zero) and a kernel basis.
struct IntegerSolution {
  IVec particular;
  std::vector<IVec> kernel;
};
std::optional<IntegerSolution> solve_integer(const IMat& A, const IVec& b);

// Solutions of A x ≡ b (mod m), x ∈ (ℤ/m)^n.
std::optional<IVec> solve_mod(const IMat& A, const IVec& b, std::int64_t m);

// The quotient ℤⁿ / L for L spanned by given columns: invariant factors and canonical class vectors.
class LatticeQuotient {
public:
  LatticeQuotient() = default;
  explicit LatticeQuotient(const IMat& generators_as_columns);
  int dim() const { return n_; }
  // moduli()[i] == 0 marks a free coordinate.
  const IVec& moduli() const { return mod_; }
  IVec class_of(const IVec& x) const;
  bool contains(const IVec& x) const;  // x ∈ L
  Integer torsion_order() const;
  int free_rank() const;

private:
  int n_ = 0;
  IMat U_;
  IVec mod_;
};

// Rational linear algebra on row-major matrices.
using QMat = std::vector<QVec>;
QMat to_q(const IMat& M);
std::optional<QVec> solve_rational(const QMat& A, const QVec& b);
std::vector<QVec> nullspace(const QMat& A);
int rank(const QMat& A);
QVec mul(const QMat& A, const QVec& x);

}  // namespace dzb
