#pragma once

#include "dzb/finite_field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace dzb {

using FMat = std::vector<int>;  // d×d row-major over a FiniteField

// Matrix group over GF(Q) enumerated by closure; optionally taken modulo scalars.
class MatrixGroup {
public:
  MatrixGroup(const FiniteField& F, int d, const std::vector<FMat>& gens, bool projective, std::size_t bound);

  int size() const { return int(elems_.size()); }
  int dim() const { return d_; }
  int identity() const { return 0; }
  const FMat& element(int i) const { return elems_[i]; }
  std::optional<int> find(const FMat& m) const;
  int index(const FMat& m) const;  // throws if absent
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  FMat mat_mul(const FMat& a, const FMat& b) const;
  FMat normalize(const FMat& m) const;
  const FiniteField& field() const { return *F_; }

private:
  std::uint64_t key(const FMat& m) const;
  const FiniteField* F_;
  int d_;
  bool proj_;
  std::vector<FMat> elems_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> inv_;
  std::vector<int> table_;  // dense product table when small
};

}  // namespace dzb
