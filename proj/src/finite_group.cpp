#include "dzb/finite_group.hpp"

#include "dzb/errors.hpp"

namespace dzb {

MatrixGroup::MatrixGroup(const FiniteField& F, int d, const std::vector<FMat>& gens, bool projective,
                         std::size_t bound)
    : F_(&F), d_(d), proj_(projective) {
  double bits = 0;
  for (int q = F.size(); q > 1; q >>= 1) ++bits;
  if ((bits + 1) * d * d > 64) throw OracleTooLarge("matrix key does not fit in 64 bits");
  FMat id(d * d, 0);
  for (int i = 0; i < d; ++i) id[i * d + i] = 1;
  elems_.push_back(id);
  index_.emplace(key(id), 0);
  std::vector<FMat> g;
  for (const auto& m : gens) g.push_back(normalize(m));
  for (std::size_t b = 0; b < elems_.size(); ++b)
    for (const auto& s : g) {
      FMat x = normalize(mat_mul(elems_[b], s));
      const auto k = key(x);
      if (index_.count(k)) continue;
      if (elems_.size() >= bound) throw OracleTooLarge("group exceeds the configured order bound " + std::to_string(bound));
      index_.emplace(k, int(elems_.size()));
      elems_.push_back(std::move(x));
    }
  const int n = size();
  if (std::size_t(n) * n <= (std::size_t(1) << 24)) {
    table_.resize(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table_[std::size_t(a) * n + b] = index(mat_mul(elems_[a], elems_[b]));
  }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (inv_[a] >= 0) continue;
    // The inverse is a power of a.
    int x = a, prev = 0;
    while (x != 0) prev = x, x = mul(x, a);
    inv_[a] = prev;
    inv_[prev] = a;
  }
}

std::uint64_t MatrixGroup::key(const FMat& m) const {
  std::uint64_t k = 0;
  for (int v : m) k = k * std::uint64_t(F_->size()) + std::uint64_t(v);
  return k;
}

FMat MatrixGroup::normalize(const FMat& m) const {
  if (!proj_) return m;
  for (int v : m)
    if (v != 0) {
      const int s = F_->inv(v);
      FMat out(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) out[i] = F_->mul(m[i], s);
      return out;
    }
  throw InvariantViolation("zero matrix in a projective group");
}

FMat MatrixGroup::mat_mul(const FMat& a, const FMat& b) const {
  FMat c(d_ * d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      const int x = a[i * d_ + k];
      if (x == 0) continue;
      for (int j = 0; j < d_; ++j) c[i * d_ + j] = F_->add(c[i * d_ + j], F_->mul(x, b[k * d_ + j]));
    }
  return c;
}

std::optional<int> MatrixGroup::find(const FMat& m) const {
  auto it = index_.find(key(normalize(m)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int MatrixGroup::index(const FMat& m) const {
  auto r = find(m);
  if (!r) throw InvariantViolation("matrix is not in the group");
  return *r;
}

int MatrixGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[std::size_t(a) * size() + b];
  return index(mat_mul(elems_[a], elems_[b]));
}

}  // namespace dzb
