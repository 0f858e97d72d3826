#include "dzb/rootdata.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace dzb {

namespace {

constexpr int kMaxRoots = 4096;

void check_cartan(const IMat& A) {
  const int r = A.rows();
  for (int i = 0; i < r; ++i) {
    if (A(i, i) != 2) throw InvalidInput("pairing matrix is not a Cartan matrix: ⟨α_i, α_i^∨⟩ ≠ 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (A(i, j) > 0) throw InvalidInput("pairing matrix is not a Cartan matrix: positive off-diagonal entry");
      if ((A(i, j) == 0) != (A(j, i) == 0))
        throw InvalidInput("pairing matrix is not a Cartan matrix: asymmetric zero pattern");
      if (A(i, j) * A(j, i) > 3) throw InvalidInput("pairing matrix is not of finite type");
    }
  }
}

}  // namespace

RootDatum::RootDatum(std::vector<IVec> simple_roots, std::vector<IVec> simple_coroots, int rank)
    : n_(rank), sroots_(std::move(simple_roots)), scoroots_(std::move(simple_coroots)) {
  if (sroots_.size() != scoroots_.size()) throw InvalidInput("simple roots and coroots differ in number");
  if (n_ < 0 && !sroots_.empty()) n_ = int(sroots_[0].size());
  if (n_ < 0) throw InvalidInput("rank required for a datum without roots");
  for (const auto& v : sroots_)
    if (int(v.size()) != n_) throw InvalidInput("simple root of wrong length");
  for (const auto& v : scoroots_)
    if (int(v.size()) != n_) throw InvalidInput("simple coroot of wrong length");
  const int r = int(sroots_.size());
  cartan_ = IMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_(i, j) = dot(sroots_[i], scoroots_[j]);
  check_cartan(cartan_);

  // Reflection closure from the simple roots, tracking simple-root coefficients.
  std::vector<IVec> pr, pc, pk;
  std::unordered_map<IVec, int, IVecHash> seen;
  std::deque<int> queue;
  for (int i = 0; i < r; ++i) {
    IVec k(r, 0);
    k[i] = 1;
    seen.emplace(k, int(pk.size()));
    pr.push_back(sroots_[i]);
    pc.push_back(scoroots_[i]);
    pk.push_back(k);
    queue.push_back(int(pk.size()) - 1);
  }
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      const std::int64_t c = dot(pr[b], scoroots_[i]);
      if (c == 0) continue;
      IVec k = pk[b];
      k[i] -= c;
      const bool pos = std::all_of(k.begin(), k.end(), [](std::int64_t x) { return x >= 0; });
      if (!pos || seen.count(k)) continue;
      const std::int64_t cc = dot(sroots_[i], pc[b]);
      seen.emplace(k, int(pk.size()));
      pr.push_back(sub(pr[b], scale(c, sroots_[i])));
      pc.push_back(sub(pc[b], scale(cc, scoroots_[i])));
      pk.push_back(std::move(k));
      queue.push_back(int(pk.size()) - 1);
      if (int(pk.size()) > kMaxRoots) throw InvalidInput("pairing matrix is not of finite type");
    }
  }
  std::vector<int> order(pk.size());
  std::iota(order.begin(), order.end(), 0);
  auto ht = [&](int i) { return std::accumulate(pk[i].begin(), pk[i].end(), std::int64_t(0)); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(pk[b].begin(), pk[b].end(), pk[a].begin(), pk[a].end());
  });
  const int P = int(pk.size());
  roots_.resize(2 * P);
  coroots_.resize(2 * P);
  coeffs_.resize(2 * P);
  for (int i = 0; i < P; ++i) {
    roots_[i] = pr[order[i]];
    coroots_[i] = pc[order[i]];
    coeffs_[i] = pk[order[i]];
    roots_[i + P] = neg(roots_[i]);
    coroots_[i + P] = neg(coroots_[i]);
    coeffs_[i + P] = neg(coeffs_[i]);
  }
  for (int i = 0; i < 2 * P; ++i) {
    if (!root_idx_.emplace(roots_[i], i).second) throw InvalidInput("roots are not distinct");
    if (!coroot_idx_.emplace(coroots_[i], i).second) throw InvalidInput("coroots are not distinct");
    if (dot(roots_[i], coroots_[i]) != 2) throw InvariantViolation("⟨α, α^∨⟩ ≠ 2 on a generated root");
  }
  simple_pos_.resize(r);
  for (int i = 0; i < r; ++i) simple_pos_[i] = root_idx_.at(sroots_[i]);

  // Dynkin components by union-find on nonzero Cartan entries.
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> findp = [&](int x) { return parent[x] == x ? x : parent[x] = findp(parent[x]); };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && cartan_(i, j) != 0) parent[findp(i)] = findp(j);
  std::map<int, int> comp_id;
  comp_of_.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    const int root = findp(i);
    auto it = comp_id.find(root);
    if (it == comp_id.end()) {
      it = comp_id.emplace(root, int(components_.size())).first;
      components_.emplace_back();
    }
    comp_of_[i] = it->second;
    components_[it->second].push_back(i);
  }
  highest_.assign(components_.size(), -1);
  for (int i = 0; i < P; ++i) {
    const int c = component_of_root(i);
    if (highest_[c] < 0 || height(i) > height(highest_[c])) highest_[c] = i;
  }
}

int RootDatum::height(int i) const {
  return int(std::accumulate(coeffs_[i].begin(), coeffs_[i].end(), std::int64_t(0)));
}

int RootDatum::component_of_root(int r) const {
  for (int i = 0; i < semisimple_rank(); ++i)
    if (coeffs_[r][i] != 0) return comp_of_[i];
  throw InvariantViolation("root with zero coefficients");
}

std::optional<int> RootDatum::find_root(const IVec& v) const {
  auto it = root_idx_.find(v);
  if (it == root_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootDatum::find_coroot(const IVec& v) const {
  auto it = coroot_idx_.find(v);
  if (it == coroot_idx_.end()) return std::nullopt;
  return it->second;
}

IVec RootDatum::reflect(int r, const IVec& x) const { return sub(x, scale(dot(x, coroots_[r]), roots_[r])); }

QVec RootDatum::reflect(int r, const QVec& x) const {
  const Rational c = dot(x, coroots_[r]);
  QVec y = x;
  for (int i = 0; i < n_; ++i) y[i] -= c * roots_[r][i];
  return y;
}

IVec RootDatum::coreflect(int r, const IVec& y) const { return sub(y, scale(dot(roots_[r], y), coroots_[r])); }

QVec RootDatum::coreflect(int r, const QVec& y) const {
  const Rational c = dot(y, roots_[r]);
  QVec z = y;
  for (int i = 0; i < n_; ++i) z[i] -= c * coroots_[r][i];
  return z;
}

RootDatum::Quotient RootDatum::quotient(const std::vector<IVec>& K) const {
  if (K.empty()) return {*this, IMat::identity(n_), IMat::identity(n_), IMat::identity(n_)};
  for (const auto& k : K) {
    if (int(k.size()) != n_) throw InvalidInput("identification vector of wrong length");
    for (const auto& c : scoroots_)
      if (dot(k, c) != 0) throw InvalidInput("identification vector pairs nontrivially with a coroot");
  }
  const IMat Km = IMat::from_cols(K, n_);
  const SmithForm s = smith_normal_form(Km);
  for (int i = 0; i < s.rank; ++i)
    if (s.d(i) != 1) throw InvalidInput("identifications do not span a saturated sublattice");
  const int k = s.rank, m = n_ - k;
  const IMat Uinv = unimodular_inverse(s.U);
  const IMat UinvT = Uinv.transpose();
  Quotient q;
  q.project = IMat(m, n_);
  q.lift = IMat(n_, m);
  q.coproject = IMat(m, n_);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n_; ++j) {
      q.project(i, j) = s.U(k + i, j);
      q.lift(j, i) = Uinv(j, k + i);
      q.coproject(i, j) = UinvT(k + i, j);
    }
  std::vector<IVec> r, c;
  for (const auto& a : sroots_) r.push_back(q.project * a);
  for (const auto& a : scoroots_) c.push_back(q.coproject * a);
  q.datum = RootDatum(r, c, m);
  return q;
}

IMat cartan_matrix(const std::string& type) {
  std::vector<std::pair<char, int>> parts;
  std::stringstream ss(type);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() < 2) throw InvalidInput("bad Cartan type: " + type);
    const char t = char(std::toupper(static_cast<unsigned char>(tok[0])));
    int n = 0;
    try {
      n = std::stoi(tok.substr(1));
    } catch (...) {
      throw InvalidInput("bad Cartan type: " + type);
    }
    parts.emplace_back(t, n);
  }
  int total = 0;
  for (auto [t, n] : parts) total += n;
  IMat A(total, total);
  int off = 0;
  for (auto [t, n] : parts) {
    auto set = [&](int i, int j, int v) { A(off + i, off + j) = v; };
    for (int i = 0; i < n; ++i) set(i, i, 2);
    auto link = [&](int i, int j) { set(i, j, -1), set(j, i, -1); };
    switch (t) {
      case 'A':
        if (n < 1) throw InvalidInput("bad Cartan type: " + type);
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'B':
      case 'C':
        if (n < 2) throw InvalidInput("bad Cartan type: " + type);
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        // B: α_n short; C: α_n long.
        set(n - 2, n - 1, t == 'B' ? -2 : -1);
        set(n - 1, n - 2, t == 'B' ? -1 : -2);
        break;
      case 'D':
        if (n < 3) throw InvalidInput("bad Cartan type: " + type);
        for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
        link(n - 3, n - 2);
        link(n - 3, n - 1);
        break;
      case 'E':
        if (n < 6 || n > 8) throw InvalidInput("bad Cartan type: " + type);
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'F':
        if (n != 4) throw InvalidInput("bad Cartan type: " + type);
        link(0, 1);
        set(1, 2, -2);
        set(2, 1, -1);
        link(2, 3);
        break;
      case 'G':
        if (n != 2) throw InvalidInput("bad Cartan type: " + type);
        set(0, 1, -1);
        set(1, 0, -3);
        break;
      default:
        throw InvalidInput("bad Cartan type: " + type);
    }
    off += n;
  }
  return A;
}

RootDatum simply_connected(const std::string& type) {
  const IMat A = cartan_matrix(type);
  std::vector<IVec> r, c;
  for (int i = 0; i < A.rows(); ++i) {
    r.push_back(A.row(i));
    IVec e(A.rows(), 0);
    e[i] = 1;
    c.push_back(e);
  }
  return RootDatum(r, c);
}

RootDatum adjoint(const std::string& type) {
  const IMat A = cartan_matrix(type);
  std::vector<IVec> r, c;
  for (int i = 0; i < A.rows(); ++i) {
    IVec e(A.rows(), 0);
    e[i] = 1;
    r.push_back(e);
    c.push_back(A.col(i));
  }
  return RootDatum(r, c);
}

RootDatum gl_datum(int n) {
  std::vector<IVec> r;
  for (int i = 0; i + 1 < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    e[i + 1] = -1;
    r.push_back(e);
  }
  return RootDatum(r, r);
}

int classification_weyl_order(const std::string& type) {
  std::stringstream ss(type);
  std::string tok;
  long long order = 1;
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  while (std::getline(ss, tok, 'x')) {
    const char t = char(std::toupper(static_cast<unsigned char>(tok[0])));
    const int n = std::stoi(tok.substr(1));
    switch (t) {
      case 'A': order *= fact(n + 1); break;
      case 'B':
      case 'C': order *= (1LL << n) * fact(n); break;
      case 'D': order *= (1LL << (n - 1)) * fact(n); break;
      default: throw InvalidInput("classification order only for types A–D");
    }
  }
  return int(order);
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const RootDatum& datum_in, std::size_t bound) : d_(datum_in), nr_(datum_in.num_roots()) {
  const RootDatum& datum = d_;
  const int n = datum.rank(), r = datum.semisimple_rank();
  std::vector<IMat> sx(r), sy(r);
  for (int i = 0; i < r; ++i) {
    IMat mx = IMat::identity(n), my = IMat::identity(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        mx(a, b) -= datum.simple_roots()[i][a] * datum.simple_coroots()[i][b];
        my(a, b) -= datum.simple_coroots()[i][a] * datum.simple_roots()[i][b];
      }
    sx[i] = mx;
    sy[i] = my;
  }
  // Elements are keyed by the images of the simple roots, which determine w.
  auto image_key = [&](const IMat& m) {
    IVec k;
    k.reserve(r);
    for (int i = 0; i < r; ++i) k.push_back(datum.find_root(m * datum.simple_roots()[i]).value());
    return k;
  };
  onx_.push_back(IMat::identity(n));
  ony_.push_back(IMat::identity(n));
  index_.emplace(image_key(onx_[0]), 0);
  std::vector<IMat> invx{IMat::identity(n)};
  for (std::size_t b = 0; b < onx_.size(); ++b) {
    for (int i = 0; i < r; ++i) {
      IMat m = onx_[b] * sx[i];
      IVec k = image_key(m);
      if (index_.count(k)) continue;
      if (onx_.size() >= bound) throw GroupTooLarge("Weyl group exceeds the configured bound of " + std::to_string(bound));
      index_.emplace(std::move(k), int(onx_.size()));
      ony_.push_back(ony_[b] * sy[i]);
      invx.push_back(sx[i] * invx[b]);
      onx_.push_back(std::move(m));
    }
  }
  const int N = size();
  inv_.resize(N);
  for (int w = 0; w < N; ++w) inv_[w] = index_.at(image_key(invx[w]));
  perm_.resize(std::size_t(N) * nr_);
  len_.assign(N, 0);
  for (int w = 0; w < N; ++w) {
    for (int j = 0; j < nr_; ++j) {
      const int img = datum.find_root(onx_[w] * datum.root(j)).value();
      perm_[std::size_t(w) * nr_ + j] = img;
      if (datum.is_positive(j) && !datum.is_positive(img)) ++len_[w];
    }
  }
  simple_.resize(r);
  for (int i = 0; i < r; ++i) simple_[i] = index_.at(image_key(sx[i]));
  refl_.resize(nr_);
  for (int j = 0; j < nr_; ++j) {
    IMat m = IMat::identity(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) -= datum.root(j)[a] * datum.coroot(j)[b];
    refl_[j] = index_.at(image_key(m));
  }
  longest_ = int(std::max_element(len_.begin(), len_.end()) - len_.begin());
}

std::vector<int> WeylGroup::key(int w) const {
  std::vector<int> k;
  for (int i = 0; i < d_.semisimple_rank(); ++i) k.push_back(root_image(w, d_.simple_index(i)));
  return k;
}

int WeylGroup::mul(int a, int b) const {
  IVec k;
  k.reserve(d_.semisimple_rank());
  for (int i = 0; i < d_.semisimple_rank(); ++i) k.push_back(root_image(a, root_image(b, d_.simple_index(i))));
  return index_.at(k);
}

std::optional<int> WeylGroup::from_simple_images(const std::vector<int>& images) const {
  IVec k(images.begin(), images.end());
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> WeylGroup::find(const IMat& m) const {
  IVec k;
  for (int i = 0; i < d_.semisimple_rank(); ++i) {
    auto r = d_.find_root(m * d_.simple_roots()[i]);
    if (!r) return std::nullopt;
    k.push_back(*r);
  }
  auto it = index_.find(k);
  if (it == index_.end() || !(onx_[it->second] == m)) return std::nullopt;
  return it->second;
}

std::vector<int> WeylGroup::reduced_word(int w) const {
  std::vector<int> word;
  while (len_[w] > 0) {
    for (int i = 0; i < d_.semisimple_rank(); ++i) {
      // i is a left descent iff w⁻¹α_i < 0.
      if (!d_.is_positive(root_image(inv_[w], d_.simple_index(i)))) {
        word.push_back(i);
        w = mul(simple_[i], w);
        break;
      }
    }
  }
  return word;
}

int WeylGroup::order_of(int w) const {
  int k = 1, x = w;
  while (x != identity()) x = mul(x, w), ++k;
  return k;
}

std::vector<int> WeylGroup::generate(const std::vector<int>& gens) const {
  std::vector<char> in(size(), 0);
  std::vector<int> out{identity()};
  in[identity()] = 1;
  for (std::size_t b = 0; b < out.size(); ++b)
    for (int g : gens) {
      const int x = mul(out[b], g);
      if (!in[x]) in[x] = 1, out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool is_prime_power(std::int64_t q, std::int64_t* p, int* k) {
  if (q < 2) return false;
  std::int64_t f = 0;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      f = d;
      break;
    }
  if (f == 0) f = q;
  int e = 0;
  std::int64_t x = q;
  while (x % f == 0) x /= f, ++e;
  if (x != 1) return false;
  if (p) *p = f;
  if (k) *k = e;
  return true;
}

FrobeniusAction::FrobeniusAction(IMat f0, std::int64_t q_, const RootDatum& datum) : F0(std::move(f0)), q(q_) {
  const int n = datum.rank();
  if (F0.rows() != n || F0.cols() != n) throw InvalidInput("Frobenius matrix has wrong shape");
  if (!is_prime_power(q)) throw BadPrimePower("q = " + std::to_string(q) + " is not a prime power");
  IMat p = F0;
  order_ = 1;
  while (!p.is_identity()) {
    p = p * F0;
    if (++order_ > 1000) throw InvalidInput("Frobenius matrix does not have finite order");
  }
  const IMat FT = F0.transpose();
  for (int j = 0; j < datum.num_roots(); ++j) {
    if (!datum.find_root(F0 * datum.root(j))) throw InvalidInput("Frobenius matrix does not permute the roots");
    if (!datum.find_coroot(FT * datum.coroot(j)))
      throw InvalidInput("transposed Frobenius matrix does not permute the coroots");
  }
}

int FrobeniusAction::coroot_degree(const IVec& c) const {
  const IMat FT = F0.transpose();
  IVec y = FT * c;
  int d = 1;
  while (y != c) {
    y = FT * y;
    if (++d > order_) throw InvariantViolation("coroot orbit longer than the Frobenius order");
  }
  return d;
}

TorusCharacter::TorusCharacter(QVec theta) : v_(mod1(theta)) {}

TorusCharacter::TorusCharacter(const IVec& numerators, std::int64_t denominator) {
  if (denominator <= 0) throw InvalidInput("character denominator must be positive");
  for (auto x : numerators) v_.push_back(mod1(Rational(x, denominator)));
}

bool TorusCharacter::is_valid_for(const FrobeniusAction& F) const {
  if (F.F0.rows() != rank()) return false;
  QVec y = F.F0 * v_;
  for (int i = 0; i < rank(); ++i) y[i] = y[i] * F.q - v_[i];
  return is_zero_mod1(y);
}

void TorusCharacter::validate(const FrobeniusAction& F) const {
  if (F.F0.rows() != rank()) throw InvalidCharacter("character has wrong rank");
  if (!is_valid_for(F)) throw InvalidCharacter("(q·F₀ − 1)·θ ≢ 0 mod 1");
}

TorusCharacter TorusCharacter::act(const WeylGroup& W, int w) const { return TorusCharacter(W.act_x(w, v_)); }

Rational pairing(const TorusCharacter& theta, const IVec& coroot) { return mod1(dot(theta.values(), coroot)); }

Rational norm_pairing(const TorusCharacter& theta, const IVec& coroot, const FrobeniusAction& F, int multiple) {
  theta.validate(F);
  const int d = F.coroot_degree(coroot) * multiple;
  // Identify k_α^× with X_*/(F^d − 1)X_* restricted to ℤα^∨; push its generator to T(k_F) ≅ X_*/(F − 1)X_*.
  const IMat FT = F.F0.transpose();
  Integer qd = 1;
  for (int i = 0; i < d; ++i) qd *= F.q;
  QVec t(coroot.size());
  for (std::size_t i = 0; i < coroot.size(); ++i) t[i] = Rational(coroot[i]) / Rational(qd - 1);
  QVec u(coroot.size(), Rational(0)), cur = t;
  for (int i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) u[j] += cur[j];
    cur = FT * cur;
    for (auto& x : cur) x *= F.q;
  }
  QVec y = FT * u;
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = y[j] * F.q - u[j];
    if (!is_integer(y[j])) throw InvariantViolation("norm image is not a cocharacter");
  }
  return mod1(dot(theta.values(), y));
}

bool is_nonsingular(const TorusCharacter& theta, const RootDatum& datum, const FrobeniusAction& F) {
  for (int j = 0; j < datum.num_roots(); ++j) {
    const Rational base = norm_pairing(theta, datum.coroot(j), F);
    if (base == 0) return false;
    const int ord = to_i64(den(base));
    for (int m = 2; m <= ord; ++m)
      if (norm_pairing(theta, datum.coroot(j), F, m) == 0) return false;
  }
  return true;
}

}  // namespace dzb
