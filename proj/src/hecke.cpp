#include "dzb/hecke.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dzb {

namespace {

struct CycloRing {
  int n;
  std::vector<std::int64_t> phi;  // monic, constant term first
  int deg;
};

const CycloRing& ring(int n) {
  static std::map<int, CycloRing> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto phi = cyclotomic_polynomial(n);
  const int deg = int(phi.size()) - 1;
  return cache.emplace(n, CycloRing{n, phi, deg}).first->second;
}

// Reduce an integer polynomial modulo the monic Φ_n.
IVec reduce(IVec p, const CycloRing& R) {
  for (int k = int(p.size()) - 1; k >= R.deg; --k) {
    const std::int64_t c = p[k];
    if (c == 0) continue;
    for (int j = 0; j <= R.deg; ++j) p[k - R.deg + j] = checked_add(p[k - R.deg + j], -checked_mul(c, R.phi[j]));
  }
  p.resize(R.deg, 0);
  return p;
}

bool all_zero(const IVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

IVec ring_mul(const IVec& a, const IVec& b, const CycloRing& R) {
  if (R.deg == 1) return {checked_mul(a[0], b[0])};
  IVec p(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] = checked_add(p[i + j], checked_mul(a[i], b[j]));
  }
  return reduce(p, R);
}

}  // namespace

Laurent::Laurent(std::int64_t c, int exponent) {
  if (c != 0) t_[exponent] = IVec{c};
}

Laurent Laurent::zeta(int order, std::int64_t k) {
  const CycloRing& R = ring(order);
  k = ((k % order) + order) % order;
  IVec p(std::max<std::int64_t>(k + 1, R.deg), 0);
  p[k] = 1;
  Laurent out;
  out.n_ = order;
  out.t_[0] = reduce(p, R);
  return out;
}

Laurent Laurent::promote(int order) const {
  if (order == n_) return *this;
  if (order % n_ != 0) throw InvariantViolation("Laurent promotion to a non-multiple order");
  const int step = order / n_;
  Laurent out;
  out.n_ = order;
  const CycloRing& R = ring(order);
  for (const auto& [e, c] : t_) {
    IVec p(std::max<std::size_t>(c.size() * step, R.deg), 0);
    for (std::size_t j = 0; j < c.size(); ++j) p[j * step] = c[j];
    IVec r = reduce(p, R);
    if (!all_zero(r)) out.t_[e] = std::move(r);
  }
  return out;
}

Cyclotomic Laurent::coefficient(int exponent) const {
  auto it = t_.find(exponent);
  if (it == t_.end()) return Cyclotomic(0);
  std::vector<std::int64_t> counts(n_, 0);
  for (std::size_t j = 0; j < it->second.size(); ++j) counts[j] = it->second[j];
  return Cyclotomic::from_counts(n_, counts);
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  r.n_ = n_;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.n_ != n_) {
    const int m = int(lcm64(n_, o.n_));
    return *this = promote(m) + o.promote(m);
  }
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
      continue;
    }
    for (std::size_t j = 0; j < c.size(); ++j) it->second[j] = checked_add(it->second[j], c[j]);
    if (all_zero(it->second)) t_.erase(it);
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.t_)
    for (auto& x : c) x = checked_mul(x, -1);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (o.n_ != n_) {
    const int m = int(lcm64(n_, o.n_));
    return promote(m) * o.promote(m);
  }
  const CycloRing& R = ring(n_);
  Laurent r;
  r.n_ = n_;
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) {
      Laurent term;
      term.n_ = n_;
      IVec p = ring_mul(x, y, R);
      if (all_zero(p)) continue;
      term.t_.emplace(a + b, std::move(p));
      r += term;
    }
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (n_ == o.n_) return t_ == o.t_;
  const int m = int(lcm64(n_, o.n_));
  return promote(m).t_ == o.promote(m).t_;
}

std::string Laurent::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    (void)c;
    if (!first) os << " + ";
    first = false;
    os << "(" << coefficient(k).to_string() << ")";
    if (k != 0) os << "·v^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> all_positive(const RootDatum& d) {
  std::vector<int> p(d.num_positive());
  for (int i = 0; i < d.num_positive(); ++i) p[i] = i;
  return p;
}

}  // namespace

CoxeterRealization CoxeterRealization::full(std::shared_ptr<const ExtendedAffineWeyl> E) {
  CoxeterRealization R;
  R.kind_ = Kind::Full;
  R.E_ = E;
  for (int a = 0; a < E->num_simple_affine(); ++a) {
    R.gens_.push_back(E->simple_reflection(a));
    R.walls_.push_back(E->simple_affine_roots()[a]);
  }
  for (const auto& w : E->omega())
    if (!(w == E->identity())) R.omega_gens_.push_back(w);
  for (const auto& z : E->central_lattice()) R.omega_gens_.push_back(E->translation(z));
  R.positive_ = all_positive(E->datum());
  for (int w = 0; w < E->weyl().size(); ++w) R.finite_.push_back(w);
  R.point_ = E->generic_point();
  return R;
}

CoxeterRealization CoxeterRealization::derived(std::shared_ptr<const ExtendedAffineWeyl> E, const std::vector<int>& J,
                                               bool relax) {
  CoxeterRealization R;
  R.kind_ = Kind::Derived;
  R.E_ = E;
  auto D = std::make_shared<DerivedSystem>(E->derived_affine_system(J, relax));
  R.gens_ = D->generators;
  for (int a : D->delta_f) R.walls_.push_back(E->simple_affine_roots()[a]);
  for (const auto& w : D->omega_reps)
    if (!(w == E->identity())) R.omega_gens_.push_back(w);
  for (const auto& z : D->omega_lattice) R.omega_gens_.push_back(E->translation(z));
  R.point_ = D->facet_point;
  R.derived_ = D;
  return R;
}

CoxeterRealization CoxeterRealization::subsystem(std::shared_ptr<const ExtendedAffineWeyl> E,
                                                 const std::vector<int>& roots,
                                                 const std::vector<int>& finite_group) {
  CoxeterRealization R;
  R.kind_ = Kind::Subsystem;
  R.E_ = E;
  const RootDatum& d = E->datum();
  const WeylGroup& W = E->weyl();
  const std::set<int> rs(roots.begin(), roots.end());
  for (int r : roots) {
    if (!rs.count(d.negative(r))) throw InvalidInput("root subsystem is not closed under negation");
    if (d.is_positive(r)) R.positive_.push_back(r);
  }
  std::sort(R.positive_.begin(), R.positive_.end());
  R.finite_ = finite_group;
  std::sort(R.finite_.begin(), R.finite_.end());
  for (int r : roots)
    if (!std::binary_search(R.finite_.begin(), R.finite_.end(), W.reflection(r)))
      throw InvalidInput("finite group does not contain W(R′)");

  // Simple roots of R′⁺: those whose reflection permutes R′⁺ ∖ {α}.
  std::vector<int> simple;
  for (int a : R.positive_) {
    bool ok = true;
    for (int b : R.positive_)
      if (b != a && !d.is_positive(W.root_image(W.reflection(a), b))) ok = false;
    if (ok) simple.push_back(a);
  }
  // Components of R′ by non-orthogonality of simple roots; the highest root of each has maximal height.
  std::vector<int> comp(simple.size(), -1);
  int nc = 0;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < simple.size(); ++b)
        if (comp[b] < 0 && dot(d.root(simple[a]), d.coroot(simple[b])) != 0) {
          comp[b] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  for (int a : simple) {
    R.gens_.push_back(E->reflection({a, 0}));
    R.walls_.push_back({a, 0});
  }
  for (int c = 0; c < nc; ++c) {
    int best = -1;
    for (int a : R.positive_) {
      // A root of R′⁺ lies in component c iff it pairs nontrivially with some simple coroot of c.
      bool in_c = false;
      for (std::size_t i = 0; i < simple.size(); ++i)
        if (comp[i] == c && dot(d.root(a), d.coroot(simple[i])) != 0) in_c = true;
      if (!in_c) continue;
      if (best < 0 || d.height(a) > d.height(best)) best = a;
    }
    ensure(best >= 0, "component without roots");
    const AffineRoot wall{d.negative(best), 1};
    R.gens_.push_back(E->reflection(wall));
    R.walls_.push_back(wall);
  }
  R.point_ = E->generic_point();

  // Ω′ is generated by the length-zero parts of lattice translations and of the finite group.
  std::vector<ExtAffineElement> candidates;
  for (int i = 0; i < d.rank(); ++i) {
    IVec e(d.rank(), 0);
    e[i] = 1;
    candidates.push_back(E->translation(e));
  }
  for (int w : R.finite_) candidates.push_back(E->finite(w));
  std::set<ExtAffineElement, ExtAffineLess> seen;
  for (const auto& x : candidates) {
    const ExtAffineElement w = R.decompose(x).omega;
    if (!(w == E->identity()) && seen.insert(w).second) R.omega_gens_.push_back(w);
  }
  return R;
}

bool CoxeterRealization::contains(const ExtAffineElement& x) const {
  switch (kind_) {
    case Kind::Full: return true;
    case Kind::Derived: return E_->stabilizes(x, derived_->J);
    case Kind::Subsystem: return std::binary_search(finite_.begin(), finite_.end(), x.w);
  }
  return false;
}

bool CoxeterRealization::is_left_descent(const ExtAffineElement& x, int s) const {
  if (kind_ == Kind::Derived) return derived_->is_left_descent(*E_, x, s);
  return E_->eval(walls_[s], E_->act(x, point_)) < 0;
}

const CoxeterRealization::Decomposition& CoxeterRealization::decompose(const ExtAffineElement& x) const {
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  if (!contains(x)) throw InvalidInput("element is not in the group of the realization");
  Decomposition dec{{}, x};
  for (;;) {
    int found = -1;
    for (int s = 0; s < size() && found < 0; ++s)
      if (is_left_descent(dec.omega, s)) found = s;
    if (found < 0) break;
    if (dec.word.size() >= max_length) throw LengthGuard("element exceeds the length guard");
    dec.word.push_back(found);
    dec.omega = E_->mul(gens_[found], dec.omega);
  }
  if (kind_ == Kind::Derived && !derived_->in_omega(*E_, dec.omega))
    throw DecompositionFailure("remainder of a derived decomposition is not in Ω(J)");
  return cache_.emplace(x, std::move(dec)).first->second;
}

int CoxeterRealization::braid_order(int s, int t, int bound) const {
  const ExtAffineElement st = E_->mul(gens_[s], gens_[t]);
  ExtAffineElement p = st;
  for (int k = 1; k <= bound; ++k) {
    if (p == E_->identity()) return k;
    p = E_->mul(p, st);
  }
  return 0;
}

std::optional<int> CoxeterRealization::find_generator(const ExtAffineElement& x) const {
  for (int s = 0; s < size(); ++s)
    if (gens_[s] == x) return s;
  return std::nullopt;
}

bool CoxeterRealization::is_dominant(const IVec& lambda) const {
  for (int a : positive_)
    if (dot(E_->datum().root(a), lambda) < 0) return false;
  return true;
}

IVec CoxeterRealization::regular_dominant() const {
  IVec r(E_->datum().rank(), 0);
  for (int a : positive_) r = add(r, E_->datum().coroot(a));
  return r;
}

// ---------------------------------------------------------------------------

HeckeElement add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [x, c] : b) {
    auto it = r.find(x);
    if (it == r.end()) {
      r.emplace(x, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

HeckeElement scale(const Laurent& c, const HeckeElement& a) {
  HeckeElement r;
  for (const auto& [x, d] : a) {
    Laurent p = c * d;
    if (!p.is_zero()) r.emplace(x, std::move(p));
  }
  return r;
}

HeckeElement sub(const HeckeElement& a, const HeckeElement& b) { return add(a, scale(Laurent(-1), b)); }

bool is_zero(const HeckeElement& a) { return a.empty(); }

std::string to_string(const HeckeElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : a) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]·T(";
    for (std::size_t i = 0; i < x.lambda.size(); ++i) os << (i ? "," : "") << x.lambda[i];
    os << ";w" << x.w << ")";
  }
  return os.str();
}

namespace {

void accumulate(HeckeElement& r, const ExtAffineElement& x, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = r.find(x);
  if (it == r.end()) {
    r.emplace(x, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
}

}  // namespace

ExtAffineHeckeAlgebra::ExtAffineHeckeAlgebra(CoxeterRealization R, std::vector<int> exponents, OmegaCocycle mu,
                                             int root_order)
    : R_(std::move(R)), e_(std::move(exponents)), mu_(std::move(mu)), root_order_(root_order) {
  if (int(e_.size()) != R_.size()) throw InvalidInput("one parameter exponent per generator is required");
  const ExtendedAffineWeyl& E = R_.group();
  for (const auto& w : R_.omega_generators()) {
    const ExtAffineElement wi = E.inv(w);
    for (int s = 0; s < R_.size(); ++s) {
      const auto t = R_.find_generator(E.mul(E.mul(w, R_.generator(s)), wi));
      if (!t) throw InvariantViolation("length-zero element does not normalize the generators");
      if (e_[*t] != e_[s]) throw InvalidInput("parameters are not invariant under the length-zero group");
    }
  }
}

Laurent ExtAffineHeckeAlgebra::mu_phase(const ExtAffineElement& a, const ExtAffineElement& b) const {
  if (!mu_) return Laurent(1);
  const Rational t = mod1(mu_(a, b));
  if (t == 0) return Laurent(1);
  if (!is_integer(t * root_order_)) throw InvalidInput("cocycle value outside (1/root_order)ℤ/ℤ");
  return Laurent::zeta(root_order_, to_i64(t * root_order_));
}

HeckeElement ExtAffineHeckeAlgebra::T(const ExtAffineElement& x, const Laurent& c) const {
  R_.decompose(x);
  HeckeElement r;
  accumulate(r, x, c);
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::left_mul_generator(int s, const HeckeElement& a) const {
  const ExtendedAffineWeyl& E = R_.group();
  const int k = 2 * e_[s];
  HeckeElement r;
  for (const auto& [w, c] : a) {
    const ExtAffineElement sw = E.mul(R_.generator(s), w);
    if (R_.is_left_descent(w, s)) {
      accumulate(r, sw, c.shifted(k));
      accumulate(r, w, c.shifted(k) - c);
    } else {
      accumulate(r, sw, c);
    }
  }
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::left_mul_omega(const ExtAffineElement& w, const HeckeElement& a) const {
  const ExtendedAffineWeyl& E = R_.group();
  HeckeElement r;
  for (const auto& [x, c] : a) accumulate(r, E.mul(w, x), mu_phase(w, R_.decompose(x).omega) * c);
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::right_mul_generator(const HeckeElement& a, int s) const {
  // ℓ(ws) < ℓ(w) iff s is a left descent of w⁻¹.
  const ExtendedAffineWeyl& E = R_.group();
  const int k = 2 * e_[s];
  HeckeElement r;
  for (const auto& [w, c] : a) {
    const ExtAffineElement ws = E.mul(w, R_.generator(s));
    if (R_.is_left_descent(E.inv(w), s)) {
      accumulate(r, ws, c.shifted(k));
      accumulate(r, w, c.shifted(k) - c);
    } else {
      accumulate(r, ws, c);
    }
  }
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::right_mul_omega(const HeckeElement& a, const ExtAffineElement& w) const {
  const ExtendedAffineWeyl& E = R_.group();
  HeckeElement r;
  for (const auto& [x, c] : a) accumulate(r, E.mul(x, w), mu_phase(R_.decompose(x).omega, w) * c);
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (const auto& [x, c] : a) {
    const auto& dec = R_.decompose(x);
    HeckeElement p = left_mul_omega(dec.omega, b);
    for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) p = left_mul_generator(*it, p);
    r = add(r, scale(c, p));
  }
  return r;
}

HeckeElement ExtAffineHeckeAlgebra::generator_inverse(int s) const {
  // T_s⁻¹ = q_s⁻¹ T_s + (q_s⁻¹ − 1) T_e.
  const Laurent qi = Laurent::v(-2 * e_[s]);
  return add(T(R_.generator(s), qi), T(R_.group().identity(), qi - Laurent(1)));
}

HeckeElement ExtAffineHeckeAlgebra::basis_inverse(const ExtAffineElement& x) const {
  const ExtendedAffineWeyl& E = R_.group();
  const auto dec = R_.decompose(x);
  const ExtAffineElement wi = E.inv(dec.omega);
  // T_{ω⁻¹} T_ω = e(μ(ω⁻¹, ω)) T_e.
  Laurent inv_phase(1);
  if (mu_) inv_phase = Laurent::zeta(root_order_, -to_i64(mod1(mu_(wi, dec.omega)) * root_order_));
  HeckeElement r = T(wi, inv_phase);
  const Laurent one(1);
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) {
    // r·T_s⁻¹ = q_s⁻¹ (r T_s) + (q_s⁻¹ − 1) r.
    const Laurent qi = Laurent::v(-2 * e_[*it]);
    r = add(scale(qi, right_mul_generator(r, *it)), scale(qi - one, r));
  }
  return r;
}

int ExtAffineHeckeAlgebra::weight(const ExtAffineElement& x) const {
  int w = 0;
  for (int s : R_.decompose(x).word) w += e_[s];
  return w;
}

HeckeElement ExtAffineHeckeAlgebra::normalized(const ExtAffineElement& x) const {
  return T(x, Laurent::v(-weight(x)));
}

IVec ExtAffineHeckeAlgebra::default_shift(const IVec& lambda) const {
  const ExtendedAffineWeyl& E = R_.group();
  const int n = E.datum().rank();
  if (R_.is_dominant(lambda)) return IVec(n, 0);
  for (int B = 1; B <= 6; ++B) {
    std::optional<IVec> best;
    int best_len = 0;
    IVec c(n, -B);
    for (;;) {
      if (R_.is_dominant(c) && R_.is_dominant(add(lambda, c))) {
        const int len = E.length(E.translation(c));
        if (!best || len < best_len) {
          best = c;
          best_len = len;
        }
      }
      int i = 0;
      while (i < n && c[i] == B) c[i++] = -B;
      if (i == n) break;
      ++c[i];
    }
    if (best) return *best;
  }
  // Start from a multiple of ρ∨, then descend along moves ±e_i ± e_j while both ends stay dominant.
  // On dominant c the translation length is linear, so this only shortens the shift.
  const IVec rho = R_.regular_dominant();
  std::optional<IVec> c;
  for (int m = 1; m < 1000 && !c; ++m)
    if (R_.is_dominant(add(lambda, scale(m, rho)))) c = scale(m, rho);
  if (!c) throw NoConvergence("no dominant shift found");
  std::vector<IVec> moves;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int a : {-1, 1})
        for (int b : {-1, 1}) {
          IVec d(n, 0);
          d[i] += a;
          if (j != i) d[j] += b;
          else if (b < 0) continue;
          moves.push_back(d);
        }
  int len = E.length(E.translation(*c));
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& d : moves) {
      const IVec c2 = add(*c, d);
      if (!R_.is_dominant(c2) || !R_.is_dominant(add(lambda, c2))) continue;
      const int l2 = E.length(E.translation(c2));
      if (l2 < len) {
        c = c2, len = l2, improved = true;
        break;
      }
    }
  }
  return *c;
}

HeckeElement ExtAffineHeckeAlgebra::bernstein_theta(const IVec& lambda, std::optional<IVec> lambda2) const {
  if (R_.kind() == CoxeterRealization::Kind::Derived)
    throw InvalidInput("Bernstein elements need a realization with a linear root system");
  const ExtendedAffineWeyl& E = R_.group();
  const IVec l2 = lambda2 ? *lambda2 : default_shift(lambda);
  const IVec l1 = add(lambda, l2);
  if (!R_.is_dominant(l1) || !R_.is_dominant(l2)) throw InvalidInput("λ₂ does not give a dominant decomposition");
  const ExtAffineElement t2 = E.translation(l2);
  HeckeElement inv2 = scale(Laurent::v(weight(t2)), basis_inverse(t2));
  return mul(normalized(E.translation(l1)), inv2);
}

HeckeElement ExtAffineHeckeAlgebra::orbit_sum(const IVec& lambda) const {
  const WeylGroup& W = R_.group().weyl();
  std::set<IVec> orbit;
  for (int w : R_.finite_group()) orbit.insert(W.act_y(w, lambda));
  HeckeElement r;
  for (const auto& x : orbit) r = add(r, bernstein_theta(x));
  return r;
}

ExtAffineHeckeAlgebra::CentralityWitness ExtAffineHeckeAlgebra::verify_central(const HeckeElement& z) const {
  CentralityWitness out;
  for (int s = 0; s < R_.size() && out.central; ++s) {
    const HeckeElement g = generator(s);
    if (mul(g, z) != mul(z, g)) {
      out.central = false;
      out.failing_generator = "T_s" + std::to_string(s);
    }
  }
  for (std::size_t i = 0; i < R_.omega_generators().size() && out.central; ++i) {
    const HeckeElement g = T(R_.omega_generators()[i]);
    if (mul(g, z) != mul(z, g)) {
      out.central = false;
      out.failing_generator = "T_omega" + std::to_string(i);
    }
  }
  return out;
}

ExtAffineHeckeAlgebra::RelationReport ExtAffineHeckeAlgebra::check_relations(int max_word) const {
  const ExtendedAffineWeyl& E = R_.group();
  RelationReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.ok) rep.failure = what;
    rep.ok = false;
  };
  const HeckeElement one = unit();
  for (int s = 0; s < R_.size(); ++s) {
    const HeckeElement g = generator(s);
    const HeckeElement lhs = mul(add(g, one), sub(g, scale(Laurent::v(2 * e_[s]), one)));
    ++rep.quadratic;
    if (!is_zero(lhs)) fail("quadratic relation for s" + std::to_string(s));
    if (!is_zero(sub(mul(g, generator_inverse(s)), one))) fail("T_s T_s⁻¹ ≠ 1 for s" + std::to_string(s));
  }
  for (int s = 0; s < R_.size(); ++s)
    for (int t = s + 1; t < R_.size(); ++t) {
      const int m = R_.braid_order(s, t);
      if (m == 0) continue;
      HeckeElement a = one, b = one;
      for (int k = 0; k < m; ++k) {
        a = mul(a, generator(k % 2 == 0 ? s : t));
        b = mul(b, generator(k % 2 == 0 ? t : s));
      }
      ++rep.braid;
      if (a != b) fail("braid relation for s" + std::to_string(s) + ", s" + std::to_string(t));
    }
  for (const auto& w : R_.omega_generators()) {
    const HeckeElement Tw = T(w), Twi = basis_inverse(w);
    if (!is_zero(sub(mul(Tw, Twi), one))) fail("T_ω T_ω⁻¹ ≠ 1");
    for (int s = 0; s < R_.size(); ++s) {
      const auto t = R_.find_generator(E.mul(E.mul(w, R_.generator(s)), E.inv(w)));
      ++rep.omega;
      if (!t || mul(mul(Tw, generator(s)), Twi) != generator(*t)) fail("Ω-conjugation of s" + std::to_string(s));
    }
  }

  // Every word in generators and length-zero generators, multiplied from the left and from the right.
  std::vector<HeckeElement> letters;
  for (int s = 0; s < R_.size(); ++s) letters.push_back(generator(s));
  for (const auto& w : R_.omega_generators()) letters.push_back(T(w));
  const int k = int(letters.size());
  std::map<std::vector<int>, HeckeElement> from_right{{{}, one}};
  std::vector<std::pair<std::vector<int>, HeckeElement>> layer{{{}, one}};
  for (int len = 1; len <= max_word && k > 0; ++len) {
    std::vector<std::pair<std::vector<int>, HeckeElement>> next;
    for (const auto& [word, left_product] : layer)
      for (int a = 0; a < k; ++a) {
        std::vector<int> w2 = word;
        w2.push_back(a);
        HeckeElement lp = a < R_.size() ? right_mul_generator(left_product, a)
                                        : right_mul_omega(left_product, R_.omega_generators()[a - R_.size()]);
        // Right-nested product T_{a_1}(T_{a_2}(⋯)).
        std::vector<int> suffix(w2.begin() + 1, w2.end());
        HeckeElement rp = mul(letters[w2[0]], from_right.at(suffix));
        from_right.emplace(w2, rp);
        ++rep.words;
        if (lp != rp) fail("associativity on a word of length " + std::to_string(len));
        next.emplace_back(std::move(w2), std::move(lp));
      }
    layer = std::move(next);
  }
  return rep;
}

BernsteinPair bernstein_pair(int e_fin, int e_aff) {
  return {Rational(e_fin + e_aff, 2), Rational(e_fin - e_aff, 2)};
}

}  // namespace dzb
