#include "dzb/affine_weyl.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace dzb {

std::size_t ExtAffineHash::operator()(const ExtAffineElement& x) const {
  return IVecHash{}(x.lambda) * 1000003u ^ std::hash<int>{}(x.w);
}

namespace {

// Particular integer solution of A λ = b from a precomputed Smith form, free coordinates zero.
std::optional<IVec> solve_with(const SmithForm& s, int n, const IVec& b) {
  const IVec y = s.U * b;
  IVec t(n, 0);
  for (int i = 0; i < int(y.size()); ++i) {
    const std::int64_t d = s.d(i);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    if (y[i] % d != 0) return std::nullopt;
    if (i < n) t[i] = y[i] / d;
  }
  return s.V * t;
}

std::vector<IVec> kernel_of(const IMat& A, int n) {
  if (A.rows() == 0) {
    std::vector<IVec> basis;
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return solve_integer(A, IVec(A.rows(), 0))->kernel;
}

}  // namespace

ExtendedAffineWeyl::ExtendedAffineWeyl(const RootDatum& datum, std::size_t bound) : W_(datum, bound) {
  const RootDatum& d = W_.datum();
  const int r = d.semisimple_rank(), n = d.rank();
  for (int i = 0; i < r; ++i) {
    delta_.push_back({d.simple_index(i), 0});
    comp_.push_back(d.component_of_simple(i));
    ncoef_.push_back(d.root_coefficients(d.highest_root(d.component_of_simple(i)))[i]);
  }
  for (int c = 0; c < int(d.components().size()); ++c) {
    delta_.push_back({d.negative(d.highest_root(c)), 1});
    comp_.push_back(c);
    ncoef_.push_back(1);
  }
  simple_root_rows_ = IMat::from_rows(d.simple_roots(), n);
  // Generic interior point: every simple affine root takes the value 1/h on its component.
  p_.assign(n, Rational(0));
  if (r > 0) {
    QMat A = to_q(simple_root_rows_);
    QVec b(r);
    for (int i = 0; i < r; ++i) {
      std::int64_t h = 1;
      for (int j : d.components()[comp_[i]]) h += ncoef_[j];
      b[i] = Rational(1, h);
    }
    p_ = solve_rational(A, b).value();
  }
  center_ = kernel_of(simple_root_rows_, n);
  std::vector<IVec> gens = d.simple_coroots();
  gens.insert(gens.end(), center_.begin(), center_.end());
  coroot_mod_center_ = LatticeQuotient(IMat::from_cols(gens, n));
  build_omega();
}

Rational ExtendedAffineWeyl::eval(const AffineRoot& a, const QVec& x) const {
  return dot(x, datum().root(a.root)) + a.k;
}

ExtAffineElement ExtendedAffineWeyl::identity() const { return {IVec(datum().rank(), 0), W_.identity()}; }

ExtAffineElement ExtendedAffineWeyl::finite(int w) const { return {IVec(datum().rank(), 0), w}; }

ExtAffineElement ExtendedAffineWeyl::reflection(const AffineRoot& a) const {
  return {scale(-a.k, datum().coroot(a.root)), W_.reflection(a.root)};
}

ExtAffineElement ExtendedAffineWeyl::mul(const ExtAffineElement& x, const ExtAffineElement& y) const {
  return {add(x.lambda, W_.act_y(x.w, y.lambda)), W_.mul(x.w, y.w)};
}

ExtAffineElement ExtendedAffineWeyl::inv(const ExtAffineElement& x) const {
  const int wi = W_.inv(x.w);
  return {neg(W_.act_y(wi, x.lambda)), wi};
}

ExtAffineElement ExtendedAffineWeyl::power(const ExtAffineElement& x, int n) const {
  ExtAffineElement base = n < 0 ? inv(x) : x, out = identity();
  for (int i = 0; i < std::abs(n); ++i) out = mul(out, base);
  return out;
}

QVec ExtendedAffineWeyl::act(const ExtAffineElement& x, const QVec& point) const {
  QVec y = W_.act_y(x.w, point);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += x.lambda[i];
  return y;
}

AffineRoot ExtendedAffineWeyl::act(const ExtAffineElement& x, const AffineRoot& a) const {
  const int img = W_.root_image(x.w, a.root);
  return {img, a.k - dot(datum().root(img), x.lambda)};
}

int ExtendedAffineWeyl::length(const ExtAffineElement& x) const {
  const RootDatum& d = datum();
  const int wi = W_.inv(x.w);
  std::int64_t total = 0;
  for (int j = 0; j < d.num_positive(); ++j) {
    const std::int64_t ind = d.is_positive(W_.root_image(wi, j)) ? 0 : 1;
    total += std::abs(dot(d.root(j), x.lambda) - ind);
  }
  return int(total);
}

bool ExtendedAffineWeyl::is_left_descent(const ExtAffineElement& x, int a) const {
  return eval(delta_[a], act(x, p_)) < 0;
}

std::vector<int> ExtendedAffineWeyl::reduced_word(const ExtAffineElement& x, ExtAffineElement* omega) const {
  std::vector<int> word;
  ExtAffineElement y = x;
  const int len = length(x);
  for (int step = 0; step <= len; ++step) {
    int found = -1;
    for (int a = 0; a < num_simple_affine(); ++a)
      if (is_left_descent(y, a)) {
        found = a;
        break;
      }
    if (found < 0) break;
    word.push_back(found);
    y = mul(simple_reflection(found), y);
  }
  ensure(int(word.size()) == len && length(y) == 0, "descent reduction does not match the length function");
  if (omega) *omega = y;
  return word;
}

ExtAffineElement ExtendedAffineWeyl::canonical_mod_center(const ExtAffineElement& x) const {
  if (datum().semisimple_rank() == 0) return {IVec(datum().rank(), 0), x.w};
  const IVec b = simple_root_rows_ * x.lambda;
  return {solve_integer(simple_root_rows_, b)->particular, x.w};
}

bool ExtendedAffineWeyl::in_coroot_lattice_mod_center(const IVec& lambda) const {
  return coroot_mod_center_.contains(lambda);
}

std::optional<int> ExtendedAffineWeyl::find_simple_affine(const AffineRoot& a) const {
  for (int i = 0; i < num_simple_affine(); ++i)
    if (delta_[i] == a) return i;
  return std::nullopt;
}

std::vector<int> ExtendedAffineWeyl::omega_permutation(const ExtAffineElement& w) const {
  std::vector<int> perm;
  for (const auto& a : delta_) {
    auto img = find_simple_affine(act(w, a));
    if (!img) throw InvariantViolation("length-zero element does not permute the simple affine roots");
    perm.push_back(*img);
  }
  return perm;
}

void ExtendedAffineWeyl::build_omega() {
  const RootDatum& d = datum();
  const int r = d.semisimple_rank(), n = d.rank();
  omega_.clear();
  if (r == 0) {
    omega_.push_back(identity());
    return;
  }
  const SmithForm s = smith_normal_form(simple_root_rows_);
  for (int w = 0; w < W_.size(); ++w) {
    // ℓ(t_λ w) = 0 forces ⟨α_i, λ⟩ = [w⁻¹α_i < 0] on the simple roots.
    IVec b(r);
    for (int i = 0; i < r; ++i) b[i] = d.is_positive(W_.root_image(W_.inv(w), d.simple_index(i))) ? 0 : 1;
    auto lam = solve_with(s, n, b);
    if (!lam) continue;
    ExtAffineElement x{*lam, w};
    if (length(x) == 0) omega_.push_back(canonical_mod_center(x));
  }
  ensure(!omega_.empty() && omega_[0] == identity(), "identity missing from the length-zero subgroup");
  std::unordered_set<ExtAffineElement, ExtAffineHash> set(omega_.begin(), omega_.end());
  for (const auto& a : omega_) {
    omega_permutation(a);
    for (const auto& b : omega_) {
      ensure(mul(a, b) == mul(b, a), "length-zero subgroup is not abelian");
      ensure(set.count(canonical_mod_center(mul(a, b))) == 1, "length-zero elements not closed under products");
    }
  }
  // W = W_aff ⋊ Ω on generators: each strips to a length-zero remainder lying in Ω.
  std::vector<ExtAffineElement> gens;
  for (int i = 0; i < r; ++i) gens.push_back(finite(W_.simple_reflection(i)));
  for (int j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    gens.push_back(translation(e));
  }
  for (const auto& g : gens) {
    ExtAffineElement om;
    reduced_word(g, &om);
    ensure(set.count(canonical_mod_center(om)) == 1, "generator does not decompose as W_aff · Ω");
  }
}

ExtendedAffineWeyl::Reduction ExtendedAffineWeyl::alcove_reduce(const QVec& x, std::size_t max_steps) const {
  Reduction red{x, identity()};
  for (std::size_t step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int a = 0; a < num_simple_affine(); ++a)
      if (eval(delta_[a], red.point) < 0) {
        found = a;
        break;
      }
    if (found < 0) return red;
    const ExtAffineElement s = simple_reflection(found);
    red.point = act(s, red.point);
    red.element = mul(s, red.element);
  }
  throw NoConvergence("alcove reduction did not terminate");
}

std::vector<ExtAffineElement> ExtendedAffineWeyl::parabolic(const std::vector<int>& gens, std::size_t bound) const {
  std::vector<ExtAffineElement> out{identity()};
  std::unordered_set<ExtAffineElement, ExtAffineHash> seen{identity()};
  for (std::size_t b = 0; b < out.size(); ++b)
    for (int g : gens) {
      ExtAffineElement x = mul(out[b], simple_reflection(g));
      if (seen.insert(x).second) {
        if (out.size() >= bound) throw GroupTooLarge("parabolic subgroup exceeds the bound");
        out.push_back(std::move(x));
      }
    }
  return out;
}

ExtAffineElement ExtendedAffineWeyl::longest(const std::vector<int>& gens) const {
  ExtAffineElement best = identity();
  int bl = 0;
  for (const auto& x : parabolic(gens)) {
    const int l = length(x);
    if (l > bl) bl = l, best = x;
  }
  return best;
}

namespace {

void check_finite_type(const ExtendedAffineWeyl& E, const std::vector<int>& gens) {
  std::vector<int> count(E.datum().components().size(), 0);
  std::set<int> uniq(gens.begin(), gens.end());
  for (int a : uniq) {
    if (a < 0 || a >= E.num_simple_affine()) throw InvalidInput("facet index out of range");
    ++count[E.component_of(a)];
  }
  for (std::size_t c = 0; c < count.size(); ++c)
    if (count[c] == int(E.datum().components()[c].size()) + 1)
      throw InvalidInput("facet contains every simple affine root of a component");
}

}  // namespace

std::optional<ExtAffineElement> ExtendedAffineWeyl::r_element(int a, const std::vector<int>& J) const {
  std::vector<int> Ja = J;
  Ja.push_back(a);
  check_finite_type(*this, Ja);
  const ExtAffineElement wJa = longest(Ja);
  std::set<std::pair<int, std::int64_t>> negJ;
  for (int b : J) negJ.insert({negate(delta_[b]).root, negate(delta_[b]).k});
  for (int b : J) {
    const AffineRoot img = act(wJa, delta_[b]);
    if (!negJ.count({img.root, img.k})) return std::nullopt;
  }
  const ExtAffineElement v = mul(wJa, longest(J));
  ensure(mul(v, v) == identity(), "R-element is not an involution");
  return v;
}

bool ExtendedAffineWeyl::stabilizes(const ExtAffineElement& x, const std::vector<int>& J) const {
  for (int b : J) {
    auto img = find_simple_affine(act(x, delta_[b]));
    if (!img || std::find(J.begin(), J.end(), *img) == J.end()) return false;
  }
  return true;
}

QVec ExtendedAffineWeyl::facet_point(const std::vector<int>& J) const {
  check_finite_type(*this, J);
  const RootDatum& d = datum();
  const int r = d.semisimple_rank();
  if (r == 0) return QVec(d.rank(), Rational(0));
  std::vector<std::int64_t> mass(d.components().size(), 0);
  for (int a = 0; a < num_simple_affine(); ++a)
    if (std::find(J.begin(), J.end(), a) == J.end()) mass[comp_[a]] += ncoef_[a];
  QVec b(r);
  for (int i = 0; i < r; ++i)
    b[i] = std::find(J.begin(), J.end(), i) != J.end() ? Rational(0) : Rational(1, mass[comp_[i]]);
  return solve_rational(to_q(simple_root_rows_), b).value();
}

DerivedSystem ExtendedAffineWeyl::derived_affine_system(const std::vector<int>& J, bool relax) const {
  check_finite_type(*this, J);
  const RootDatum& d = datum();
  const int n = d.rank();
  DerivedSystem D;
  D.J = J;
  std::sort(D.J.begin(), D.J.end());
  std::vector<std::vector<std::pair<int, ExtAffineElement>>> per(d.components().size());
  for (int a = 0; a < num_simple_affine(); ++a) {
    if (std::binary_search(D.J.begin(), D.J.end(), a)) continue;
    if (auto v = r_element(a, D.J)) per[comp_[a]].push_back({a, *v});
  }
  for (const auto& c : per) {
    // Each α needs a partner α′ ≠ α with an R-element in the same simple factor.
    if (c.size() >= (relax ? 1u : 2u))
      for (const auto& [a, v] : c) D.delta_f.push_back(a), D.generators.push_back(v);
  }
  D.facet_point = facet_point(D.J);

  // Ω(J): elements mapping J to J and Δ_{f,aff} to Δ_{f,aff}.
  std::vector<int> S = D.J;
  S.insert(S.end(), D.delta_f.begin(), D.delta_f.end());
  std::vector<IVec> rows;
  for (int a : S) rows.push_back(d.root(delta_[a].root));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      ensure(delta_[S[i]].root != delta_[S[j]].root, "facet walls with equal linear parts");
  const IMat MS = IMat::from_rows(rows, n);
  D.omega_lattice = kernel_of(MS, n);
  auto canonical = [&](const IVec& lam) {
    if (S.empty()) return IVec(n, 0);
    return solve_integer(MS, MS * lam)->particular;
  };
  const std::size_t nJ = D.J.size();
  for (int w = 0; w < W_.size(); ++w) {
    IVec b;
    std::vector<IVec> img_rows;
    bool ok = true;
    for (std::size_t i = 0; i < S.size() && ok; ++i) {
      const int img = W_.root_image(w, delta_[S[i]].root);
      std::size_t j = 0;
      while (j < S.size() && delta_[S[j]].root != img) ++j;
      // π must preserve J.
      if (j == S.size() || ((i < nJ) != (j < nJ))) {
        ok = false;
        break;
      }
      img_rows.push_back(d.root(img));
      b.push_back(delta_[S[i]].k - delta_[S[j]].k);
    }
    if (!ok) continue;
    IVec lam(n, 0);
    if (!S.empty()) {
      auto sol = solve_integer(IMat::from_rows(img_rows, n), b);
      if (!sol) continue;
      lam = canonical(sol->particular);
    }
    D.omega_reps.push_back({lam, w});
  }
  for (const auto& om : D.omega_reps) ensure(D.in_omega(*this, om), "Ω(J) element does not preserve the facet walls");
  for (std::size_t i = 0; i < D.generators.size(); ++i)
    ensure(stabilizes(D.generators[i], D.J), "R-element does not normalize J");
  return D;
}

bool DerivedSystem::is_left_descent(const ExtendedAffineWeyl& E, const ExtAffineElement& x, int gen) const {
  return E.eval(E.simple_affine_roots()[delta_f[gen]], E.act(x, facet_point)) < 0;
}

bool DerivedSystem::in_omega(const ExtendedAffineWeyl& E, const ExtAffineElement& x) const {
  if (!E.stabilizes(x, J)) return false;
  for (int a : delta_f) {
    auto img = E.find_simple_affine(E.act(x, E.simple_affine_roots()[a]));
    if (!img || std::find(delta_f.begin(), delta_f.end(), *img) == delta_f.end()) return false;
  }
  return true;
}

std::optional<std::pair<std::vector<int>, ExtAffineElement>> DerivedSystem::decompose(const ExtendedAffineWeyl& E,
                                                                                      const ExtAffineElement& x,
                                                                                      std::size_t max_steps) const {
  if (!E.stabilizes(x, J)) return std::nullopt;
  std::vector<int> word;
  ExtAffineElement y = x;
  for (std::size_t step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int g = 0; g < int(delta_f.size()); ++g)
      if (is_left_descent(E, y, g)) {
        found = g;
        break;
      }
    if (found < 0) {
      if (!in_omega(E, y)) return std::nullopt;
      return std::make_pair(word, y);
    }
    word.push_back(found);
    y = E.mul(generators[found], y);
  }
  return std::nullopt;
}

PointwiseStabilizerCheck check_pointwise_stabilizer(const ExtendedAffineWeyl& E, const DerivedSystem& D) {
  const RootDatum& d = E.datum();
  const int n = d.rank();
  QMat JM;
  for (int a : D.J) JM.push_back(to_q(d.root(E.simple_affine_roots()[a].root)));
  std::vector<QVec> dirs;
  if (JM.empty()) {
    for (int i = 0; i < n; ++i) {
      QVec e(n, Rational(0));
      e[i] = 1;
      dirs.push_back(e);
    }
  } else {
    dirs = nullspace(JM);
  }
  PointwiseStabilizerCheck out;
  for (const auto& om : E.omega()) {
    bool fixes_dirs = true;
    for (const auto& u : dirs) fixes_dirs = fixes_dirs && E.weyl().act_y(om.w, u) == u;
    if (!fixes_dirs) continue;
    const QVec moved = E.act(om, D.facet_point);
    IVec z(n);
    bool integral = true;
    for (int i = 0; i < n && integral; ++i) {
      const Rational c = D.facet_point[i] - moved[i];
      integral = is_integer(c);
      if (integral) z[i] = to_i64(c);
    }
    if (!integral) continue;
    bool central = true;
    for (int j = 0; j < d.num_roots() && central; ++j) central = dot(d.root(j), z) == 0;
    if (!central) continue;
    out.elements.push_back({add(om.lambda, z), om.w});
  }
  std::vector<ExtAffineElement> gens = D.generators;
  gens.insert(gens.end(), D.omega_reps.begin(), D.omega_reps.end());
  for (const auto& l : D.omega_lattice) gens.push_back(E.translation(l));
  for (const auto& x : out.elements) {
    for (const auto& g : gens)
      if (!(E.mul(x, g) == E.mul(g, x))) out.centralizes = false;
    const bool trivial = x.w == E.weyl().identity() && E.in_coroot_lattice_mod_center(x.lambda) &&
                         E.canonical_mod_center(x) == E.identity();
    if (!trivial && E.in_coroot_lattice_mod_center(x.lambda)) out.meets_commutator_trivially = false;
  }
  return out;
}

}  // namespace dzb
