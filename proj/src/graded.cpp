#include "dzb/graded.hpp"

#include "dzb/errors.hpp"

#include <algorithm>
#include <set>

namespace dzb {

LambdaExponents lambda_exponents(const Rational& q, const Rational& q_star, std::int64_t qF) {
  const int e = exact_log(q, qF), e_star = exact_log(q_star, qF);
  return {Rational(e + e_star), Rational(e - e_star)};
}

Rational k_parameter(const Rational& q, const Rational& q_star, int sign, std::int64_t qF) {
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  const auto [lambda, lambda_star] = lambda_exponents(q, q_star, qF);
  const Rational k = 2 * Rational(exact_log(sign == 1 ? q : q_star, qF));
  ensure(k == lambda + sign * lambda_star, "k_alpha disagrees with lambda + sign*lambda_star");
  return k;
}

namespace {

void add_term(Poly& p, const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly monomial(const Monomial& m) { return Poly{{m, Cyclotomic(1)}}; }

Monomial unit_exponent(int n, int i) {
  Monomial m(std::size_t(n) + 1, 0);
  m[i] = 1;
  return m;
}

// All exponent vectors in x_1..x_n (r exponent 0) of total degree ≤ d.
std::vector<Monomial> monomials_up_to(int n, int d) {
  std::vector<Monomial> out{Monomial(std::size_t(n) + 1, 0)};
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      std::int64_t used = 0;
      for (int j = 0; j < i; ++j) used += m[j];
      for (std::int64_t a = 0; used + a <= d; ++a) {
        Monomial x = m;
        x[i] = a;
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) add_term(out, m, c);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      add_term(out, m, ca * cb);
    }
  return out;
}

Poly poly_scale(const Cyclotomic& c, const Poly& a) {
  Poly out;
  for (const auto& [m, x] : a) add_term(out, m, c * x);
  return out;
}

Poly poly_const(const Cyclotomic& c, int n) {
  Poly out;
  add_term(out, Monomial(std::size_t(n) + 1, 0), c);
  return out;
}

Poly poly_linear(const IVec& xi) {
  const int n = int(xi.size());
  Poly out;
  for (int i = 0; i < n; ++i) add_term(out, unit_exponent(n, i), Cyclotomic(int(xi[i])));
  return out;
}

Poly poly_r(int n) { return monomial(unit_exponent(n, n)); }

int degree(const Poly& p) {
  std::int64_t d = -1;
  for (const auto& [m, c] : p) {
    std::int64_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return int(d);
}

GradedHeckeAlgebra::GradedHeckeAlgebra(const RootDatum& datum, std::vector<int> roots, std::map<int, Rational> k,
                                       std::vector<int> gamma, std::vector<Rational> natural)
    : W_(std::make_shared<WeylGroup>(datum)), roots_(std::move(roots)), gamma_(std::move(gamma)), k_(std::move(k)),
      natural_(std::move(natural)) {
  const auto& W = *W_;
  const auto& d = W.datum();
  std::sort(roots_.begin(), roots_.end());
  const std::set<int> rset(roots_.begin(), roots_.end());
  for (int r : roots_) {
    if (r < 0 || r >= d.num_roots()) throw InvalidInput("root index out of range");
    if (!rset.count(d.negative(r))) throw InvalidInput("root set is not symmetric");
    if (!k_.count(r)) throw InvalidInput("missing k parameter for root " + std::to_string(r));
  }
  for (const auto& [r, v] : k_)
    if (!rset.count(r)) throw InvalidInput("k parameter given for a root outside the subsystem");
  for (int a : roots_)
    if (d.is_positive(a)) {
      bool simple = true;
      for (int b : roots_)
        if (b != a && d.is_positive(b) && !d.is_positive(W.root_image(W.reflection(a), b))) simple = false;
      if (simple) simple_.push_back(a);
    }

  if (gamma_.empty()) gamma_ = {W.identity()};
  if (W.generate(gamma_) != [&] { auto g = gamma_; std::sort(g.begin(), g.end()); return g; }())
    throw InvalidInput("gamma is not a subgroup");
  if (gamma_.front() != W.identity()) {
    auto it = std::find(gamma_.begin(), gamma_.end(), W.identity());
    std::rotate(gamma_.begin(), it, it + 1);
  }
  for (int g : gamma_)
    for (int a : roots_)
      if (d.is_positive(a) && (!rset.count(W.root_image(g, a)) || !d.is_positive(W.root_image(g, a))))
        throw InvalidInput("gamma does not normalize the positive subsystem");

  std::vector<int> gens = gamma_;
  for (int r : roots_) gens.push_back(W.reflection(r));
  group_ = W.generate(gens);
  for (int w : group_)
    for (int a : roots_)
      if (k_.at(W.root_image(w, a)) != k_.at(a)) throw InvalidInput("k parameters are not invariant");
  const std::size_t g = gamma_.size();
  if (group_.size() % g != 0) throw DecompositionFailure("group order not divisible by |gamma|");
  for (int w : group_) {
    auto pos = std::find(gamma_.begin(), gamma_.end(), split(w).second);
    ensure(pos != gamma_.end(), "element does not factor through gamma");
    gamma_of_[w] = int(pos - gamma_.begin());
  }

  if (natural_.empty()) natural_.assign(g * g, Rational(0));
  if (natural_.size() != g * g) throw InvalidInput("natural cocycle table has the wrong size");
  for (auto& x : natural_) x = mod1(x);
  auto idx = [&](int a, int b) {
    return int(std::find(gamma_.begin(), gamma_.end(), W.mul(gamma_[a], gamma_[b])) - gamma_.begin());
  };
  for (std::size_t a = 0; a < g; ++a) {
    if (natural_[a] != 0 || natural_[a * g] != 0) throw InvalidInput("natural cocycle is not normalized");
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t c = 0; c < g; ++c) {
        const Rational lhs = natural_[a * g + b] + natural_[idx(int(a), int(b)) * g + c];
        const Rational rhs = natural_[b * g + c] + natural_[a * g + idx(int(b), int(c))];
        if (mod1(lhs - rhs) != 0) throw InvalidInput("natural table fails the cocycle condition");
      }
  }
}

std::pair<std::vector<int>, int> GradedHeckeAlgebra::split(int w) const {
  const auto& W = *W_;
  std::vector<int> word;
  for (bool again = true; again;) {
    again = false;
    for (int b : simple_)
      if (!W.datum().is_positive(W.root_image(W.inv(w), b))) {
        word.push_back(b);
        w = W.mul(W.reflection(b), w);
        again = true;
        break;
      }
  }
  return {word, w};
}

Rational GradedHeckeAlgebra::natural_value(int u, int v) const {
  return natural_[std::size_t(gamma_of_.at(u)) * gamma_.size() + gamma_of_.at(v)];
}

Poly GradedHeckeAlgebra::act(int w, const Poly& f) const {
  const int dim = n();
  const IMat& M = W_->on_x(w);
  std::vector<Poly> images;
  for (int i = 0; i < dim; ++i) images.push_back(poly_linear(M.col(i)));
  Poly out;
  for (const auto& [m, c] : f) {
    Monomial rpart(std::size_t(dim) + 1, 0);
    rpart[dim] = m[dim];
    Poly term{{rpart, c}};
    for (int i = 0; i < dim; ++i)
      for (std::int64_t e = 0; e < m[i]; ++e) term = poly_mul(term, images[i]);
    out = poly_add(out, term);
  }
  return out;
}

Poly GradedHeckeAlgebra::delta(int root, const Poly& f) const {
  // Δ(x_i g) = ⟨x_i, α^∨⟩ g + s(x_i) Δ(g), with Δ(r) = Δ(1) = 0.
  const int dim = n();
  const IVec& cor = W_->datum().coroot(root);
  const int s = W_->reflection(root);
  std::vector<Poly> s_images;
  for (int i = 0; i < dim; ++i) s_images.push_back(poly_linear(W_->on_x(s).col(i)));
  Poly out;
  for (const auto& [m, c] : f) {
    Monomial rest = m;
    rest[dim] = 0;
    Poly prefix{{Monomial(std::size_t(dim) + 1, 0), c}};  // s applied to the factors already peeled
    Poly acc;
    for (int i = 0; i < dim; ++i)
      while (rest[i] > 0) {
        --rest[i];
        if (cor[i] != 0) acc = poly_add(acc, poly_mul(poly_scale(Cyclotomic(int(cor[i])), prefix), monomial(rest)));
        prefix = poly_mul(prefix, s_images[i]);
      }
    Monomial rpart(std::size_t(dim) + 1, 0);
    rpart[dim] = m[dim];
    out = poly_add(out, poly_mul(acc, monomial(rpart)));
  }
  return out;
}

GradedHeckeAlgebra::Element GradedHeckeAlgebra::N(int w) const {
  if (!gamma_of_.count(w)) throw InvalidInput("element outside the group");
  return Element{{w, poly_const(Cyclotomic(1), n())}};
}

GradedHeckeAlgebra::Element GradedHeckeAlgebra::P(const Poly& f) const {
  if (f.empty()) return {};
  return Element{{W_->identity(), f}};
}

GradedHeckeAlgebra::Element GradedHeckeAlgebra::left_mul_simple(int root, const Element& a) const {
  const int s = W_->reflection(root);
  const Poly kr = poly_scale(Cyclotomic(k_.at(root)), poly_r(n()));
  Element out;
  auto accumulate = [&](int w, const Poly& p) {
    if (p.empty()) return;
    Poly& slot = out[w];
    slot = poly_add(slot, p);
    if (slot.empty()) out.erase(w);
  };
  for (const auto& [v, p] : a) {
    accumulate(W_->mul(s, v), act(s, p));
    if (k_.at(root) != 0) accumulate(v, poly_mul(kr, delta(root, p)));
  }
  return out;
}

GradedHeckeAlgebra::Element GradedHeckeAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [w, f] : a) {
    const auto [word, g] = split(w);
    for (const auto& [v, h] : b) {
      Element e{{g, act(g, h)}};
      for (auto it = word.rbegin(); it != word.rend(); ++it) e = left_mul_simple(*it, e);
      for (const auto& [u, p] : e) {
        const Rational phase = mod1(natural_value(u, v));
        Poly term = poly_mul(f, p);
        if (phase != 0) {
          const auto N = int(den(phase));
          term = poly_scale(Cyclotomic::zeta(N, to_i64(num(phase))), term);
        }
        const int uv = W_->mul(u, v);
        Poly& slot = out[uv];
        slot = poly_add(slot, term);
        if (slot.empty()) out.erase(uv);
      }
    }
  }
  return out;
}

Poly GradedHeckeAlgebra::represent(const Element& a, const Poly& f) const {
  for (const auto& x : natural_)
    if (x != 0) throw InvalidInput("the polynomial representation needs a trivial natural cocycle");
  Poly out;
  for (const auto& [w, p] : a) {
    const auto [word, g] = split(w);
    Poly h = act(g, f);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Poly next = act(W_->reflection(*it), h);
      if (k_.at(*it) != 0)
        next = poly_add(next, poly_mul(poly_scale(Cyclotomic(k_.at(*it)), poly_r(n())), delta(*it, h)));
      h = std::move(next);
    }
    out = poly_add(out, poly_mul(p, h));
  }
  return out;
}

bool GradedHeckeAlgebra::check_cross_relation(int max_degree) const {
  const int dim = n();
  const auto monos = monomials_up_to(dim, max_degree);
  auto tests = monomials_up_to(dim, 1);
  for (std::size_t i = 0, m = tests.size(); i < m; ++i) {
    tests.push_back(tests[i]);
    tests.back()[dim] = 1;
  }
  for (int b : simple_) {
    const Element Ns = N(W_->reflection(b));
    const Poly kr = poly_scale(Cyclotomic(k_.at(b)), poly_r(dim));
    for (const auto& m : monos) {
      const Poly g = monomial(m);
      if (represent(Ns, represent(Ns, g)) != g) return false;
      const Poly sg = act(W_->reflection(b), g), dg = poly_mul(kr, delta(b, g));
      for (const auto& t : tests) {
        const Poly h = monomial(t);
        const Poly lhs = represent(Ns, poly_mul(g, h));
        const Poly rhs = poly_add(poly_mul(sg, represent(Ns, h)), poly_mul(dg, h));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool GradedHeckeAlgebra::check_symmetric_central(int max_degree) const {
  const int dim = n();
  std::vector<Element> gens;
  for (int b : simple_) gens.push_back(N(W_->reflection(b)));
  for (int g : gamma_) gens.push_back(N(g));
  for (const auto& m : monomials_up_to(dim, max_degree)) {
    Poly f;
    for (int w : group_) f = poly_add(f, act(w, monomial(m)));
    const Element F = P(f);
    for (const auto& x : gens)
      if (mul(x, F) != mul(F, x)) return false;
  }
  return true;
}

GradedHeckeAlgebra::Decomposition GradedHeckeAlgebra::decompose() const {
  const auto& W = *W_;
  const auto& d = W.datum();
  Decomposition out;
  for (int r : roots_)
    if (k_.at(r) != 0) out.core_roots.push_back(r);
  const std::set<int> core(out.core_roots.begin(), out.core_roots.end());
  for (int a : out.core_roots)
    if (d.is_positive(a)) {
      bool simple = true;
      for (int b : out.core_roots)
        if (b != a && d.is_positive(b) && !d.is_positive(W.root_image(W.reflection(a), b))) simple = false;
      if (simple) out.core_simple.push_back(a);
    }
  for (int w : group_) {
    bool keeps = true;
    for (int a : out.core_roots)
      if (d.is_positive(a)) {
        const int img = W.root_image(w, a);
        if (!core.count(img) || !d.is_positive(img)) keeps = false;
      }
    if (keeps) out.gamma_prime.push_back(w);
  }
  std::vector<int> refl;
  for (int r : out.core_roots) refl.push_back(W.reflection(r));
  const auto core_group = W.generate(refl);
  std::vector<int> common;
  std::set_intersection(core_group.begin(), core_group.end(), out.gamma_prime.begin(), out.gamma_prime.end(),
                        std::back_inserter(common));
  out.semidirect = common.size() == 1 && core_group.size() * out.gamma_prime.size() == group_.size();
  out.stabilizes = true;
  for (int g : out.gamma_prime)
    for (int a : out.core_roots)
      if (!core.count(W.root_image(g, a))) out.stabilizes = false;
  if (!out.semidirect) throw DecompositionFailure("W' is not W(R') semidirect Gamma'");
  return out;
}

GradedHeckeAlgebra GradedHeckeAlgebra::rebuild(const Decomposition& dec) const {
  std::map<int, Rational> k;
  for (int r : dec.core_roots) k[r] = k_.at(r);
  return GradedHeckeAlgebra(W_->datum(), dec.core_roots, k, dec.gamma_prime);
}

}  // namespace dzb
