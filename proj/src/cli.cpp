#include "dzb/cli.hpp"

#include "dzb/errors.hpp"
#include "dzb/extensions.hpp"
#include "dzb/finite_oracle.hpp"
#include "dzb/hecke.hpp"
#include "dzb/stabilizers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace dzb::cli {

using json = nlohmann::json;

namespace {

// ----- canonical values -----

json rat(const Rational& r) {
  if (is_integer(r)) {
    const Integer z = num(r);
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
      return json(static_cast<std::int64_t>(z));
  }
  return json(to_string(r));
}

json qvec(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

json ivec(const IVec& v) { return json(v); }

json word(const WeylGroup& W, int w) { return json(W.reduced_word(w)); }

json element(const ExtendedAffineWeyl& E, const ExtAffineElement& x) {
  return json{{"translation", ivec(x.lambda)}, {"w", word(E.weyl(), x.w)}};
}

Rational read_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

QVec read_qvec(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  QVec v;
  for (const auto& x : j) v.push_back(read_rational(x));
  return v;
}

IVec read_ivec(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer, got " + x.dump());
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

std::vector<IVec> read_rows(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integer vectors");
  std::vector<IVec> rows;
  for (const auto& r : j) rows.push_back(read_ivec(r));
  return rows;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// ----- the input document -----

struct Problem {
  RootDatum datum;
  IMat project, lift;
  std::optional<FrobeniusAction> F;
  std::optional<TorusCharacter> theta;
  std::vector<int> J;
};

RootDatum read_raw_datum(const json& doc) {
  const json& rank = field(doc, "rank");
  if (!rank.is_number_integer() || rank.get<int>() < 0) throw ParseError("\"rank\" must be a nonnegative integer");
  return RootDatum(read_rows(field(doc, "simple_roots")), read_rows(field(doc, "simple_coroots")), rank.get<int>());
}

std::vector<IVec> read_identifications(const json& doc) {
  return doc.contains("identifications") ? read_rows(doc.at("identifications")) : std::vector<IVec>{};
}

QVec read_theta_raw(const json& doc, int rank) {
  const json& t = doc.at("theta");
  const IVec nums = read_ivec(field(t, "numerators"));
  const json& d = field(t, "denominator");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw ParseError("theta denominator must be positive");
  if (int(nums.size()) != rank) throw ParseError("theta has the wrong number of coordinates");
  QVec v;
  for (auto x : nums) v.push_back(Rational(x, d.get<std::int64_t>()));
  return v;
}

Problem read_problem(const json& doc) {
  Problem p;
  const RootDatum raw = read_raw_datum(doc);
  const auto q = raw.quotient(read_identifications(doc));
  p.datum = q.datum;
  p.project = q.project;
  p.lift = q.lift;
  if (doc.contains("frobenius")) {
    const json& f = doc.at("frobenius");
    const json& qv = field(f, "q");
    if (!qv.is_number_integer()) throw ParseError("frobenius q must be an integer");
    IMat F0 = f.contains("matrix") ? IMat::from_rows(read_rows(f.at("matrix")), raw.rank()) : IMat::identity(raw.rank());
    if (F0.rows() != raw.rank() || F0.cols() != raw.rank()) throw ParseError("frobenius matrix has the wrong shape");
    const IMat reduced = p.project * F0 * p.lift;
    for (int i = 0; i < raw.rank(); ++i) {
      IVec e(raw.rank(), 0);
      e[i] = 1;
      if (p.project * (F0 * (p.lift * (p.project * e))) != p.project * (F0 * e))
        throw InvalidInput("frobenius matrix does not preserve the identifications");
    }
    p.F = FrobeniusAction(reduced, qv.get<std::int64_t>(), p.datum);
  }
  if (doc.contains("theta")) p.theta = TorusCharacter(p.project * read_theta_raw(doc, raw.rank()));
  if (doc.contains("facet")) {
    const json& J = field(doc.at("facet"), "J");
    for (auto x : read_ivec(J)) p.J.push_back(int(x));
  }
  return p;
}

const FrobeniusAction& need_frobenius(const Problem& p) {
  if (!p.F) throw ParseError("this command needs a \"frobenius\" block");
  return *p.F;
}

const TorusCharacter& need_theta(const Problem& p) {
  if (!p.theta) throw ParseError("this command needs a \"theta\" block");
  return *p.theta;
}

// ----- commands -----

json cmd_stab(const Problem& p, const JobSpec& spec) {
  const WeylGroup W(p.datum, spec.max_group_order);
  const TorusCharacter& theta = need_theta(p);
  if (p.F) theta.validate(*p.F);
  const StabilizerReport r = stabilizer_report(W, theta, p.F ? &*p.F : nullptr);
  json out;
  out["weyl_order"] = W.size();
  out["theta"] = qvec(theta.values());
  json stab = json::array();
  for (int w : r.decomposition.stabilizer) stab.push_back(word(W, w));
  out["stabilizer"] = {{"order", r.decomposition.stabilizer.size()}, {"elements", stab}};
  json singular = json::array();
  for (int a : r.decomposition.singular.roots)
    if (p.datum.is_positive(a)) singular.push_back(ivec(p.datum.root(a)));
  out["singular_roots"] = singular;
  out["reflection_subgroup_order"] = r.decomposition.singular.reflection_group.size();
  json gamma = json::array();
  for (int g : r.decomposition.gamma) gamma.push_back(word(W, g));
  out["gamma"] = {{"order", r.decomposition.gamma.size()}, {"elements", gamma}};
  // θ̃ lifts θ′ = wθ; the lift model and the class map are those of θ′.
  json classes = json::array();
  for (std::size_t i = 0; i < r.class_map.gamma.size(); ++i)
    classes.push_back({{"w", word(W, r.class_map.gamma[i])}, {"class", ivec(r.class_map.classes[i])}});
  json lifts = json::array();
  for (const auto& e : r.lift_stabilizer) lifts.push_back({{"w", word(W, e.w)}, {"translation", ivec(e.x)}});
  out["lift"] = {{"point", qvec(r.lift)},
                 {"conjugator", word(W, r.conjugator)},
                 {"gamma_classes", classes},
                 {"class_group_moduli", ivec(r.class_map.quotient.moduli())},
                 {"stabilizer", {{"order", r.lift_stabilizer.size()}, {"elements", lifts}, {"projection_isomorphism", true}}}};
  if (r.nonsingular) out["nonsingular"] = *r.nonsingular;
  return out;
}

json block_root(const RootDatum& d, const BlockRoot& b, std::int64_t qF) {
  return {{"root", ivec(d.root(b.root))},
          {"coroot", ivec(b.coroot)},
          {"kind", to_string(b.kind)},
          {"q", rat(b.q)},
          {"exponent", exact_log(b.q, qF)},
          {"norm_pairing", rat(b.norm_pairing)}};
}

json cmd_qparams(const Problem& p, const JobSpec& spec) {
  const FrobeniusAction& F = need_frobenius(p);
  const WeylGroup guard(p.datum, spec.max_group_order);
  const BlockAlgebra b = build_block_algebra(p.datum, F, need_theta(p), p.J, spec.max_group_order);
  json roots = json::array();
  for (const auto& r : b.reflecting) roots.push_back(block_root(p.datum, r, F.q));
  return {{"q_F", F.q}, {"reflecting_roots", roots}, {"r_sigma_size", b.r_sigma.size()}};
}

ExtAffineHeckeAlgebra::OmegaCocycle read_omega_cocycle(const json& doc, int rank, int& order) {
  order = 1;
  if (!doc.contains("omega_cocycle")) return nullptr;
  const json& oc = doc.at("omega_cocycle");
  const json& rows = field(oc, "bilinear");
  std::vector<QVec> M;
  for (const auto& r : rows) M.push_back(read_qvec(r));
  if (int(M.size()) != rank) throw ParseError("omega_cocycle.bilinear must be rank × rank");
  Integer den_all = 1;
  for (const auto& r : M) {
    if (int(r.size()) != rank) throw ParseError("omega_cocycle.bilinear must be rank × rank");
    den_all = lcm(den_all, common_denominator(r));
  }
  order = int(to_i64(den_all));
  // μ(a, b) = λ_aᵀ M λ_b on translation parts.
  return [M](const ExtAffineElement& a, const ExtAffineElement& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = 0; j < M.size(); ++j) s += M[i][j] * a.lambda[i] * b.lambda[j];
    return mod1(s);
  };
}

json hecke_structure(const ExtAffineHeckeAlgebra& H) {
  const auto& R = H.realization();
  const auto& E = R.group();
  json gens = json::array(), omega = json::array(), braid = json::array();
  for (int s = 0; s < R.size(); ++s) {
    json g = element(E, R.generator(s));
    g["exponent"] = H.exponents()[s];
    gens.push_back(g);
    json row = json::array();
    for (int t = 0; t < R.size(); ++t) row.push_back(s == t ? 1 : R.braid_order(s, t));
    braid.push_back(row);
  }
  for (const auto& w : R.omega_generators()) omega.push_back(element(E, w));
  const auto rel = H.check_relations(4);
  json relations = {{"quadratic", rel.quadratic}, {"braid", rel.braid}, {"omega", rel.omega},
                    {"words", rel.words}, {"ok", rel.ok}};
  if (!rel.ok) relations["failure"] = rel.failure;
  return {{"generators", gens}, {"braid_orders", braid}, {"omega_generators", omega}, {"relations", relations}};
}

json cmd_hecke(const Problem& p, const JobSpec& spec, const json& doc) {
  if (doc.contains("parameters")) {
    auto E = std::make_shared<ExtendedAffineWeyl>(p.datum, spec.max_group_order);
    CoxeterRealization R = p.J.empty() ? CoxeterRealization::full(E) : CoxeterRealization::derived(E, p.J);
    R.max_length = spec.max_length;
    const IVec e = read_ivec(field(doc.at("parameters"), "exponents"));
    if (int(e.size()) != R.size())
      throw ParseError("parameters.exponents needs " + std::to_string(R.size()) + " entries");
    int order = 1;
    auto mu = read_omega_cocycle(doc, p.datum.rank(), order);
    const ExtAffineHeckeAlgebra H(R, std::vector<int>(e.begin(), e.end()), mu, order);
    json out = hecke_structure(H);
    out["source"] = "parameters";
    return out;
  }
  const FrobeniusAction& F = need_frobenius(p);
  const WeylGroup guard(p.datum, spec.max_group_order);
  const BlockAlgebra b = build_block_algebra(p.datum, F, need_theta(p), p.J, spec.max_group_order);
  const auto& W = b.E->weyl();
  json out = b.hecke ? hecke_structure(*b.hecke) : json{{"generators", json::array()}};
  out["source"] = "block";
  json r_sigma = json::array(), dual = json::array(), gamma = json::array(), omega = json::array(), params = json::array();
  for (int r : b.r_sigma)
    if (p.datum.is_positive(r)) r_sigma.push_back(ivec(p.datum.root(r)));
  for (const auto& c : b.dual_roots) dual.push_back(ivec(c));
  for (int g : b.gamma) gamma.push_back(word(W, g));
  for (const auto& w : b.omega_generators) omega.push_back(element(*b.E, w));
  for (const auto& r : b.reflecting) params.push_back(block_root(p.datum, r, F.q));
  out["parameters"] = params;
  out["r_sigma"] = r_sigma;
  out["dual_roots"] = dual;
  out["stabilizer_order"] = b.stabilizer.size();
  out["gamma"] = gamma;
  out["weyl_order_sigma"] = b.weyl_order_sigma;
  out["weyl_order_dual"] = b.weyl_order_dual;
  out["omega_generators"] = omega;
  out["omega_translation_rank"] = b.omega_translation_rank;
  out["omega_finite_order"] = b.omega_finite_order;
  out["center_lattice_rank"] = b.omega_translation_rank;
  out["parameter_preserving"] = b.parameter_preserving;
  out["twisted_lattice_algebra"] = b.is_twisted_lattice_algebra();
  return out;
}

json cmd_oracle(const json& doc, const JobSpec& spec) {
  const json& o = field(doc, "oracle");
  const GroupKind kind = parse_group_kind(field(o, "group").get<std::string>());
  const json& qv = field(o, "q");
  if (!qv.is_number_integer()) throw ParseError("oracle q must be an integer");
  const std::int64_t q = qv.get<std::int64_t>();
  const FiniteGroupOfLieType G(kind, q, spec.max_group_order);
  QVec theta(G.torus_moduli().size(), Rational(0));
  if (o.contains("theta")) theta = read_qvec(o.at("theta"));
  if (theta.size() != G.torus_moduli().size())
    throw ParseError("oracle theta needs " + std::to_string(G.torus_moduli().size()) + " coordinates");
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (!is_integer(theta[i] * G.torus_moduli()[i]))
      throw InvalidCharacter("oracle theta coordinate " + std::to_string(i) + " is not in (1/" +
                             std::to_string(G.torus_moduli()[i]) + ")Z/Z");
  theta = mod1(theta);
  const ThetaSphericalAlgebra alg = hecke_fin(G, theta);
  json out = {{"group", to_string(kind)},
              {"q", q},
              {"order", G.group().size()},
              {"borel_order", G.borel().size()},
              {"torus_order", G.torus().size()},
              {"torus_moduli", ivec(G.torus_moduli())},
              {"theta", qvec(theta)},
              {"weyl_fixed", mod1(G.weyl_act(theta)) == theta},
              {"dimension", alg.dim()},
              {"howlett_lehrer", alg.howlett_lehrer},
              {"associative", alg.is_associative()},
              {"unit", alg.has_unit()}};
  if (alg.dim() == 2) {
    const QParameter qp = q_parameter(alg, q);
    out["quadratic"] = {{"a", rat(qp.a)}, {"b", rat(qp.b)}};
    out["q_parameter"] = rat(qp.q);
  }
  return out;
}

FiniteGroup read_group(const json& g) {
  if (g.contains("cyclic")) {
    const IVec orders = read_ivec(g.at("cyclic"));
    FiniteGroup Q = FiniteGroup::cyclic(1);
    for (auto n : orders) {
      if (n <= 0) throw ParseError("cyclic orders must be positive");
      Q = FiniteGroup::product(Q, FiniteGroup::cyclic(int(n)));
    }
    return Q;
  }
  if (g.contains("table")) {
    std::vector<std::vector<int>> t;
    for (const auto& row : g.at("table")) {
      const IVec r = read_ivec(row);
      t.emplace_back(r.begin(), r.end());
    }
    return FiniteGroup(t);
  }
  throw ParseError("a group needs \"cyclic\" or \"table\"");
}

std::vector<QVec> read_cocycle_table(const json& t, int order, int dim) {
  if (!t.is_array() || int(t.size()) != order) throw ParseError("cocycle table must be |Q| × |Q|");
  std::vector<QVec> out;
  for (const auto& row : t) {
    if (!row.is_array() || int(row.size()) != order) throw ParseError("cocycle table must be |Q| × |Q|");
    for (const auto& x : row) {
      QVec v = x.is_array() ? read_qvec(x) : QVec{read_rational(x)};
      if (int(v.size()) != dim) throw ParseError("cocycle value has the wrong dimension");
      out.push_back(v);
    }
  }
  return out;
}

json cochain_json(const std::vector<QVec>& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(v.size() == 1 ? rat(v[0]) : qvec(v));
  return a;
}

json cmd_cocycle(const json& doc, const JobSpec& spec) {
  const json& c = field(doc, "cocycle");
  const FiniteGroup Q = read_group(field(c, "group"));
  CoefficientModule A;
  A.moduli = read_ivec(field(c, "moduli"));
  if (c.contains("action"))
    for (const auto& m : c.at("action")) A.action.push_back(IMat::from_rows(read_rows(m), A.dim()));
  Cocycle2 x(Q, A, read_cocycle_table(field(c, "table"), Q.size(), A.dim()));
  const std::string op = c.value("operation", std::string("split"));
  if (op == "baer_sum" || op == "difference") {
    Cocycle2 y(Q, A, read_cocycle_table(field(c, "other"), Q.size(), A.dim()));
    x = op == "baer_sum" ? baer_sum(x, y) : baer_sum(x, negate(y));
  } else if (op == "baer_sum_inverse") {
    x = baer_sum(x, negate(x));
  } else if (op != "split") {
    throw ParseError("unknown cocycle operation \"" + op + "\"");
  }
  std::optional<EquivariantStructure> eq;
  if (spec.equivariant) {
    const json& e = field(c, "equivariance");
    EquivariantStructure s;
    s.gamma = read_group(field(e, "gamma"));
    for (const auto& row : field(e, "on_group")) {
      const IVec r = read_ivec(row);
      s.on_group.emplace_back(r.begin(), r.end());
    }
    for (const auto& m : field(e, "on_coefficients")) s.on_coefficients.push_back(IMat::from_rows(read_rows(m), A.dim()));
    for (const auto& w : field(e, "witness")) {
      std::vector<QVec> eps;
      for (const auto& v : w) eps.push_back(v.is_array() ? read_qvec(v) : QVec{read_rational(v)});
      s.witness.push_back(eps);
    }
    validate(x, s);
    eq = std::move(s);
  }
  const auto split = splitting(x, eq ? &*eq : nullptr);
  json out = {{"operation", op}, {"group_order", Q.size()}, {"moduli", ivec(A.moduli)}, {"equivariant", spec.equivariant},
              {"splits", bool(split)}};
  if (split) out["splitting"] = cochain_json(*split);
  const bool finite = std::all_of(A.moduli.begin(), A.moduli.end(), [](std::int64_t m) { return m > 0; });
  if (finite && !eq) {
    try {
      out["exhaustive_agrees"] = bool(splitting_exhaustive(x)) == bool(split);
    } catch (const GroupTooLarge&) {
      // The exhaustive cross-check is optional.
    }
  }
  return out;
}

// ----- validate -----

std::vector<std::string> diagnose(const json& doc, const JobSpec& spec) {
  std::vector<std::string> diag;
  auto guard = [&](auto&& f) {
    try {
      f();
      return true;
    } catch (const std::exception& e) {
      diag.push_back(e.what());
      return false;
    }
  };
  std::optional<RootDatum> raw;
  if (!guard([&] {
        const RootDatum r = read_raw_datum(doc);
        raw = r;
      }))
    return diag;
  RootDatum::Quotient quo;
  if (!guard([&] { quo = raw->quotient(read_identifications(doc)); })) return diag;
  guard([&] { WeylGroup(quo.datum, spec.max_group_order); });
  if (doc.contains("frobenius")) {
    const json& f = doc.at("frobenius");
    guard([&] {
      const json& qv = field(f, "q");
      if (!qv.is_number_integer()) throw ParseError("frobenius q must be an integer");
      if (!is_prime_power(qv.get<std::int64_t>()))
        throw BadPrimePower("q = " + qv.dump() + " is not a prime power");
    });
  }
  std::optional<Problem> p;
  guard([&] { p = read_problem(doc); });
  if (p && doc.contains("theta") && p->F) {
    const QVec th = p->theta->values();
    QVec y = p->F->F0 * th;
    for (std::size_t i = 0; i < th.size(); ++i) {
      const Rational r = mod1(y[i] * p->F->q - th[i]);
      if (r != 0)
        diag.push_back("congruence (q*F0 - 1)*theta = 0 mod 1 fails at coordinate " + std::to_string(i) +
                       " (residue " + to_string(r) + ")");
    }
  }
  if (p && doc.contains("facet")) {
    guard([&] {
      const ExtendedAffineWeyl E(p->datum, spec.max_group_order);
      std::set<int> seen;
      for (int a : p->J) {
        if (a < 0 || a >= E.num_simple_affine())
          throw InvalidInput("facet index " + std::to_string(a) + " is outside the affine Dynkin diagram");
        if (!seen.insert(a).second) throw InvalidInput("facet index " + std::to_string(a) + " repeated");
      }
      std::map<int, int> used, total;
      for (int a = 0; a < E.num_simple_affine(); ++a) ++total[E.component_of(a)];
      for (int a : p->J) ++used[E.component_of(a)];
      for (const auto& [c, k] : used)
        if (k == total[c]) throw InvalidInput("facet J contains a whole affine component");
    });
  }
  return diag;
}

// ----- output -----

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
  }
  return report.dump(2) + "\n";
}

int exit_code(ErrorClass c) { return static_cast<int>(c); }

}  // namespace

JobResult run_document(const JobSpec& spec, const std::string& input_text) {
  JobResult res;
  try {
    if (spec.format != "json" && spec.format != "text") throw ParseError("format must be json or text");
    json doc;
    try {
      doc = json::parse(input_text);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what());
    }
    json report;
    if (spec.command == "validate") {
      const auto diag = diagnose(doc, spec);
      report = {{"diagnostics", diag}, {"valid", diag.empty()}};
      if (!diag.empty()) res.exit_code = exit_code(ErrorClass::Input);
    } else if (spec.command == "oracle") {
      report = cmd_oracle(doc, spec);
    } else if (spec.command == "cocycle") {
      report = cmd_cocycle(doc, spec);
    } else {
      const Problem p = read_problem(doc);
      if (spec.command == "stab")
        report = cmd_stab(p, spec);
      else if (spec.command == "qparams")
        report = cmd_qparams(p, spec);
      else if (spec.command == "hecke")
        report = cmd_hecke(p, spec, doc);
      else
        throw ParseError("unknown command \"" + spec.command + "\"");
    }
    report["command"] = spec.command;
    res.report = render(report, spec.format);
  } catch (const Error& e) {
    res.exit_code = exit_code(e.error_class());
    res.diagnostic = e.what();
  } catch (const json::exception& e) {
    res.exit_code = exit_code(ErrorClass::Input);
    res.diagnostic = std::string("ParseError: ") + e.what();
  } catch (const std::exception& e) {
    res.exit_code = exit_code(ErrorClass::Invariant);
    res.diagnostic = std::string("internal error: ") + e.what();
  }
  return res;
}

JobResult run(const JobSpec& spec) {
  std::ifstream in(spec.input);
  if (!in) return {exit_code(ErrorClass::Input), "", "ParseError: cannot read " + spec.input};
  std::stringstream buf;
  buf << in.rdbuf();
  JobResult res = run_document(spec, buf.str());
  if (!spec.output.empty() && !res.report.empty()) {
    std::ofstream out(spec.output);
    if (!out) return {exit_code(ErrorClass::Input), "", "cannot write " + spec.output};
    out << res.report;
  }
  return res;
}

int main(int argc, char** argv) {
  CLI::App app{"Invariants of depth-zero Bernstein blocks"};
  JobSpec spec;
  app.add_option("command", spec.command, "stab | qparams | hecke | oracle | cocycle | validate")
      ->required()
      ->check(CLI::IsMember({"stab", "qparams", "hecke", "oracle", "cocycle", "validate"}));
  app.add_option("--input", spec.input, "input JSON document")->required();
  app.add_option("--out", spec.output, "write the report here instead of stdout");
  app.add_option("--format", spec.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-group-order", spec.max_group_order, "bound on enumerated groups");
  app.add_option("--max-length", spec.max_length, "bound on reduced-word lengths");
  app.add_flag("--equivariant", spec.equivariant, "cocycle: solve the equivariant splitting problem");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(ErrorClass::Input);
  }
  const JobResult res = run(spec);
  if (!res.diagnostic.empty()) std::cerr << res.diagnostic << "\n";
  if (spec.output.empty()) std::cout << res.report;
  return res.exit_code;
}

}  // namespace dzb::cli
