#include "tbs/selftest.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "tbs/catalog.hpp"
#include "tbs/sampling.hpp"

namespace tbs {

namespace {

class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool cond, const std::function<std::string()>& what) {
    ++cases_;
    if (cond) return;
    ok_ = false;
    if (bad_.size() < 5) bad_.push_back(what());
  }
  void note(const std::string& key, Json value) { extra_[key] = std::move(value); }
  bool ok() const { return ok_; }

  Json json() const {
    Json j = {{"name", name_}, {"ok", ok_}, {"cases", cases_}, {"counterexamples", bad_}};
    if (!extra_.empty()) j["data"] = extra_;
    return j;
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  bool ok_ = true;
  std::vector<std::string> bad_;
  Json extra_ = Json::object();
};

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}
  Check& check(std::string name) {
    checks_.emplace_back(std::move(name));
    return checks_.back();
  }
  Json json() const {
    bool ok = true;
    Json cs = Json::array();
    for (const auto& c : checks_) {
      ok = ok && c.ok();
      cs.push_back(c.json());
    }
    return {{"name", name_}, {"ok", ok}, {"checks", cs}};
  }

 private:
  std::string name_;
  std::deque<Check> checks_;  // stable references
};

std::string str(const Json& j) { return j.dump(); }

// ---------------------------------------------------------------------------

Json suite_lattice(Sampler& s) {
  Suite suite("lattice");
  auto& parity = suite.check("det_gcd_parity_window_6");
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c)
        for (long d = -6; d <= 6; ++d) {
          LatticePoint k(a, b), k0(c, d);
          Int lhs = det2(k, k0) - (gcd2(k) + gcd2(k0) - gcd2(k + k0));
          parity.expect(mpz_even_p(lhs.get_mpz_t()), [&] { return k.str() + " " + k0.str(); });
        }
  auto& inv = suite.check("sl2_preserves_det_and_gcd");
  for (int i = 0; i < 200; ++i) {
    Matrix2 g = s.sl2(6);
    LatticePoint k = s.point(10), k0 = s.point(10);
    inv.expect(det2(k, k0) == det2(g * k, g * k0) && gcd2(k) == gcd2(g * k),
               [&] { return g.str() + " " + k.str() + " " + k0.str(); });
  }
  auto& act = suite.check("affine_action_is_an_action");
  for (int i = 0; i < 100; ++i) {
    AffineSL2 a = s.affine(), b = s.affine();
    LatticePoint k = s.point(5);
    act.expect(affine_act(affine_mul(a, b), k) == affine_act(a, affine_act(b, k)) &&
                   affine_mul(a, affine_inv(a)).is_identity(),
               [&] { return str(to_json(a)) + " " + str(to_json(b)); });
  }
  auto& xi = suite.check("xi_has_order_three");
  const auto& c = constants();
  AffineSL2 xi2 = affine_mul(c.xi, c.xi);
  xi.expect(xi2 == AffineSL2(c.e2, make_matrix(0, 1, -1, -1)), [&] { return str(to_json(xi2)); });
  xi.expect(affine_mul(xi2, c.xi).is_identity(), [] { return std::string("xi^3 != 1"); });
  xi.expect(affine_act(c.xi, LatticePoint()) == c.e1 && affine_act(c.xi, c.e1) == c.e2 &&
                affine_act(c.xi, c.e2).is_zero(),
            [] { return std::string("xi does not cycle 0, e1, e2"); });
  return suite.json();
}

Json suite_cohomology(Sampler& s) {
  Suite suite("cohomology");
  auto& agree = suite.check("cohomologous_matches_coboundary_oracle");
  std::size_t yes = 0, no = 0;
  auto compare = [&](const Cocycle& a, const Cocycle& b, const std::string& tag) {
    bool c = cohomologous(a, b);
    bool w = coboundary_witness(a.to_table(), b.to_table()).has_value();
    (c ? yes : no) += 1;
    agree.expect(c == w, [&] { return tag + " on " + a.group().str(); });
  };
  const std::vector<std::vector<std::int64_t>> groups = {{2, 2}, {4}, {2, 4}, {3, 3}, {2, 2, 2},
                                                         {4, 4}, {2, 6}, {2, 2, 4}, {2, 8}};
  for (const auto& t : groups) {
    AbGroup G(0, t);
    for (int rep = 0; rep < 2; ++rep) {
      Cocycle a = s.random_bichar(G);
      compare(a, add_coboundary(a, s.random_function(G, 12)), "bichar vs coboundary shift");
      compare(a, s.random_bichar(G), "independent bichars");
      // symmetric perturbation: same commutator form
      PhaseMatrix B = a.matrix();
      Cocycle sym = s.random_bichar(G);
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) B[i][j] += sym.matrix()[std::min(i, j)][std::max(i, j)];
      compare(add_coboundary(a, s.random_function(G, 6)), Cocycle::bichar(G, B), "symmetric perturbation");
    }
  }
  for (std::int64_t q : {2, 3}) {
    Cocycle m = mu_q(q);
    compare(m, Cocycle::trivial(m.group()), "mu_q vs trivial");
    compare(m, add_coboundary(m, s.random_function(m.group(), 9)), "mu_q vs coboundary shift");
  }
  agree.note("cohomologous_pairs", yes);
  agree.note("non_cohomologous_pairs", no);

  auto& bil = suite.check("commutator_form_antisymmetric_bilinear");
  for (int i = 0; i < 50; ++i) {
    AbGroup G(0, groups[static_cast<std::size_t>(s.uniform(0, groups.size() - 1))]);
    Cocycle mu = add_coboundary(s.random_bichar(G), s.random_function(G, 6));
    Bicharacter st = star_bicharacter(mu);
    AbElem g = s.element(G), g2 = s.element(G), h = s.element(G);
    bil.expect(st.antisymmetric() && st(G.add(g, g2), h) == st(g, h) + st(g2, h) &&
                   st(g, h) == mu(g, h) - mu(h, g),
               [&] { return G.str(); });
  }
  auto& round = suite.check("bichar_table_round_trip");
  for (int i = 0; i < 20; ++i) {
    AbGroup G(0, groups[static_cast<std::size_t>(s.uniform(0, groups.size() - 1))]);
    Cocycle b = s.random_bichar(G);
    Cocycle t = b.to_table();
    bool same = true;
    for (const auto& g : G.elements())
      for (const auto& h : G.elements()) same = same && b(g, h) == t(g, h);
    round.expect(same, [&] { return G.str(); });
  }
  return suite.json();
}

Json suite_relations(Sampler& s) {
  Suite suite("relations");
  Triplet t = q_triplet(3);
  const AbGroup& G = t.group;
  std::vector<Character> chars = all_characters(G);
  auto rand_char = [&] { return chars[static_cast<std::size_t>(s.uniform(0, chars.size() - 1))]; };
  auto rand_g0 = [&] { return Gamma0Elem{rand_char(), s.point(3), s.sl2()}; };

  auto& assoc = suite.check("gamma0_associative");
  for (int i = 0; i < 100; ++i) {
    Gamma0Elem a = rand_g0(), b = rand_g0(), c = rand_g0();
    assoc.expect(gamma0_mul(t, gamma0_mul(t, a, b), c) == gamma0_mul(t, a, gamma0_mul(t, b, c)),
                 [&] { return "sample " + std::to_string(i); });
  }
  auto& rel = suite.check("translation_and_covariance_relations");
  std::vector<RelationSample> samples;
  for (int i = 0; i < 50; ++i) samples.push_back({s.point(3), s.point(3), s.sl2(), s.alg_elem(t.base(), 2, 2, false)});
  samples.push_back({constants().e1, s.point(2), constants().xi.m(), s.alg_elem(t.base(), 2)});
  RelationReport rr = verify_rho_relations(t, samples);
  for (std::size_t i = 0; i < rr.checked; ++i) rel.expect(true, [] { return std::string(); });
  for (const auto& c : rr.counterexamples) rel.expect(false, [&] { return c; });

  auto& hom = suite.check("rho_is_a_homomorphism");
  auto& star = suite.check("rho_preserves_product_star_trace");
  auto& comm = suite.check("dual_action_commutes");
  for (int i = 0; i < 40; ++i) {
    Gamma0Elem a = rand_g0(), b = rand_g0();
    AlgElem x = s.alg_elem(t.base(), 2, 2, false), y = s.alg_elem(t.base(), 2, 2, false);
    hom.expect(rho_apply(t, a, rho_apply(t, b, x)) == rho_apply(t, gamma0_mul(t, a, b), x),
               [&] { return "sample " + std::to_string(i); });
    AlgElem ax = rho_apply(t, a, x), ay = rho_apply(t, a, y);
    star.expect(rho_apply(t, a, x * y) == ax * ay && rho_apply(t, a, x.star()) == ax.star() && ax.trace() == x.trace(),
                [&] { return "sample " + std::to_string(i); });
    Gamma0Elem c{rand_char(), LatticePoint(), Matrix2{}};
    Gamma0Elem k{Character::trivial(G), s.point(3), Matrix2{}};
    Gamma0Elem g{Character::trivial(G), LatticePoint(), s.sl2()};
    comm.expect(rho_apply(t, c, rho_apply(t, k, x)) == rho_apply(t, k, rho_apply(t, c, x)) &&
                    rho_apply(t, c, rho_apply(t, g, x)) == rho_apply(t, g, rho_apply(t, c, x)),
                [&] { return "sample " + std::to_string(i); });
  }
  auto& fixed = suite.check("dual_fixed_points_are_zero_sum");
  for (int i = 0; i < 30; ++i) {
    AlgElem x = s.alg_elem(t.base(), 2, 2, i % 2 == 0);
    fixed.expect(fixed_by_dual_action(t, x) == is_lambda_supported(x), [&] { return str(to_json(x)); });
  }
  auto& mix = suite.check("weak_mixing_witness");
  for (int i = 0; i < 10; ++i) {
    std::vector<AlgElem> elems;
    for (int j = 0; j < 3; ++j) elems.push_back(s.alg_elem(t.base(), 2) + AlgElem::one(t.base()).scaled(s.coefficient()));
    LatticePoint k = weak_mixing_witness(t, elems);
    mix.expect(is_weak_mixing_witness(t, elems, k), [&] { return "list " + std::to_string(i); });
  }
  return suite.json();
}

Json suite_telescoping(Sampler& s) {
  Suite suite("telescoping");
  Triplet t = q_triplet(3);
  const AbGroup& G = t.group;
  Cocycle mu = t.mu;
  Cocycle mu0 = add_coboundary(mu, s.random_function(G, 9));
  auto& id = suite.check("cohomologous_cocycles_same_correction");
  id.note("cohomologous", cohomologous(mu, mu0));
  for (int i = 0; i < 200; ++i) {
    OplusElem a = s.lambda(G, 3), b = s.lambda(G, 3);
    OplusElem ab = oplus_add(G, a, b);
    auto expr = [&](const Cocycle& m) { return mu_tilde(m, a, b) - mu_hat(m, a) - mu_hat(m, b) + mu_hat(m, ab); };
    id.expect(expr(mu) == expr(mu0), [&] { return str(to_json(a)) + " " + str(to_json(b)); });
  }
  auto& tel = suite.check("ordered_product_equals_mu_hat");
  BasePtr hb = make_base(G, mu0);
  for (int i = 0; i < 50; ++i) {
    OplusElem lam = s.lambda(G, 3, 4);
    std::vector<std::pair<Int, AbElem>> seq;
    for (const auto& [k, v] : lam.support) seq.emplace_back(spiral_index(k), v);
    std::sort(seq.begin(), seq.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    GroupAlgElem prod = GroupAlgElem::one(hb);
    for (const auto& [ix, v] : seq) prod = prod * GroupAlgElem::unit(hb, v);
    GroupAlgElem expect = GroupAlgElem::one(hb).scaled(Cyclotomic::root_of_unity(mu_hat(mu0, lam)));
    tel.expect(prod == expect, [&] { return str(to_json(lam)); });
  }
  auto& ord = suite.check("intertwiner_phase_order_independent");
  AbHom phi(G, G, {{1, 0}, {1, 1}});
  Triplet ta = t, tb(G, mu0, t.chi, "coboundary shifted");
  PiPhi pi = build_pi(ta, tb, phi);
  for (int i = 0; i < 200; ++i) {
    OplusElem lam = s.lambda(G, 3, 4);
    OplusElem im = apply_pointwise(phi, lam);
    auto phase = [&](LatticeOrder o) { return mu_hat(ta.mu, lam, o) - mu_hat(tb.mu, im, o); };
    ord.expect(phase(LatticeOrder::Spiral) == phase(LatticeOrder::BoxedRowMajor), [&] { return str(to_json(lam)); });
  }
  return suite.json();
}

void malleability_checks(Suite& suite, Sampler& s, const Triplet& t, const std::string& tag) {
  {
    const AbGroup& G = t.group;
    BasePtr b = t.base();
    MalleabilityFlow flow(b);
    const TensorElem& V = flow.v();
    TensorElem one = TensorElem::one(b);
    auto& v = suite.check(tag + "V_self_adjoint_and_square");
    v.expect(V.size() == static_cast<std::size_t>(G.order()), [] { return std::string("term count"); });
    v.expect(V.star() == V, [] { return std::string("V* != V"); });
    v.expect(V * V == one.scaled(Cyclotomic(static_cast<long>(G.order()))), [] { return std::string("V^2 != |H|"); });
    auto& sw = suite.check(tag + "alpha_1_swaps_legs");
    for (const auto& g : G.elements()) {
      sw.expect(flow.apply(1, u_tensor(b, g, G.zero())) == u_tensor(b, G.zero(), g), [&] { return str(to_json(g)); });
    }
    auto& grp = suite.check(tag + "flow_identities");
    Rational half(1, 2), third(1, 3);
    for (int i = 0; i < 20; ++i) {
      TensorElem x = s.tensor_elem(b), y = s.tensor_elem(b);
      grp.expect(flow.apply(half, flow.apply(half, x)) == flow.apply(1, x), [&] { return "half " + std::to_string(i); });
      if (i < 5) {
        grp.expect(flow.apply(0, x) == x, [&] { return "zero " + std::to_string(i); });
        grp.expect(flow.apply(third, x).trace() == x.trace(), [&] { return "trace " + std::to_string(i); });
        grp.expect(flow.apply(third, x * y) == flow.apply(third, x) * flow.apply(third, y),
                   [&] { return "product " + std::to_string(i); });
      }
    }
    auto& eq = suite.check(tag + "flow_commutes_with_diagonal_characters");
    std::vector<Character> chars = all_characters(G);
    for (const auto& c : chars) eq.expect(V.character_action(c) == V, [&] { return "V moved by " + str(to_json(c)); });
    for (int i = 0; i < 3; ++i) {
      TensorElem x = s.tensor_elem(b, 2);
      Rational tt = i == 0 ? half : (i == 1 ? third : Rational(1));
      TensorElem fx = flow.apply(tt, x);
      for (const auto& c : chars) {
        eq.expect(flow.apply(tt, x.character_action(c)) == fx.character_action(c),
                  [&] { return "sample " + std::to_string(i) + " " + str(to_json(c)); });
      }
    }
  }
}

Json suite_malleability(Sampler& s, const std::vector<std::int64_t>& qs) {
  Suite suite("malleability");
  for (std::int64_t q : qs) malleability_checks(suite, s, q_triplet(q), "q=" + std::to_string(q) + ": ");
  return suite.json();
}

Json suite_centralizer() {
  Suite suite("centralizer");
  for (std::int64_t q : {3, 5, 7}) {
    auto& c = suite.check("q=" + std::to_string(q));
    CentralizerReport r = centralizer(q_triplet(q), std::nullopt);
    c.expect(r.complete && r.structure && r.structure->order == static_cast<std::size_t>(q) &&
                 r.structure->invariant_factors == std::vector<std::int64_t>{q},
             [&] { return str(to_json(r)); });
    bool unipotent = true;
    for (const auto& f : r.elements) {
      const auto& m = f.matrix();
      unipotent = unipotent && m[0][0] == 1 && m[0][1] == 0 && m[1][1] == 1;
    }
    c.expect(unipotent, [] { return std::string("non-unipotent element"); });
    c.note("structure", r.structure ? r.structure->str() : "");
  }
  auto& p = suite.check("Q={3,5}");
  CentralizerReport r = centralizer(product_triplet({3, 5}), std::nullopt);
  p.expect(r.complete && r.structure && r.structure->order == 15 &&
               r.structure->invariant_factors == std::vector<std::int64_t>{15},
           [&] { return str(to_json(r)); });
  p.note("structure", r.structure ? r.structure->str() : "");
  auto& triv = suite.check("trivial_data_on_Z3");
  AbGroup z3(0, {3});
  CentralizerReport rt = centralizer(Triplet(z3, Cocycle::trivial(z3), Character::trivial(z3)), std::nullopt);
  triv.expect(rt.structure && rt.structure->order == 2, [&] { return str(to_json(rt)); });
  return suite.json();
}

std::vector<std::pair<AlgElem, AlgElem>> pi_pairs(Sampler& s, const BasePtr& b, int n) {
  std::vector<std::pair<AlgElem, AlgElem>> out;
  for (int i = 0; i < n; ++i) out.emplace_back(s.alg_elem(b, 2), s.alg_elem(b, 2));
  return out;
}

Json suite_intertwiner(Sampler& s) {
  Suite suite("intertwiner");
  Triplet t = q_triplet(3);
  AbHom phi(t.group, t.group, {{1, 0}, {1, 1}});
  std::vector<AffineSL2> aff;
  for (int i = 0; i < 20; ++i) aff.push_back(s.affine());
  auto pairs = pi_pairs(s, t.base(), 100);

  auto& ok = suite.check("unipotent_phi_on_q3");
  PiReport r = verify_pi(build_pi(t, t, phi), pairs, aff);
  ok.expect(r.ok, [&] { return r.failures.empty() ? std::string() : r.failures.front(); });
  ok.note("pairs", r.checked);

  // With odd |H| the sign character c_phi is trivial, so the gcd exponent has
  // nothing to act on; a group with 2-torsion exposes it.
  auto& mut = suite.check("dropping_gcd_exponent_breaks_equivariance");
  PiPhi noop = build_pi(t, t, phi, true);
  mut.note("c_phi_trivial_on_q3", noop.c_phi().is_trivial());
  AbGroup g2(0, {2, 2});
  Cocycle m2 = mu_q(2);
  Triplet ta(g2, m2, Character(g2, {Phase(1, 2), Phase()}), "sign character");
  Triplet tb(g2, m2, Character::trivial(g2), "trivial character");
  AbHom id = AbHom::identity(g2);
  auto pairs2 = pi_pairs(s, ta.base(), 50);
  PiReport good = verify_pi(build_pi(ta, tb, id), pairs2, aff);
  PiReport bad = verify_pi(build_pi(ta, tb, id, true), pairs2, aff);
  mut.expect(good.ok, [&] { return good.failures.empty() ? std::string() : good.failures.front(); });
  mut.expect(!bad.ok, [] { return std::string("mutated intertwiner passed"); });
  if (!bad.failures.empty()) mut.note("mutation_counterexample", bad.failures.front());

  auto& yes = suite.check("conjugacy_witnesses_verify");
  Triplet sq(t.group, t.mu, t.chi.power(Int(2)), "q=3, chi squared");
  for (const Triplet* other : {&t, &sq}) {
    ConjugacyReport rep = decide_conjugacy(t, *other, std::nullopt);
    yes.note(other->label, verdict_name(rep.verdict));
    if (rep.verdict != Verdict::Yes) continue;
    PiReport pr = verify_pi(build_pi(t, *other, *rep.witness), pi_pairs(s, t.base(), 30), {});
    yes.expect(pr.ok, [&] { return pr.failures.empty() ? std::string() : pr.failures.front(); });
  }
  return suite.json();
}

Json suite_factor(Sampler& s) {
  Suite suite("factor");
  auto& q = suite.check("mu_q_nondegenerate");
  for (std::int64_t n : {3, 5, 7}) q.expect(is_nondegenerate(mu_q(n)).nondegenerate, [&] { return std::to_string(n); });
  auto& triv = suite.check("trivial_cocycle_degenerate");
  AbGroup z3(0, {3});
  Nondegeneracy nt = is_nondegenerate(Cocycle::trivial(z3));
  triv.expect(!nt.nondegenerate && nt.witness && !z3.is_zero(*nt.witness), [] { return std::string("no witness"); });
  auto& routes = suite.check("exhaustive_and_smith_routes_agree");
  const std::vector<std::vector<std::int64_t>> groups = {{2, 2}, {3, 3}, {2, 4}, {4, 4}, {2, 2, 2}, {3, 9}, {2, 6, 6}};
  for (int i = 0; i < 40; ++i) {
    AbGroup G(0, groups[static_cast<std::size_t>(s.uniform(0, groups.size() - 1))]);
    Cocycle mu = s.random_bichar(G);
    Nondegeneracy a = is_nondegenerate(mu), b = nondegenerate_by_smith(mu);
    bool wit_ok = b.nondegenerate || [&] {
      for (std::size_t j = 0; j < G.rank(); ++j)
        if (!star_bicharacter(mu)(*b.witness, G.generator(j)).is_zero()) return false;
      return true;
    }();
    routes.expect(a.nondegenerate == b.nondegenerate && wit_ok, [&] { return str(to_json(mu)); });
  }
  auto& z2 = suite.check("det_form_on_Z2_rational_phases");
  for (auto th : {Phase(1, 16), Phase(3, 16), Phase(1, 3)}) {
    Nondegeneracy n = is_nondegenerate(mu_det(th));
    z2.note(th.str(), to_json(n));
    // every rational phase leaves a radical: lcm-multiples of a basis vector
    z2.expect(!n.nondegenerate, [&] { return th.str(); });
  }
  return suite.json();
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names = {"lattice",     "cohomology",  "relations",   "telescoping",
                                                 "malleability", "centralizer", "intertwiner", "factor"};
  return names;
}

Json run_selftest(const SelftestOptions& options) {
  if (options.suite) {
    const auto& n = selftest_suites();
    if (std::find(n.begin(), n.end(), *options.suite) == n.end()) throw InvalidArgument("unknown suite " + *options.suite);
  }
  std::vector<std::int64_t> qs = options.q ? std::vector<std::int64_t>{*options.q} : std::vector<std::int64_t>{3, 5};
  Json suites = Json::array();
  bool ok = true;
  std::uint64_t k = 0;
  for (const auto& name : selftest_suites()) {
    ++k;
    if (options.suite && *options.suite != name) continue;
    Sampler s(options.seed * 1000 + k);  // each suite has its own stream
    Json r;
    if (name == "lattice") r = suite_lattice(s);
    else if (name == "cohomology") r = suite_cohomology(s);
    else if (name == "relations") r = suite_relations(s);
    else if (name == "telescoping") r = suite_telescoping(s);
    else if (name == "malleability") r = suite_malleability(s, qs);
    else if (name == "centralizer") r = suite_centralizer();
    else if (name == "intertwiner") r = suite_intertwiner(s);
    else r = suite_factor(s);
    ok = ok && r["ok"].get<bool>();
    suites.push_back(std::move(r));
  }
  return {{"ok", ok}, {"seed", options.seed}, {"suites", suites}};
}

Json malleability_report(const Triplet& t, std::uint64_t seed) {
  Suite suite("malleability");
  Sampler s(seed);
  MalleabilityFlow flow(t.base());
  malleability_checks(suite, s, t, "");
  Json j = suite.json();
  j["label"] = t.label;
  j["sqrt_order"] = flow.sqrt_order().get_si();
  j["V_terms"] = flow.v().size();
  return j;
}

}  // namespace tbs
