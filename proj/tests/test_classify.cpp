#include <doctest.h>

#include "tbs/catalog.hpp"
#include "tbs/classify.hpp"
#include "tbs/sampling.hpp"

using namespace tbs;

TEST_SUITE("dynamics") {

TEST_CASE("triplet validation") {
  AbGroup none(0, {});
  CHECK_THROWS_AS(Triplet(none, Cocycle::trivial(none), Character::trivial(none)), ValidationError);
  AbGroup a(0, {3}), b(0, {5});
  CHECK_THROWS_AS(Triplet(a, Cocycle::trivial(b), Character::trivial(a)), ValidationError);
}

TEST_CASE("group law of the affine extension") {
  Triplet t = q_triplet(3);
  const auto& c = constants();
  Character one = Character::trivial(t.group);
  Gamma0Elem x{one, c.e1, Matrix2{}}, y{one, c.e2, Matrix2{}};
  Gamma0Elem xy = gamma0_mul(t, x, y);
  CHECK(xy == Gamma0Elem{t.chi, LatticePoint(1, 1), Matrix2{}});
  Gamma0Elem yx = gamma0_mul(t, y, x);
  CHECK(yx.c == t.chi.power(Int(-1)));
  CHECK(gamma0_mul(t, Gamma0Elem::identity(t.group), xy) == xy);
}

TEST_CASE("identity acts trivially") {
  Triplet t = q_triplet(3);
  Sampler s(1);
  AlgElem x = s.alg_elem(t.base(), 2);
  CHECK(rho_apply(t, Gamma0Elem::identity(t.group), x) == x);
  CHECK(beta_apply(t, AffineSL2(), x) == x);
  AlgElem bad = s.alg_elem(t.base(), 2, 3, false) + AlgElem::unit(t.base(), make_oplus(t.group, {{{0, 0}, t.group.make({1, 0})}}));
  CHECK_THROWS_AS(beta_apply(t, AffineSL2(), bad), InvalidArgument);
}

TEST_CASE("covariance relations") {
  Sampler s(2);
  for (bool trivial_chi : {true, false}) {
    Triplet q = q_triplet(3);
    Triplet t(q.group, q.mu, trivial_chi ? Character::trivial(q.group) : q.chi);
    std::vector<RelationSample> samples;
    for (int i = 0; i < 10; ++i) samples.push_back({s.point(3), s.point(3), s.sl2(), s.alg_elem(t.base(), 2, 2, false)});
    samples.push_back({constants().e1, s.point(2), constants().xi.m(), s.alg_elem(t.base(), 2)});
    RelationReport r = verify_rho_relations(t, samples);
    CHECK(r.ok);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("weak mixing witnesses") {
  Triplet t = q_triplet(3);
  BasePtr b = t.base();
  CHECK(weak_mixing_witness(t, {AlgElem::one(b)}).is_zero());
  std::vector<AlgElem> u = {u_of(b, lambda_h(t.group, t.group.make({1, 0})))};
  LatticePoint k = weak_mixing_witness(t, u);
  CHECK(is_weak_mixing_witness(t, u, k));
  Sampler s(4);
  std::vector<AlgElem> mixed;
  for (int i = 0; i < 3; ++i) mixed.push_back(s.alg_elem(b, 2) + AlgElem::one(b));
  CHECK(is_weak_mixing_witness(t, mixed, weak_mixing_witness(t, mixed)));
}

TEST_CASE("dual action fixes exactly the zero-sum part") {
  Triplet t = q_triplet(3);
  BasePtr b = t.base();
  AlgElem z = u_of(b, lambda_h(t.group, t.group.make({1, 2})));
  AlgElem nz = AlgElem::unit(b, make_oplus(t.group, {{{2, 0}, t.group.make({1, 0})}}));
  CHECK(fixed_by_dual_action(t, z));
  CHECK_FALSE(fixed_by_dual_action(t, z + nz));
}

}

TEST_SUITE("classify") {

TEST_CASE("transport conditions") {
  Triplet t = q_triplet(3);
  ConditionFlags id = check_conditions(t, t, AbHom::identity(t.group));
  CHECK(id.cocycle);
  CHECK(id.character);
  ConditionFlags u = check_conditions(t, t, AbHom(t.group, t.group, {{1, 0}, {1, 1}}));
  CHECK(u.cocycle);
  CHECK(u.character);
  CHECK_THROWS(check_conditions(t, t, AbHom(t.group, t.group, {{1, 0}, {0, 0}})));
  AbGroup z2(2, {});
  AbHom flip(z2, z2, {{1, 0}, {0, -1}});
  Character chi(z2, {Phase(1, 2), Phase()});
  Triplet a = z2_triplet(mu_det(Phase(1, 16)), chi);
  CHECK_FALSE(check_conditions(a, a, flip).cocycle);
  Triplet q = z2_triplet(mu_det(Phase(1, 4)), chi);
  CHECK(check_conditions(q, q, flip).cocycle);
}

TEST_CASE("conjugacy decisions") {
  Triplet t = q_triplet(3);
  ConjugacyReport same = decide_conjugacy(t, t, std::nullopt);
  CHECK(same.verdict == Verdict::Yes);
  REQUIRE(same.witness);
  CHECK(check_conditions(t, t, *same.witness).cocycle);
  CHECK(decide_conjugacy(t, q_triplet(5), std::nullopt).verdict == Verdict::No);
  AbGroup z2(2, {});
  Character chi(z2, {Phase(1, 2), Phase()});
  ConjugacyReport z = decide_conjugacy(z2_triplet(mu_det(Phase(1, 16)), chi), z2_triplet(mu_det(Phase(3, 16)), chi), std::nullopt);
  CHECK(z.verdict == Verdict::No);
  CHECK(z.closed_form);
  ConjugacyReport neg = decide_conjugacy(z2_triplet(mu_upper(Phase(1, 16)), chi), z2_triplet(mu_upper(Phase(15, 16)), chi), std::nullopt);
  CHECK(neg.verdict == Verdict::Yes);
  REQUIRE(neg.witness);
  CHECK(check_conditions(z2_triplet(mu_upper(Phase(1, 16)), chi), z2_triplet(mu_upper(Phase(15, 16)), chi), *neg.witness).cocycle);
  Triplet sq(t.group, t.mu, t.chi.power(Int(2)));
  ConjugacyReport r = decide_conjugacy(t, sq, std::nullopt);
  CHECK(r.complete);
  CHECK_FALSE(r.closed_form);
}

TEST_CASE("unbounded search over free groups is inconclusive") {
  AbGroup G(1, {3});
  Triplet a(G, Cocycle::trivial(G), Character::trivial(G));
  Triplet b(G, Cocycle::trivial(G), Character(G, {Phase(1, 2), Phase()}));
  CHECK(decide_conjugacy_by_search(a, b, std::nullopt).verdict == Verdict::Unknown);
  CHECK(decide_conjugacy_by_search(a, a, 1).verdict == Verdict::Yes);
}

TEST_CASE("the intertwiner") {
  Triplet t = q_triplet(3);
  BasePtr b = t.base();
  PiPhi id = build_pi(t, t, AbHom::identity(t.group));
  Sampler s(6);
  for (int i = 0; i < 10; ++i) {
    AlgElem x = s.alg_elem(b, 2);
    CHECK(id.apply(x) == x);
  }
  PiPhi pi = build_pi(t, t, AbHom(t.group, t.group, {{1, 0}, {1, 1}}));
  AlgElem img = pi.apply(u_of(b, lambda_h(t.group, t.group.make({1, 2}))));
  REQUIRE(img.size() == 1);
  CHECK(img.terms().begin()->first == lambda_h(t.group, t.group.make({1, 0})));
  for (int i = 0; i < 10; ++i) {
    AlgElem x = s.alg_elem(b, 2);
    CHECK(pi.apply(x).trace() == x.trace());
  }
  std::vector<std::pair<AlgElem, AlgElem>> pairs;
  for (int i = 0; i < 10; ++i) pairs.emplace_back(s.alg_elem(b, 2), s.alg_elem(b, 2));
  CHECK(verify_pi(id, pairs, {}).ok);
  CHECK(verify_pi(pi, pairs, {s.affine(), s.affine()}).ok);
  Triplet other(t.group, t.mu, Character(t.group, {Phase(), Phase(1, 3)}));
  CHECK_THROWS(build_pi(t, other, AbHom::identity(t.group)));
}

TEST_CASE("centralizers") {
  CentralizerReport r = centralizer(q_triplet(3), std::nullopt);
  CHECK(r.complete);
  REQUIRE(r.elements.size() == 3);
  for (const auto& f : r.elements) {
    CHECK(f.matrix()[0] == std::vector<std::int64_t>{1, 0});
    CHECK(f.matrix()[1][1] == 1);
  }
  REQUIRE(r.structure);
  CHECK(r.structure->str() == "Z/3");
  AbGroup z3(0, {3});
  CentralizerReport triv = centralizer(Triplet(z3, Cocycle::trivial(z3), Character::trivial(z3)), std::nullopt);
  REQUIRE(triv.structure);
  CHECK(triv.structure->order == 2);
  CentralizerReport p = centralizer(product_triplet({3, 5}), std::nullopt);
  REQUIRE(p.structure);
  CHECK(p.structure->str() == "Z/15");
  AbGroup z2(2, {});
  CentralizerReport inf = centralizer(z2_triplet(mu_det(Phase(1, 16)), Character::trivial(z2)), std::nullopt);
  CHECK_FALSE(inf.complete);
  CHECK(inf.verdict == Verdict::Unknown);
}

}
