#include <doctest.h>

#include "tbs/catalog.hpp"
#include "tbs/sampling.hpp"

using namespace tbs;

TEST_SUITE("lambda") {

TEST_CASE("addition of finitely supported maps") {
  AbGroup G(0, {3, 3});
  AbElem g = G.make({1, 0}), h = G.make({0, 1});
  CHECK(oplus_add(G, lambda_h(G, h), oplus_neg(G, lambda_h(G, h))).is_zero());
  CHECK(oplus_add(G, lambda_h(G, g), lambda_h(G, h)) == lambda_h(G, G.add(g, h)));
  OplusElem l = lambda_h(G, g);
  REQUIRE(l.support.size() == 2);
  CHECK(*l.at(LatticePoint()) == G.make({2, 0}));
  CHECK(*l.at(constants().e1) == g);
  CHECK(is_zero_sum(G, l));
  CHECK(lambda_h(G, G.zero()).is_zero());
  CHECK(make_oplus(G, {{{0, 0}, g}, {{0, 0}, G.neg(g)}}).is_zero());
}

TEST_CASE("affine relocation") {
  AbGroup G(0, {3, 3});
  AbElem h = G.make({1, 2});
  const auto& c = constants();
  OplusElem l = lambda_h(G, h);
  CHECK(act_on_oplus(AffineSL2(), l) == l);
  OplusElem moved = act_on_oplus(c.xi, l);
  CHECK(moved == make_oplus(G, {{c.e1, G.neg(h)}, {c.e2, h}}));
  CHECK(supported_on_D(l));
  CHECK_FALSE(supported_on_D(moved));
  CHECK(supported_on_D(OplusElem{}));
  OplusElem onD = make_oplus(G, {{{-3, 0}, h}, {{5, 0}, G.neg(h)}});
  CHECK(act_on_oplus(AffineSL2::linear(c.delta), onD) == onD);
}

TEST_CASE("twisting phases") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  OplusElem a = lambda_h(G, G.make({1, 0})), b = lambda_h(G, G.make({0, 1}));
  CHECK(mu_tilde(m, a, OplusElem{}) == Phase());
  CHECK(mu_tilde(Cocycle::trivial(G), a, b) == Phase());
  CHECK(mu_tilde(m, a, b) == Phase(2, 3));
  CHECK(mu_hat(m, OplusElem{}) == Phase());
  CHECK(mu_hat(Cocycle::trivial(G), a) == Phase());
  // spiral order 0, e1, (1,1), e2
  OplusElem l = make_oplus(G, {{{0, 0}, G.make({1, 0})}, {{1, 0}, G.make({2, 2})}, {{0, 1}, G.make({0, 1})}});
  CHECK(mu_hat(m, l) == Phase(2, 3));
  CHECK(mu_hat(m, a) == m(G.make({2, 0}), G.make({1, 0})));
}

}

TEST_SUITE("algebra") {

TEST_CASE("products of basis unitaries") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  BasePtr b = make_base(G, m);
  OplusElem l = lambda_h(G, G.make({1, 1}));
  AlgElem u = u_of(b, l);
  CHECK(u * AlgElem::one(b) == u);
  CHECK(AlgElem::one(b) * u == u);
  OplusElem nl = oplus_neg(G, l);
  CHECK(u * u_of(b, nl) == AlgElem::one(b).scaled(Cyclotomic::root_of_unity(mu_tilde(m, l, nl))));
}

TEST_CASE("star and trace") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  BasePtr b = make_base(G, m);
  CHECK(AlgElem::one(b).star() == AlgElem::one(b));
  Sampler s(3);
  for (int i = 0; i < 20; ++i) {
    AlgElem a = s.alg_elem(b, 2);
    CHECK(a.star().star() == a);
  }
  OplusElem l = make_oplus(G, {{{0, 0}, G.make({1, 0})}, {{0, 0}, G.make({0, 2})}, {{1, 1}, G.make({2, 1})}});
  Cyclotomic c = Cyclotomic::root_of_unity(Phase(1, 4)) * Rational(3, 2);
  OplusElem nl = oplus_neg(G, l);
  AlgElem x = AlgElem::unit(b, l, c);
  CHECK(x.star() == AlgElem::unit(b, nl, c.conj() * Cyclotomic::root_of_unity(-mu_tilde(m, l, nl))));
  CHECK(AlgElem::one(b).trace() == Cyclotomic(1L));
  CHECK(u_of(b, l).trace().is_zero());
}

TEST_CASE("conditional expectation onto the zero-sum part") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  BasePtr b = make_base(G, m);
  AlgElem z = u_of(b, lambda_h(G, G.make({1, 0})));
  AlgElem nz = AlgElem::unit(b, make_oplus(G, {{{0, 0}, G.make({1, 0})}}), Cyclotomic(2L));
  CHECK(restrict_to_lambda(z) == z);
  CHECK(restrict_to_lambda(nz).is_zero());
  CHECK(restrict_to_lambda(z + nz) == z);
  CHECK(is_lambda_supported(z));
  CHECK_FALSE(is_lambda_supported(z + nz));
}

TEST_CASE("tensor products") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  BasePtr b = make_base(G, m);
  AbElem g = G.make({1, 2}), h = G.make({2, 0});
  CHECK(u_tensor(b, g, G.zero()) * u_tensor(b, G.zero(), h) == u_tensor(b, g, h));
  TensorElem x = u_tensor(b, g, G.neg(g));
  Cyclotomic ph = Cyclotomic::root_of_unity(-m(g, G.neg(g)) - m(G.neg(g), g));
  CHECK(x.star() == u_tensor(b, G.neg(g), g).scaled(ph));
}

TEST_CASE("malleability unitary and flow") {
  Triplet t = q_triplet(3);
  BasePtr b = t.base();
  MalleabilityFlow flow(b);
  CHECK(flow.sqrt_order() == 3);
  CHECK(flow.v() == malleability_unitary(b));
  Sampler s(5);
  for (int i = 0; i < 5; ++i) {
    TensorElem x = s.tensor_elem(b);
    CHECK(flow.apply(0, x) == x);
  }
  AbElem g = t.group.make({1, 1});
  CHECK(flow.apply(1, u_tensor(b, g, t.group.zero())) == u_tensor(b, t.group.zero(), g));
  TensorElem w = flow.w(Rational(1, 3));
  CHECK(w * w.star() == TensorElem::one(b));

  AbGroup z3(0, {3});
  CHECK_THROWS_AS(malleability_unitary(make_base(z3, Cocycle::trivial(z3))), InvalidArgument);
  AbGroup z2(2, {});
  CHECK_THROWS(malleability_unitary(make_base(z2, mu_det(Phase(1, 3)))));
}

TEST_CASE("diagonal character action") {
  Triplet t = q_triplet(3);
  Sampler s(9);
  TensorElem x = s.tensor_elem(t.base());
  CHECK(diagonal_character_action(Character::trivial(t.group), x) == x);
  AlgElem a = s.alg_elem(t.base(), 2);
  CHECK(diagonal_character_action(Character::trivial(t.group), a) == a);
}

}
