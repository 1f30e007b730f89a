#include <doctest.h>

#include "tbs/catalog.hpp"
#include "tbs/sampling.hpp"

using namespace tbs;

TEST_SUITE("cocycle") {

TEST_CASE("evaluation of the standard examples") {
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  CHECK(m(G.make({1, 0}), G.make({0, 1})) == Phase(1, 3));
  CHECK(m(G.make({2, 1}), G.zero()) == Phase());
  CHECK(m(G.zero(), G.make({2, 1})) == Phase());
  Cocycle c = mu_det(Phase(1, 16));
  const AbGroup& Z2 = c.group();
  CHECK(c(Z2.make({0, 1}), Z2.make({1, 0})) == Phase(15, 16));
  CHECK(c(Z2.make({1, 0}), Z2.make({0, 1})) == Phase(1, 16));
}

TEST_CASE("bicharacter entries must be well defined") {
  AbGroup G(0, {3});
  CHECK_THROWS_AS(Cocycle::bichar(G, {{Phase(1, 2)}}), ValidationError);
  CHECK_NOTHROW(Cocycle::bichar(G, {{Phase(1, 3)}}));
}

TEST_CASE("table validation") {
  AbGroup G(0, {3});
  std::vector<Phase> v(9);
  v[1 * 3 + 0] = Phase(1, 3);
  try {
    Cocycle::table(G, v);
    FAIL("accepted a non-normalized table");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "normalization");
  }
  std::vector<Phase> w(9);
  w[1 * 3 + 1] = Phase(1, 3);
  try {
    Cocycle::table(G, w);
    FAIL("accepted a non-cocycle");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "cocycle_identity");
  }
}

TEST_CASE("table form agrees with the bicharacter") {
  Cocycle m = mu_q(3);
  Cocycle t = m.to_table();
  for (const auto& g : m.group().elements())
    for (const auto& h : m.group().elements()) CHECK(m(g, h) == t(g, h));
}

TEST_CASE("commutator form") {
  AbGroup G(0, {3});
  Bicharacter z = star_bicharacter(Cocycle::trivial(G));
  CHECK(z(G.make({1}), G.make({2})) == Phase());
  Cocycle m = mu_q(3);
  const AbGroup& H = m.group();
  Bicharacter s = star_bicharacter(m);
  CHECK(s(H.make({1, 0}), H.make({0, 1})) == Phase(1, 3));
  CHECK(s(H.make({0, 1}), H.make({1, 0})) == Phase(2, 3));
  CHECK(s.antisymmetric());
  CHECK(star_bicharacter(mu_det(Phase(1, 16))).matrix()[0][1] == Phase(1, 8));
  CHECK(star_bicharacter(mu_upper(Phase(1, 16))).matrix()[0][1] == Phase(1, 16));
}

TEST_CASE("cohomology classes") {
  Sampler s(7);
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  CHECK(cohomologous(m, m));
  Cocycle cob = add_coboundary(Cocycle::trivial(G), s.random_function(G, 12));
  CHECK(cohomologous(Cocycle::trivial(G), cob));
  CHECK_FALSE(cohomologous(m, Cocycle::trivial(G)));
}

TEST_CASE("coboundary witnesses") {
  Sampler s(11);
  Cocycle m = mu_q(3);
  const AbGroup& G = m.group();
  auto self = coboundary_witness(m, m);
  REQUIRE(self);
  for (const auto& p : *self) CHECK(p == Phase());

  Cocycle triv = Cocycle::trivial(G);
  Cocycle cob = add_coboundary(triv, s.random_function(G, 12));
  auto b = coboundary_witness(triv, cob);
  REQUIRE(b);
  for (const auto& g : G.elements())
    for (const auto& h : G.elements()) {
      Phase lhs = triv(g, h) - cob(g, h);
      Phase rhs = (*b)[G.index_of(g)] + (*b)[G.index_of(h)] - (*b)[G.index_of(G.add(g, h))];
      CHECK(lhs == rhs);
    }
  CHECK_FALSE(coboundary_witness(m, triv));
  AbGroup big(0, {5, 5, 5});
  CHECK_THROWS_AS(coboundary_witness(Cocycle::trivial(big), Cocycle::trivial(big)), Unsupported);
}

TEST_CASE("nondegeneracy") {
  for (std::int64_t q : {3, 5, 7}) CHECK(is_nondegenerate(mu_q(q)).nondegenerate);
  AbGroup z3(0, {3});
  Nondegeneracy n = is_nondegenerate(Cocycle::trivial(z3));
  CHECK_FALSE(n.nondegenerate);
  REQUIRE(n.witness);
  CHECK_FALSE(z3.is_zero(*n.witness));
}

TEST_CASE("rational determinant forms on Z^2 have a radical") {
  for (auto th : {Phase(1, 16), Phase(3, 16), Phase(2, 5)}) {
    Cocycle c = mu_det(th);
    Nondegeneracy n = is_nondegenerate(c);
    CHECK_FALSE(n.nondegenerate);
    REQUIRE(n.witness);
    const AbGroup& G = c.group();
    CHECK_FALSE(G.is_zero(*n.witness));
    Bicharacter s = star_bicharacter(c);
    for (std::size_t j = 0; j < G.rank(); ++j) CHECK(s(*n.witness, G.generator(j)) == Phase());
  }
  Nondegeneracy w = is_nondegenerate(mu_det(Phase(1, 16)));
  CHECK(*w.witness == AbGroup(2, {}).make({8, 0}));
}

}
