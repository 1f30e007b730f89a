#include <doctest.h>

#include <algorithm>

#include "tbs/abelian.hpp"
#include "tbs/errors.hpp"

using namespace tbs;

TEST_SUITE("abelian") {

TEST_CASE("element arithmetic") {
  AbGroup g33(0, {3, 3});
  CHECK(g33.add(g33.make({2, 1}), g33.make({2, 2})) == g33.make({1, 0}));
  CHECK(g33.neg(g33.make({1, 0})) == g33.make({2, 0}));
  AbGroup z(1, {});
  CHECK(z.is_zero(z.add(z.make({5}), z.make({-5}))));
  CHECK(g33.make({4, -1}) == g33.make({1, 2}));
  CHECK(g33.order() == 9);
  CHECK(g33.element_order(g33.make({1, 2})) == 3);
  CHECK(z.element_order(z.make({2})) == 0);
}

TEST_CASE("indexing enumerates a finite group") {
  AbGroup G(0, {2, 4});
  auto all = G.elements();
  CHECK(all.size() == 8);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(G.index_of(all[i]) == i);
    CHECK(G.element_at(i) == all[i]);
  }
}

TEST_CASE("invariant factors") {
  CHECK(invariants(AbGroup(0, {2, 3})) == invariants(AbGroup(0, {6})));
  CHECK_FALSE(invariants(AbGroup(0, {2, 2})) == invariants(AbGroup(0, {4})));
}

TEST_CASE("homomorphism application") {
  AbGroup G(0, {3, 3});
  CHECK(AbHom::identity(G).apply(G.make({1, 2})) == G.make({1, 2}));
  AbHom u(G, G, {{1, 0}, {1, 1}});
  CHECK(u.apply(G.make({1, 0})) == G.make({1, 1}));
}

TEST_CASE("homomorphisms must respect orders") {
  AbGroup z3(0, {3}), z9(0, {9});
  CHECK_THROWS_AS(AbHom(z3, z9, {{1}}), ValidationError);
  CHECK_NOTHROW(AbHom(z3, z9, {{3}}));
}

TEST_CASE("isomorphism tests") {
  AbGroup g33(0, {3, 3}), z9(0, {9}), z2(2, {});
  CHECK(is_isomorphism(AbHom::identity(g33)));
  CHECK_FALSE(is_isomorphism(AbHom(z9, z9, {{3}})));
  CHECK(is_isomorphism(AbHom(z2, z2, {{1, 1}, {0, 1}})));
  CHECK_FALSE(is_isomorphism(AbHom(z2, z2, {{2, 0}, {0, 1}})));
  CHECK(is_isomorphism_by_lattice(AbHom(z2, z2, {{1, 1}, {0, 1}})));
}

TEST_CASE("automorphism counts") {
  CHECK(enumerate_automorphisms(AbGroup(0, {3})).size() == 2);
  CHECK(enumerate_automorphisms(AbGroup(0, {3, 3})).size() == 48);
  CHECK(enumerate_automorphisms(AbGroup(0, {2, 4})).size() == 8);
  CHECK_THROWS(enumerate_automorphisms(AbGroup(1, {})));
}

TEST_CASE("isomorphism enumeration") {
  auto none = enumerate_isomorphisms(AbGroup(0, {3, 3}), AbGroup(0, {5, 5}), std::nullopt);
  CHECK(none.maps.empty());
  CHECK(none.complete);
  auto z3 = enumerate_isomorphisms(AbGroup(0, {3}), AbGroup(0, {3}), std::nullopt);
  CHECK(z3.maps.size() == 2);
  CHECK(z3.complete);
  AbGroup z2(2, {});
  auto b1 = enumerate_isomorphisms(z2, z2, 1);
  CHECK_FALSE(b1.complete);
  std::size_t signed_perms = 0;
  for (const auto& f : b1.maps) {
    const auto& m = f.matrix();
    bool perm = (m[0][1] == 0 && m[1][0] == 0) || (m[0][0] == 0 && m[1][1] == 0);
    if (perm) ++signed_perms;
  }
  CHECK(signed_perms == 8);
  // every 2x2 matrix with entries in {-1, 0, 1} and |det| = 1
  std::size_t expected = 0;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d)
          if (std::abs(a * d - b * c) == 1) ++expected;
  CHECK(b1.maps.size() == expected);
}

TEST_CASE("characters") {
  AbGroup G(0, {3, 3});
  Character chi(G, {Phase(1, 3), Phase()});
  CHECK(chi(G.make({1, 0})) == Phase(1, 3));
  CHECK(chi(G.zero()) == Phase());
  CHECK(chi(G.make({0, 2})) == Phase());
  CHECK(chi.power(Int(2))(G.make({1, 0})) == Phase(2, 3));
  CHECK_THROWS_AS(Character(G, {Phase(1, 4), Phase()}), ValidationError);
  CHECK(all_characters(G).size() == 9);
  AbHom u(G, G, {{1, 0}, {1, 1}});
  CHECK(chi.pullback(u) == chi);
}

TEST_CASE("structure of automorphism subgroups") {
  AbGroup G(0, {3, 3});
  std::vector<AbHom> unip;
  for (std::int64_t t = 0; t < 3; ++t) unip.emplace_back(G, G, IntRows{{1, 0}, {t, 1}});
  GroupStructure s = group_structure(unip);
  CHECK(s.order == 3);
  CHECK(s.str() == "Z/3");
  CHECK(group_structure({AbHom::identity(G)}).str() == "trivial");
  GroupStructure all = group_structure(enumerate_automorphisms(G));
  CHECK(all.order == 48);
  CHECK_FALSE(all.abelian);
  CHECK_THROWS(group_structure({AbHom(G, G, {{1, 0}, {1, 1}})}));
}

}
