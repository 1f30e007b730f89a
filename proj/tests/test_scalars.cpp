#include <doctest.h>

#include "tbs/scalars.hpp"

using namespace tbs;

TEST_SUITE("scalars") {

TEST_CASE("phase addition wraps around the circle") {
  CHECK(Phase(1, 3) + Phase(2, 3) == Phase());
  CHECK(Phase(1, 2) + Phase(1, 3) == Phase(5, 6));
  CHECK(Phase(0, 1) + Phase(7, 9) == Phase(7, 9));
  CHECK((Phase(1, 3) + Phase(2, 3)).str() == "0");
  CHECK(Phase(-1, 4) == Phase(3, 4));
  CHECK(Phase(6, 8).den() == 4);
}

TEST_CASE("phase scaling") {
  CHECK(Phase(1, 3).scaled(3) == Phase());
  CHECK(Phase(1, 4).scaled(-1) == Phase(3, 4));
  CHECK(Phase(1, 6).scaled(4) == Phase(2, 3));
  CHECK(Phase(1, 6).scaled(Int("100000000000000000001")) == Phase(1, 6).scaled(Int(5)));
}

TEST_CASE("phase division picks a root") {
  for (std::int64_t n : {1, 2, 3, 7}) {
    Phase p(5, 12);
    CHECK(p.divided(n).scaled(n) == p);
  }
}

TEST_CASE("phase parsing") {
  CHECK(Phase::parse("3/4") == Phase(3, 4));
  CHECK(Phase::parse("-1/16") == Phase(15, 16));
  CHECK(Phase::parse("5") == Phase());
  CHECK_THROWS(Phase::parse("1/0"));
  CHECK_THROWS(Phase::parse("abc"));
}

TEST_CASE("roots of unity in canonical form") {
  Cyclotomic one = Cyclotomic::root_of_unity(Phase());
  CHECK(one.order() == 1);
  CHECK(one.coeffs() == std::vector<Rational>{1});
  Cyclotomic m1 = Cyclotomic::root_of_unity(Phase(1, 2));
  CHECK(m1.order() == 2);
  CHECK(m1.coeffs() == std::vector<Rational>{-1});
  // zeta_3^2 = -1 - zeta_3 modulo x^2 + x + 1
  CHECK(Cyclotomic::root_of_unity(Phase(2, 3)) == Cyclotomic::from_coeffs(3, {Rational(-1), Rational(-1)}));
}

TEST_CASE("cyclotomic ring operations") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(Phase(1, 3));
  Cyclotomic z3sq = Cyclotomic::root_of_unity(Phase(2, 3));
  CHECK(z3 * z3sq == Cyclotomic(1L));
  CHECK((Cyclotomic(1L) + z3 + z3sq).is_zero());
  CHECK(Cyclotomic::root_of_unity(Phase(1, 5)).conj() == Cyclotomic::root_of_unity(Phase(4, 5)));
  CHECK(-(-z3) == z3);
  // mixed orders meet in the lcm field
  Cyclotomic i = Cyclotomic::root_of_unity(Phase(1, 4));
  CHECK(i * z3 == Cyclotomic::root_of_unity(Phase(7, 12)));
  CHECK(i * i == Cyclotomic(-1L));
}

TEST_CASE("rebasing") {
  Cyclotomic z2 = Cyclotomic::root_of_unity(Phase(1, 2));
  Cyclotomic r = z2.rebased(4);
  CHECK(r.order() == 4);
  CHECK(r == Cyclotomic::root_of_unity(Phase(2, 4)));
  CHECK(Cyclotomic(1L).rebased(12).order() == 12);
  CHECK(Cyclotomic(1L).rebased(12) == Cyclotomic(1L));
  Cyclotomic z3 = Cyclotomic::root_of_unity(Phase(1, 3));
  CHECK(z3.rebased(6) == Cyclotomic::root_of_unity(Phase(2, 6)).rebased(6));
  CHECK_THROWS(z3.rebased(4));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

}
