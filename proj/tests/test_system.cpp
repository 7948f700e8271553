#include <doctest.h>

#include "jacgb/system.hpp"

using namespace jacgb;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_system(6), std::domain_error);
  CHECK_THROWS_AS(build_system(3), std::domain_error);
  CHECK_THROWS_AS(build_system(9), std::domain_error);
  CHECK_THROWS_AS(build_system(0), std::domain_error);
  CHECK_THROWS_AS(build_system(-5), std::domain_error);
  CHECK_NOTHROW(build_system(4));
  // The message quotes the constraint.
  try {
    build_system(6);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("3∤m>3") != std::string::npos);
  }
}

TEST_CASE("system m=4") {
  SystemInstance sys = build_system(4);
  RingPtr ring = sys.ring;
  REQUIRE(sys.equations.size() == 5);
  REQUIRE(sys.weights == std::vector<long long>{4, 5, 6, 5, 6});

  SUBCASE("first equation") {
    Polynomial expected = Polynomial::c(ring, 1, 2).scaled(Rational(3)) +
                          Polynomial::c(ring, 3).scaled(Rational(3));
    CHECK(sys.equations[0] == expected);
  }
  SUBCASE("last equation carries +y") {
    const Polynomial& e5 = sys.equations[4];
    CHECK(e5.weight() == 6);
    bool has_y = false;
    for (const Term& t : e5.terms())
      if (t.mono[ring->y_slot()] == 1 && t.mono.total_degree() == 1 &&
          t.coeff == 1)
        has_y = true;
    CHECK(has_y);
  }
}

TEST_CASE("closed-form generator") {
  RingPtr ring = make_ring(8);
  auto c = [&](int k, int e = 1) { return Polynomial::c(ring, k, e); };

  SUBCASE("k=1") {
    CHECK(build_Ek_closed_form(ring, 1) ==
          c(1, 2).scaled(Rational(3)) + c(3).scaled(Rational(3)));
  }
  SUBCASE("k=3 cube term has coefficient 1") {
    Polynomial e3 = build_Ek_closed_form(ring, 3);
    Rational cube_coeff(0);
    Monomial cube(ring->num_vars());
    cube[ring->c_slot(1)] = 3;
    for (const Term& t : e3.terms())
      if (t.mono == cube) cube_coeff = t.coeff;
    CHECK(cube_coeff == Rational(1));
  }
  SUBCASE("k=5 full expansion") {
    Polynomial expected = (c(1) * c(2, 2)).scaled(Rational(3)) +
                          (c(1, 2) * c(3)).scaled(Rational(3)) +
                          c(3, 2).scaled(Rational(3)) +
                          (c(2) * c(4)).scaled(Rational(6)) +
                          (c(1) * c(5)).scaled(Rational(6)) +
                          c(7).scaled(Rational(3));
    CHECK(build_Ek_closed_form(ring, 5) == expected);
  }
  SUBCASE("k out of range") {
    CHECK_THROWS_AS(build_Ek_closed_form(ring, 0), std::domain_error);
    CHECK_THROWS_AS(build_Ek_closed_form(ring, 8), std::domain_error);
  }
}

TEST_CASE("closed form matches the series expansion") {
  for (int m : {4, 5, 7, 8}) {
    SystemInstance sys = build_system(m);
    for (int k = 1; k <= m - 1; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(build_Ek_closed_form(sys.ring, k) ==
            sys.equations[static_cast<std::size_t>(k) - 1]);
    }
  }
}

TEST_CASE("homogeneity") {
  for (int m : {4, 5, 7}) {
    SystemInstance sys = build_system(m);
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
      CAPTURE(m);
      CAPTURE(i);
      auto w = sys.equations[i].weight();
      REQUIRE(w.has_value());
      CHECK(*w == sys.weights[i]);
    }
  }
}
