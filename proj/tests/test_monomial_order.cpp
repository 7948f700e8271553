#include <doctest.h>

#include <random>

#include "jacgb/errors.hpp"
#include "jacgb/monomial_order.hpp"
#include "jacgb/ring.hpp"

using namespace jacgb;

namespace {

Monomial mono_c(const Ring& ring, std::initializer_list<std::pair<int, int>> parts) {
  Monomial m(ring.num_vars());
  for (auto [k, e] : parts) m[ring.c_slot(k)] = e;
  return m;
}

Monomial random_monomial(const Ring& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 4);
  Monomial m(ring.num_vars());
  for (std::size_t i = 0; i < ring.num_vars(); ++i) m[i] = exp(rng);
  return m;
}

}  // namespace

TEST_CASE("order matrix validation") {
  // Rank-deficient: duplicated row.
  CHECK_THROWS_AS(MonomialOrder({{1, 1}, {1, 1}}), std::invalid_argument);
  // First row must be strictly positive.
  CHECK_THROWS_AS(MonomialOrder({{1, 0}, {0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOrder({}), std::invalid_argument);
  CHECK_NOTHROW(MonomialOrder({{2, 3}, {0, -1}}));
}

TEST_CASE("weighted order ties") {
  RingPtr ring = make_ring(4);
  const MonomialOrder& ord = ring->order();

  SUBCASE("equal monomials") {
    Monomial u = mono_c(*ring, {{3, 2}});
    CHECK(ord.compare(u, u) == 0);
  }
  SUBCASE("C_{-5} beats C_{-2}^2 at weight 6") {
    Monomial u = mono_c(*ring, {{5, 1}});
    Monomial v = mono_c(*ring, {{2, 2}});
    CHECK(ord.weighted_degree(u) == 6);
    CHECK(ord.weighted_degree(v) == 6);
    CHECK(ord.compare(u, v) > 0);
  }
  SUBCASE("C_{-1}^3 loses to C_{-2}^2 at weight 6") {
    Monomial u = mono_c(*ring, {{1, 3}});
    Monomial v = mono_c(*ring, {{2, 2}});
    CHECK(ord.compare(u, v) < 0);
  }
  SUBCASE("y loses to every C monomial of its weight") {
    Monomial u(ring->num_vars());
    u[ring->y_slot()] = 1;
    Monomial v = mono_c(*ring, {{1, 3}});  // weight 6 = m+2
    CHECK(ord.weighted_degree(u) == 6);
    CHECK(ord.compare(u, v) < 0);
    Monomial w = mono_c(*ring, {{5, 1}});
    CHECK(ord.compare(u, w) < 0);
  }
  SUBCASE("dimension mismatch") {
    Monomial small(3);
    CHECK_THROWS_AS(ord.compare(small, small), RingMismatchError);
  }
}

TEST_CASE("strict total order properties") {
  RingPtr ring = make_ring(5);
  const MonomialOrder& ord = ring->order();
  std::mt19937 rng(42);
  for (int round = 0; round < 300; ++round) {
    Monomial a = random_monomial(*ring, rng);
    Monomial b = random_monomial(*ring, rng);
    Monomial c = random_monomial(*ring, rng);

    // Antisymmetry, and equality only on identical exponent vectors.
    CHECK(ord.compare(a, b) == -ord.compare(b, a));
    if (ord.compare(a, b) == 0) CHECK(a == b);

    // Transitivity.
    if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0)
      CHECK(ord.compare(a, c) <= 0);

    // Multiplicativity: a < b implies a*w < b*w.
    Monomial w = random_monomial(*ring, rng);
    CHECK(ord.compare(a.times(w), b.times(w)) == ord.compare(a, b));
  }
}

TEST_CASE("order matrix shape matches the construction") {
  RingPtr ring = make_ring(4);
  const auto& rows = ring->order().matrix();
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<long long>{6, 5, 4, 3, 2, 6});
  CHECK(rows[1] == std::vector<long long>{0, 0, 0, 0, 0, -1});  // y
  CHECK(rows[2] == std::vector<long long>{0, 0, 0, 0, -1, 0});  // C_{-1}
  CHECK(rows[3] == std::vector<long long>{0, 0, 0, -1, 0, 0});  // C_{-2}
  CHECK(rows[4] == std::vector<long long>{0, 0, -1, 0, 0, 0});  // C_{-3}
  CHECK(rows[5] == std::vector<long long>{0, -1, 0, 0, 0, 0});  // C_{-4}
}
