#include <doctest.h>

#include "jacgb/errors.hpp"
#include "jacgb/laurent_series.hpp"
#include "jacgb/system.hpp"

using namespace jacgb;

namespace {

// Plain successive multiplication with its own convolution; the oracle the
// squaring path is checked against.
LaurentSeries successive_pow(const LaurentSeries& s, unsigned n) {
  LaurentSeries acc = s;
  for (unsigned step = 2; step <= n; ++step) {
    const LaurentSeries& a = acc;
    int floor = std::max(a.truncation() + s.top_degree(),
                         s.truncation() + a.top_degree());
    LaurentSeries next(s.ring(), floor);
    for (int e = floor; e <= a.top_degree() + s.top_degree(); ++e) {
      Polynomial sum = Polynomial::zero(s.ring());
      for (const auto& [i, ci] : a.coeffs()) {
        int j = e - i;
        if (j < s.truncation()) continue;
        sum += ci * coeff_at(s, j);
      }
      next.set_coeff(e, sum);
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("generic_C shape") {
  RingPtr ring = make_ring(4);
  SUBCASE("smallest window") {
    LaurentSeries c = generic_C(ring, -1);
    CHECK(c.top_degree() == 1);
    CHECK(coeff_at(c, 1) == Polynomial::constant(ring, Rational(1)));
    CHECK(coeff_at(c, 0).is_zero());
    CHECK(coeff_at(c, -1) == Polynomial::c(ring, 1));
  }
  SUBCASE("full window") {
    LaurentSeries c = generic_C(ring, -5);
    for (int k = 1; k <= 5; ++k) CHECK(coeff_at(c, -k) == Polynomial::c(ring, k));
    CHECK(coeff_at(c, 0).is_zero());
    CHECK(coeff_at(c, 7).is_zero());  // above the top is exactly zero
  }
  SUBCASE("bad truncation") {
    CHECK_THROWS_AS(generic_C(ring, 0), std::domain_error);
    CHECK_THROWS_AS(generic_C(ring, -6), std::domain_error);  // needs C_{-6}
  }
}

TEST_CASE("cube coefficients") {
  RingPtr ring = make_ring(7);  // room up to C_{-8}
  LaurentSeries c3 = series_pow(generic_C(ring, -(ring->m() + 1)), 3);

  auto c = [&](int k, int e = 1) { return Polynomial::c(ring, k, e); };

  CHECK(coeff_at(c3, 3) == Polynomial::constant(ring, Rational(1)));
  CHECK(coeff_at(c3, 2).is_zero());
  CHECK(coeff_at(c3, 1) == c(1).scaled(Rational(3)));
  CHECK(coeff_at(c3, 0) == c(2).scaled(Rational(3)));
  // Hand-expanded: 3C_{-1}^2+3C_{-3}; 6C_{-1}C_{-2}+3C_{-4}; ...
  CHECK(coeff_at(c3, -1) == c(1, 2).scaled(Rational(3)) + c(3).scaled(Rational(3)));
  CHECK(coeff_at(c3, -2) ==
        (c(1) * c(2)).scaled(Rational(6)) + c(4).scaled(Rational(3)));
  CHECK(coeff_at(c3, -3) == c(1, 3) + c(2, 2).scaled(Rational(3)) +
                                (c(1) * c(3)).scaled(Rational(6)) +
                                c(5).scaled(Rational(3)));
  CHECK(coeff_at(c3, -4) == (c(1, 2) * c(2)).scaled(Rational(3)) +
                                (c(2) * c(3)).scaled(Rational(6)) +
                                (c(1) * c(4)).scaled(Rational(6)) +
                                c(6).scaled(Rational(3)));
  CHECK(coeff_at(c3, -5) == (c(1) * c(2, 2)).scaled(Rational(3)) +
                                (c(1, 2) * c(3)).scaled(Rational(3)) +
                                c(3, 2).scaled(Rational(3)) +
                                (c(2) * c(4)).scaled(Rational(6)) +
                                (c(1) * c(5)).scaled(Rational(6)) +
                                c(7).scaled(Rational(3)));
}

TEST_CASE("window bookkeeping") {
  RingPtr ring = make_ring(4);
  LaurentSeries c = generic_C(ring, -5);
  SUBCASE("power of one is the identity") {
    CHECK(series_pow(c, 1) == c);
  }
  SUBCASE("cube window floor") {
    LaurentSeries c3 = series_pow(c, 3);
    CHECK(c3.truncation() == -3);  // -5 + 2*top
    CHECK_NOTHROW(coeff_at(c3, -3));
    CHECK_THROWS_AS(coeff_at(c3, -4), TruncationError);
  }
  SUBCASE("m-th power reaches exactly -2") {
    LaurentSeries cm = series_pow(c, 4);
    CHECK(cm.truncation() == -2);
    CHECK_NOTHROW(coeff_at(cm, -2));
    CHECK_THROWS_AS(coeff_at(cm, -3), TruncationError);
  }
  SUBCASE("zero exponent rejected") {
    CHECK_THROWS_AS(series_pow(c, 0), std::domain_error);
  }
}

TEST_CASE("squaring equals successive multiplication") {
  for (int m : {4, 11}) {
    RingPtr ring = make_ring(m);
    LaurentSeries c = generic_C(ring, -std::min(12, m + 1));
    for (unsigned n = 2; n <= 8; ++n) {
      LaurentSeries fast = series_pow(c, n);
      LaurentSeries naive = successive_pow(c, n);
      CHECK(fast == naive);
    }
  }
}

TEST_CASE("specializations after reduction") {
  // Reducing every cube coefficient by the triangular relations and then
  // setting C_{-1} = 0 leaves x^3 + 3C_{-2}; setting C_{-2} = 0 instead
  // leaves x^3 + 3C_{-1}x.
  const int m = 7;
  SystemInstance sys = build_system(m);
  RingPtr ring = sys.ring;
  LaurentSeries c3 = series_pow(generic_C(ring, -(m + 1)), 3);

  // Build relations R_k by reduction of the system itself.
  std::map<int, Polynomial> rels;
  for (int k = 1; k <= m - 1; ++k) {
    Polynomial p = sys.equations[static_cast<std::size_t>(k) - 1].scaled(
        make_rational(1, 3));
    for (const auto& [kk, r] : rels) p = p.substitute(ring->c_slot(kk + 2), -r);
    rels.emplace(k, p - Polynomial::c(ring, k + 2));
  }

  const std::size_t slot1 = ring->c_slot(1);
  const std::size_t slot2 = ring->c_slot(2);
  Polynomial zero = Polynomial::zero(ring);

  for (int e = c3.truncation(); e <= 3; ++e) {
    Polynomial reduced = coeff_at(c3, e);
    for (const auto& [k, r] : rels)
      reduced = reduced.substitute(ring->c_slot(k + 2), -r);

    Polynomial at_c1_zero = reduced.substitute(slot1, zero);
    Polynomial at_c2_zero = reduced.substitute(slot2, zero);
    if (e == 3) {
      CHECK(at_c1_zero == Polynomial::constant(ring, Rational(1)));
      CHECK(at_c2_zero == Polynomial::constant(ring, Rational(1)));
    } else if (e == 1) {
      CHECK(at_c1_zero.is_zero());
      CHECK(at_c2_zero == Polynomial::c(ring, 1).scaled(Rational(3)));
    } else if (e == 0) {
      CHECK(at_c1_zero == Polynomial::c(ring, 2).scaled(Rational(3)));
      CHECK(at_c2_zero.is_zero());
    } else {
      CHECK(at_c1_zero.is_zero());
      CHECK(at_c2_zero.is_zero());
    }
  }
}
