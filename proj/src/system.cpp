#include "jacgb/system.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

void validate_system_m(int m) {
  if (m <= 3 || m % 3 == 0)
    throw std::domain_error(
        "m must satisfy 3∤m>3 (greater than 3 and not divisible by 3); got m=" +
        std::to_string(m));
}

SystemInstance build_system(int m) {
  validate_system_m(m);
  SystemInstance sys;
  sys.m = m;
  sys.ring = make_ring(m);

  // Truncating C at x^{-(m+1)} makes C^3 exact down to x^{-(m-1)} and C^m
  // exact down to x^{-2}, which is precisely what the system needs.
  LaurentSeries c = generic_C(sys.ring, -(m + 1));
  LaurentSeries c3 = series_pow(c, 3);
  LaurentSeries cm = series_pow(c, static_cast<unsigned>(m));

  sys.equations.reserve(static_cast<std::size_t>(m) + 1);
  sys.weights.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 1; k <= m - 1; ++k) {
    sys.equations.push_back(coeff_at(c3, -k));
    sys.weights.push_back(k + 3);
  }
  sys.equations.push_back(coeff_at(cm, -1));
  sys.weights.push_back(m + 1);
  sys.equations.push_back(coeff_at(cm, -2) + Polynomial::y(sys.ring));
  sys.weights.push_back(m + 2);
  return sys;
}

namespace {

// C_{-i} for i >= 1, the constant 1 for i = -1, zero for i = 0.
Polynomial cvar(const RingPtr& ring, int i) {
  if (i >= 1) return Polynomial::c(ring, i);
  if (i == -1) return Polynomial::constant(ring, Rational(1));
  return Polynomial::zero(ring);
}

}  // namespace

Polynomial build_Ek_closed_form(const RingPtr& ring, int k) {
  const int m = ring->m();
  if (k < 1 || k > m - 1)
    throw std::domain_error("closed form: k must satisfy 1 <= k <= m-1; got k=" +
                            std::to_string(k));

  Polynomial e = Polynomial::zero(ring);

  // 3 * sum of C_{-i}^2 C_{-(k-2i)} over i = -1, 1, ..., floor((k+1)/2),
  // skipping 3i = k (that cube is handled by the epsilon term below).
  for (int i = -1; i <= (k + 1) / 2; ++i) {
    if (i == 0 || 3 * i == k) continue;
    Polynomial sq = cvar(ring, i) * cvar(ring, i) * cvar(ring, k - 2 * i);
    e += sq.scaled(Rational(3));
  }

  // 6 * sum of C_{-i} C_{-j} over 0 < i < j with i + j = k+1.
  for (int i = 1; 2 * i < k + 1; ++i) {
    int j = k + 1 - i;
    e += (cvar(ring, i) * cvar(ring, j)).scaled(Rational(6));
  }

  // 6 * sum of C_{-i} C_{-j} C_{-l} over 0 < i < j < l with i + j + l = k.
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int l = k - i - j;
      if (l <= j) break;
      e += (cvar(ring, i) * cvar(ring, j) * cvar(ring, l)).scaled(Rational(6));
    }

  // The cube term (C_{-k/3})^3 when 3 | k.
  if (k % 3 == 0) e += cvar(ring, k / 3).pow(3);

  return e;
}

Polynomial build_Ek_closed_form(int m, int k) {
  validate_system_m(m);
  return build_Ek_closed_form(make_ring(m), k);
}

}  // namespace jacgb
