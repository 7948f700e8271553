#pragma once

#include <map>

#include "jacgb/polynomial.hpp"

namespace jacgb {

// Truncated Laurent series in x^{-1} with Polynomial coefficients.
// Exponents >= truncation() are exact (absent means exactly zero);
// exponents below it are unknown and asking for them is an error.
// Multiplication and powers propagate the exact window soundly.
class LaurentSeries {
 public:
  LaurentSeries(RingPtr ring, int truncation);

  const RingPtr& ring() const { return ring_; }
  int truncation() const { return trunc_; }
  // Largest exponent with a nonzero coefficient; truncation()-1 when the
  // retained window is entirely zero.
  int top_degree() const;

  // Coefficient of x^k. Throws TruncationError below the window.
  const Polynomial& coeff(int k) const;
  // Replaces the coefficient of x^k; k must lie in the window.
  void set_coeff(int k, Polynomial value);

  LaurentSeries multiply(const LaurentSeries& o) const;
  // Applies a map to every retained coefficient (used for on-the-fly
  // reduction of coefficients during expansion).
  template <typename Fn>
  LaurentSeries map_coeffs(Fn&& fn) const {
    LaurentSeries r(ring_, trunc_);
    for (const auto& [e, c] : coeffs_) {
      Polynomial v = fn(c);
      if (!v.is_zero()) r.coeffs_.emplace(e, std::move(v));
    }
    return r;
  }

  bool operator==(const LaurentSeries& o) const;

  const std::map<int, Polynomial, std::greater<int>>& coeffs() const {
    return coeffs_;
  }

 private:
  RingPtr ring_;
  int trunc_;
  std::map<int, Polynomial, std::greater<int>> coeffs_;  // nonzero only
  Polynomial zero_;
};

// x + C_{-1}x^{-1} + ... + C_{-|trunc|}x^{trunc} with symbolic coefficients;
// the x^0 coefficient is zero. Requires truncation <= -1 and
// |truncation| <= m+1 (deeper coefficients are not ring variables).
LaurentSeries generic_C(RingPtr ring, int truncation);

// s^n by repeated squaring; the result window is exactly the provable one,
// trunc(s) + (n-1)*top(s).
LaurentSeries series_pow(const LaurentSeries& s, unsigned n);

// Coefficient of x^k; zero polynomial above the top, TruncationError below
// the window.
const Polynomial& coeff_at(const LaurentSeries& s, int k);

}  // namespace jacgb
