#pragma once

#include <complex>
#include <vector>

#include "jacgb/rational.hpp"

namespace jacgb {

// Dense univariate polynomial over Q, coefficients ascending, trailing
// zeros trimmed; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly from_coeffs(std::vector<Rational> ascending);
  static UniPoly constant(Rational c);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading_coeff() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(const Rational& c) const;
  bool operator==(const UniPoly& o) const = default;

  UniPoly derivative() const;
  UniPoly monic() const;

  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// f / gcd(f, f'), made monic. Its degree is the number of distinct roots.
UniPoly squarefree_part(const UniPoly& f);

// Yun decomposition: list of (monic squarefree factor, multiplicity) with
// product matching f up to the leading coefficient.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

}  // namespace jacgb
