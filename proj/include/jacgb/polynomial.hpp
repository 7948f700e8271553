#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "jacgb/monomial.hpp"
#include "jacgb/rational.hpp"
#include "jacgb/ring.hpp"

namespace jacgb {

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term& o) const = default;
};

// Sparse exact polynomial. Terms are kept in strictly descending monomial
// order with no zero coefficients, so iteration order, printing and
// serialization are all canonical.
class Polynomial {
 public:
  // Ring-less zero; combines with any polynomial and adopts its ring.
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial variable(RingPtr ring, std::size_t slot, int32_t exp = 1);
  // C_{-k} and y as polynomials.
  static Polynomial c(RingPtr ring, int k, int32_t exp = 1);
  static Polynomial y(RingPtr ring);
  // Canonicalizes: sorts descending, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading data under the ring order; throw std::domain_error on zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  // this * c * mono.
  Polynomial times_term(const Monomial& mono, const Rational& c) const;
  Polynomial pow(unsigned n) const;

  // Equal iff same m and same terms.
  bool operator==(const Polynomial& o) const;

  // Common weighted degree of all terms; nullopt when inhomogeneous.
  // Throws std::domain_error on the zero polynomial.
  std::optional<long long> weight() const;

  bool contains_slot(std::size_t slot) const;
  int32_t max_exponent_of(std::size_t slot) const;

  // Replaces one variable by a polynomial.
  Polynomial substitute(std::size_t slot, const Polynomial& replacement) const;

  // Numeric evaluation; values[slot] for every variable slot.
  std::complex<double> evaluate(
      std::span<const std::complex<double>> values) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void canonicalize();
  static const RingPtr& merged_ring(const Polynomial& a, const Polynomial& b);
};

struct DivisionResult {
  std::vector<Polynomial> quotients;  // aligned with the divisor list
  Polynomial remainder;
};

// Multivariate division under the ring order: p = sum q_i d_i + r where no
// term of r is divisible by any divisor's leading monomial and every q_i d_i
// has leading monomial <= LM(p). Divisors must be nonzero.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors);

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);

}  // namespace jacgb
