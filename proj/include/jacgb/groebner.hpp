#pragma once

#include <map>
#include <optional>
#include <utility>

#include "jacgb/system.hpp"

namespace jacgb {

// Reduced triangular basis of the system together with the data the
// solution analysis consumes:
//   tildeE[k-1] = C_{-(k+2)} + R_k          for k = 1..m-1 (monic),
//   tildeE[m-1] = R_m,
//   tildeE[m]   = y + R_{m+1},
// with every R_k in Q[C_{-1}, C_{-2}], homogeneous of weight k+3 for
// k <= m-1, and of weights m+1, m+2 for R_m, R_{m+1}. The lambda tables
// index the coefficients of R_m and R_{m+1} by the exponent pair (i, j)
// of C_{-1}^i C_{-2}^j; absent key means zero.
struct GroebnerResult {
  int m = 0;
  RingPtr ring;
  std::vector<Polynomial> tildeE;
  std::map<int, Polynomial> R;  // k = 1..m+1
  std::map<std::pair<int, int>, Rational> lambda_m;    // 2i+3j = m+1
  std::map<std::pair<int, int>, Rational> lambda_m1;   // 2i+3j = m+2

  bool operator==(const GroebnerResult& o) const {
    return m == o.m && tildeE == o.tildeE && R == o.R &&
           lambda_m == o.lambda_m && lambda_m1 == o.lambda_m1;
  }
};

// Standard S-polynomial w.r.t. the ring order. Throws std::domain_error on
// zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct BuchbergerReport {
  bool is_basis = true;
  // Smallest failing (i, j) in lexicographic pair order, when any.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;   // coprime leading monomials
  std::size_t pairs_reduced = 0;

  bool operator==(const BuchbergerReport& o) const = default;
};

// Buchberger criterion: every S-pair normal-forms to zero. Pairs with
// coprime leading monomials provably reduce to zero and are skipped when
// use_coprime_criterion is set; pass false to reduce every pair explicitly.
// Deterministic output regardless of thread count.
BuchbergerReport buchberger_check(std::span<const Polynomial> gens,
                                  bool use_coprime_criterion = true,
                                  int threads = 1);

// Triangular reduction pass: substitutes C_{-(k+2)} -> -R_k in order of
// increasing k, then reduces E_m and E_{m+1} the same way and extracts the
// lambda tables.
GroebnerResult reduce_basis(const SystemInstance& sys);

// Substitution-based reduction modulo the triangular relations
// C_{-(k+2)} -> -R_k; agrees with normal_form by the tilde basis.
Polynomial reduce_by_relations(const Polynomial& p,
                               const std::map<int, Polynomial>& R_upto_m_minus1);

// Closed forms for the pivotal lambda entries:
//   3 | m+2:  lambda_{m+1}^{0,(m+2)/3} = genbinom(m/3, (m+2)/3) * 3^{(m+2)/3}
//   2 | m:    lambda_{m+1}^{(m+2)/2,0} = genbinom(m/3, (m+2)/2) * 3^{(m+2)/2}
struct LambdaCheckReport {
  int m = 0;
  bool case1_applicable = false;  // 3 | m+2
  bool case1_pass = false;
  Rational case1_expected, case1_actual;
  bool case2_applicable = false;  // 2 | m
  bool case2_pass = false;
  Rational case2_expected, case2_actual;

  bool all_pass() const {
    return (!case1_applicable || case1_pass) && (!case2_applicable || case2_pass);
  }
};

LambdaCheckReport lambda_closed_form_check(const GroebnerResult& gr);
LambdaCheckReport lambda_closed_form_check(int m);

}  // namespace jacgb
