#pragma once

#include <string>

#include "jacgb/verifier.hpp"

namespace jacgb {

// Human-readable rendering with the C_{-k}, y variable names, terms in
// descending order, e.g. "C_{-7} + 10/3*C_{-1}^4 - 5*C_{-1}*C_{-2}^2".
std::string render_polynomial(const Polynomial& p);

// "5*t - 5/3" style rendering for the univariate case polynomials.
std::string render_unipoly(const UniPoly& p, const std::string& var = "t");

std::string render_system(const SystemInstance& sys);
std::string render_groebner(const GroebnerResult& gr);
std::string render_buchberger(const BuchbergerReport& report);
std::string render_analysis(const Analysis& a);
std::string render_verification(const VerificationReport& r);

// The first five reduced basis elements, one per line.
std::string render_tilde_table(const GroebnerResult& gr);

}  // namespace jacgb
