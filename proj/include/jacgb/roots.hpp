#pragma once

#include <complex>
#include <vector>

#include "jacgb/unipoly.hpp"

namespace jacgb {

struct RootDatum {
  UniPoly defining;               // squarefree part of the source polynomial
  std::complex<double> approx{};  // refined approximation
  int multiplicity = 1;           // multiplicity in the source polynomial
  int index = 0;                  // stable position under (re, im) ordering

  bool operator==(const RootDatum& o) const = default;
};

// Exact count of distinct roots: degree of f / gcd(f, f').
// Throws std::domain_error when f is identically zero (degenerate case).
struct ExactRootCount {
  int count = 0;
  UniPoly squarefree;
};
ExactRootCount roots_exact_count(const UniPoly& f);

// Durand-Kerner simultaneous iteration on the squarefree polynomial.
// Starting points are generated from the seed; the returned roots are
// sorted by (real, imaginary) and every root satisfies the scaled residual
// bound |p(r)| < tol * scale(r). Throws NumericError on non-convergence.
std::vector<std::complex<double>> roots_numeric(const UniPoly& squarefree,
                                                double tol, unsigned seed);

// Full pipeline: exact count, numeric roots of the squarefree part,
// multiplicities recovered from the Yun decomposition of f.
std::vector<RootDatum> analyze_roots(const UniPoly& f, double tol, unsigned seed);

}  // namespace jacgb
