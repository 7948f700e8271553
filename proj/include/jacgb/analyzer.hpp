#pragma once

#include <optional>
#include <set>
#include <string>

#include "jacgb/groebner.hpp"
#include "jacgb/roots.hpp"

namespace jacgb {

// The four families of solutions, split by which of C_{-1}, C_{-2}
// vanishes and by the parity of m. Exactly one of the both-nonzero tags
// applies for a given m; the vanishing cases apply only under their
// divisibility conditions (3 | m+2 for c1_zero, 2 | m for c2_zero).
enum class CaseTag { c1_zero, c2_zero, both_nonzero_even, both_nonzero_odd };

const char* to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& s);

// Validates m and returns the applicable case tags.
std::set<CaseTag> applicable_cases(int m);

// The univariate polynomials governing the both-nonzero case, assembled
// from the lambda tables under the substitution C_{-2}^2 = t C_{-1}^3:
// roots of f pick the admissible t values, g gives the closed form of
// C_{-1}. Only the tag matching the parity of m is populated.
struct CasePolynomials {
  CaseTag tag = CaseTag::both_nonzero_even;
  UniPoly f;
  UniPoly g;

  bool operator==(const CasePolynomials& o) const = default;
};

CasePolynomials build_case_polynomials(const GroebnerResult& gr);

// One closed-form solution branch. Fractional powers are represented as a
// principal value times an explicit root of unity of order radical_order,
// selected by unity_index; sqrt_choice is the sign of the 2-fold square
// root choice in the both-nonzero cases.
struct SolutionBranch {
  CaseTag tag = CaseTag::c1_zero;
  int m = 0;
  int unity_index = 0;
  int radical_order = 1;
  int sqrt_choice = +1;
  std::optional<int> root_index;      // into the root list, cases 3/4
  std::complex<double> t_value{0.0, 0.0};
  std::complex<double> g_value{0.0, 0.0};  // g(t_l)
  Rational pivot_lambda{0};           // exact pivot for cases 1/2
  Rational c1_exponent{0};            // y-power of C_{-1}
  Rational c2_exponent{0};            // y-power of C_{-2}
  bool c1_is_zero = false;
  bool c2_is_zero = false;
  bool degenerate = false;
  std::string degenerate_reason;
  std::optional<int> duplicate_of;    // earlier branch with the same (C1, C2)
  std::string closed_form;

  bool operator==(const SolutionBranch& o) const = default;
};

// The (C_{-1}, C_{-2}) pair of a branch at a sample y. Requires y != 0 and
// a non-degenerate branch.
struct BranchLeadingValues {
  std::complex<double> c1;
  std::complex<double> c2;
};
BranchLeadingValues branch_leading_values(const SolutionBranch& b,
                                          std::complex<double> y);

// All candidate branches, in deterministic order:
//  case 1: (m+2)/3 branches; case 2: (m+2)/2 branches;
//  case 3: per root, (m+2)/2 unity choices x 2 square-root signs;
//  case 4: per root, 2 square roots of t_l x (m+2) unity choices, with
//  coinciding (C_{-1}, C_{-2}) pairs of the two sign families marked as
//  duplicates (the candidate total matches the 2s(m+2) bound).
std::vector<SolutionBranch> enumerate_branches(const GroebnerResult& gr,
                                               const CasePolynomials& cp,
                                               const std::vector<RootDatum>& roots);

struct Analysis {
  int m = 0;
  std::set<CaseTag> cases;
  CasePolynomials cp;
  bool f_identically_zero = false;  // solution continuum in t; no enumeration
  int root_count = 0;               // exact count s of distinct roots of f
  std::vector<RootDatum> roots;
  std::vector<SolutionBranch> branches;

  bool operator==(const Analysis& o) const = default;
};

// Full analysis pipeline for one reduced system.
Analysis analyze(const GroebnerResult& gr, double tol, unsigned seed);

// Candidate bound for one case ("at most"); -1 when unbounded
// is not meaningful (continuum).
long long case_candidate_bound(CaseTag tag, int m, int root_count);

}  // namespace jacgb
