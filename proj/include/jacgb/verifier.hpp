#pragma once

#include "jacgb/analyzer.hpp"

namespace jacgb {

// Numeric values of C_{-1}, ..., C_{-(m+1)} for one branch at a sample y,
// via the closed form for (C_{-1}, C_{-2}) and C_{-k} = -R_{k-2} for the
// rest. Requires y != 0.
std::vector<std::complex<double>> evaluate_branch(const SolutionBranch& b,
                                                  const GroebnerResult& gr,
                                                  std::complex<double> y);

// Scaled residual |E_k| for k = 1..m+1 at the given unknown values
// (c_values[k-1] = C_{-k}); each residual is normalized by the largest
// term magnitude of its equation to control conditioning.
std::vector<double> residuals(std::span<const std::complex<double>> c_values,
                              const SystemInstance& sys, std::complex<double> y);

// C^n by naive successive multiplication (no squaring), with its own
// convolution loop; when relations are given, the triangular substitutions
// C_{-(k+2)} -> -R_k are applied to every coefficient after each step.
// Independent cross-check for series_pow and reduce_basis.
LaurentSeries oracle_power_expand(const RingPtr& ring, int n,
                                  const std::map<int, Polynomial>* relations = nullptr);

// Independent derivation of the triangular relations R_1..R_{m-1} from the
// naive cube, by plain substitution (no division machinery).
std::map<int, Polynomial> oracle_relations(int m);

enum class Verdict { verified, spurious, degenerate };
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct BranchCheck {
  int branch = 0;
  std::vector<double> residual;  // per equation, empty for degenerate
  double max_residual = 0.0;
  int worst_equation = 0;  // 1-based k of the largest residual
  Verdict verdict = Verdict::verified;
  std::optional<int> collides_with;  // earlier verified branch, same values

  bool operator==(const BranchCheck& o) const = default;
};

struct CaseCount {
  long long candidates = 0;
  long long verified = 0;
  long long spurious = 0;
  long long degenerate = 0;
  long long bound = 0;  // "at most" candidate count for this case

  bool operator==(const CaseCount& o) const = default;
};

struct VerificationReport {
  int m = 0;
  std::complex<double> y_sample{1.0, 0.0};
  double tol = 1e-9;
  std::vector<BranchCheck> checks;
  std::map<CaseTag, CaseCount> counts;
  int collisions = 0;
  bool bounds_ok = true;  // verified counts within the per-case bounds

  bool operator==(const VerificationReport& o) const = default;
};

VerificationReport verify_branches(const SystemInstance& sys,
                                   const GroebnerResult& gr, const Analysis& a,
                                   std::complex<double> y, double tol,
                                   int threads = 1);

}  // namespace jacgb
