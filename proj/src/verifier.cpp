#include "jacgb/verifier.hpp"

#include <cmath>
#include <stdexcept>

#include "jacgb/errors.hpp"
#include "jacgb/parallel.hpp"

namespace jacgb {

std::vector<std::complex<double>> evaluate_branch(const SolutionBranch& b,
                                                  const GroebnerResult& gr,
                                                  std::complex<double> y) {
  if (b.degenerate)
    throw std::domain_error("evaluate_branch: degenerate branch: " +
                            b.degenerate_reason);
  BranchLeadingValues lead = branch_leading_values(b, y);

  const int m = gr.m;
  const Ring& ring = *gr.ring;
  std::vector<std::complex<double>> slot_values(ring.num_vars(), {0.0, 0.0});
  slot_values[ring.c_slot(1)] = lead.c1;
  slot_values[ring.c_slot(2)] = lead.c2;
  slot_values[ring.y_slot()] = y;

  std::vector<std::complex<double>> c_values(static_cast<std::size_t>(m) + 1);
  c_values[0] = lead.c1;
  c_values[1] = lead.c2;
  for (int k = 3; k <= m + 1; ++k) {
    std::complex<double> v = -gr.R.at(k - 2).evaluate(slot_values);
    c_values[static_cast<std::size_t>(k) - 1] = v;
  }
  return c_values;
}

std::vector<double> residuals(std::span<const std::complex<double>> c_values,
                              const SystemInstance& sys, std::complex<double> y) {
  const Ring& ring = *sys.ring;
  if (c_values.size() != static_cast<std::size_t>(sys.m) + 1)
    throw std::invalid_argument("residuals: expected " + std::to_string(sys.m + 1) +
                                " unknown values");
  std::vector<std::complex<double>> slot_values(ring.num_vars());
  for (int k = 1; k <= sys.m + 1; ++k)
    slot_values[ring.c_slot(k)] = c_values[static_cast<std::size_t>(k) - 1];
  slot_values[ring.y_slot()] = y;

  std::vector<double> out;
  out.reserve(sys.equations.size());
  for (const Polynomial& e : sys.equations) {
    std::complex<double> sum(0.0, 0.0);
    double largest = 0.0;
    for (const Term& t : e.terms()) {
      std::complex<double> v(to_double(t.coeff), 0.0);
      for (std::size_t i = 0; i < slot_values.size(); ++i)
        for (int32_t p = 0; p < t.mono[i]; ++p) v *= slot_values[i];
      sum += v;
      largest = std::max(largest, std::abs(v));
    }
    out.push_back(std::abs(sum) / std::max(1.0, largest));
  }
  return out;
}

namespace {

// Convolution on coefficient maps, separate from LaurentSeries::multiply.
LaurentSeries naive_mul(const LaurentSeries& a, const LaurentSeries& b) {
  const int floor = std::max(a.truncation() + b.top_degree(),
                             b.truncation() + a.top_degree());
  LaurentSeries r(a.ring(), floor);
  for (int e = floor; e <= a.top_degree() + b.top_degree(); ++e) {
    Polynomial acc = Polynomial::zero(a.ring());
    for (const auto& [i, ci] : a.coeffs()) {
      const int j = e - i;
      if (j < b.truncation() || j > b.top_degree()) continue;
      const Polynomial& cj = coeff_at(b, j);
      if (!cj.is_zero()) acc += ci * cj;
    }
    r.set_coeff(e, std::move(acc));
  }
  return r;
}

}  // namespace

LaurentSeries oracle_power_expand(const RingPtr& ring, int n,
                                  const std::map<int, Polynomial>* relations) {
  if (n < 1) throw std::domain_error("oracle_power_expand: power must be >= 1");
  LaurentSeries c = generic_C(ring, -(ring->m() + 1));
  auto reduce = [&](const LaurentSeries& s) {
    if (!relations) return s;
    return s.map_coeffs(
        [&](const Polynomial& p) { return reduce_by_relations(p, *relations); });
  };
  LaurentSeries acc = reduce(c);
  for (int step = 2; step <= n; ++step) acc = reduce(naive_mul(acc, c));
  return acc;
}

std::map<int, Polynomial> oracle_relations(int m) {
  validate_system_m(m);
  RingPtr ring = make_ring(m);
  LaurentSeries c = generic_C(ring, -(m + 1));
  LaurentSeries c3 = naive_mul(naive_mul(c, c), c);

  std::map<int, Polynomial> rels;
  for (int k = 1; k <= m - 1; ++k) {
    Polynomial p = coeff_at(c3, -k).scaled(make_rational(1, 3));
    p = reduce_by_relations(p, rels);
    Polynomial rk = p - Polynomial::c(ring, k + 2);
    rels.emplace(k, std::move(rk));
  }
  return rels;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::spurious: return "spurious";
    case Verdict::degenerate: return "degenerate";
  }
  throw std::logic_error("unknown verdict");
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "verified") return Verdict::verified;
  if (s == "spurious") return Verdict::spurious;
  if (s == "degenerate") return Verdict::degenerate;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

VerificationReport verify_branches(const SystemInstance& sys,
                                   const GroebnerResult& gr, const Analysis& a,
                                   std::complex<double> y, double tol,
                                   int threads) {
  if (y == std::complex<double>(0.0, 0.0))
    throw std::domain_error("verify: y sample must be nonzero");
  VerificationReport report;
  report.m = sys.m;
  report.y_sample = y;
  report.tol = tol;
  report.checks.resize(a.branches.size());

  std::vector<std::vector<std::complex<double>>> values(a.branches.size());
  parallel_for(a.branches.size(), threads, [&](std::size_t i) {
    const SolutionBranch& b = a.branches[i];
    BranchCheck& check = report.checks[i];
    check.branch = static_cast<int>(i);
    if (b.degenerate) {
      check.verdict = Verdict::degenerate;
      return;
    }
    values[i] = evaluate_branch(b, gr, y);
    check.residual = residuals(values[i], sys, y);
    check.max_residual = 0.0;
    check.worst_equation = 1;
    for (std::size_t k = 0; k < check.residual.size(); ++k) {
      if (check.residual[k] > check.max_residual) {
        check.max_residual = check.residual[k];
        check.worst_equation = static_cast<int>(k) + 1;
      }
    }
    check.verdict =
        check.max_residual < tol ? Verdict::verified : Verdict::spurious;
  });

  // Numeric collision scan among verified branches (deterministic order).
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    if (report.checks[i].verdict != Verdict::verified) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (report.checks[j].verdict != Verdict::verified) continue;
      double dist = 0.0, scale = 1.0;
      for (std::size_t k = 0; k < values[i].size(); ++k) {
        dist += std::abs(values[i][k] - values[j][k]);
        scale += std::abs(values[i][k]);
      }
      if (dist < tol * scale) {
        report.checks[i].collides_with = static_cast<int>(j);
        ++report.collisions;
        break;
      }
    }
  }

  for (CaseTag tag : a.cases) {
    CaseCount& cc = report.counts[tag];
    cc.bound = case_candidate_bound(tag, a.m, a.root_count);
  }
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    CaseCount& cc = report.counts[a.branches[i].tag];
    ++cc.candidates;
    switch (report.checks[i].verdict) {
      case Verdict::verified: ++cc.verified; break;
      case Verdict::spurious: ++cc.spurious; break;
      case Verdict::degenerate: ++cc.degenerate; break;
    }
  }
  for (const auto& [tag, cc] : report.counts)
    if (cc.verified > cc.bound) report.bounds_ok = false;
  return report;
}

}  // namespace jacgb
