#include "jacgb/analyzer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::c1_zero: return "C1_zero";
    case CaseTag::c2_zero: return "C2_zero";
    case CaseTag::both_nonzero_even: return "both_nonzero_even";
    case CaseTag::both_nonzero_odd: return "both_nonzero_odd";
  }
  throw std::logic_error("unknown case tag");
}

CaseTag case_tag_from_string(const std::string& s) {
  if (s == "C1_zero") return CaseTag::c1_zero;
  if (s == "C2_zero") return CaseTag::c2_zero;
  if (s == "both_nonzero_even") return CaseTag::both_nonzero_even;
  if (s == "both_nonzero_odd") return CaseTag::both_nonzero_odd;
  throw std::invalid_argument("unknown case tag '" + s + "'");
}

std::set<CaseTag> applicable_cases(int m) {
  validate_system_m(m);
  std::set<CaseTag> cases;
  if ((m + 2) % 3 == 0) cases.insert(CaseTag::c1_zero);
  if (m % 2 == 0) cases.insert(CaseTag::c2_zero);
  cases.insert(m % 2 == 0 ? CaseTag::both_nonzero_even : CaseTag::both_nonzero_odd);
  return cases;
}

namespace {

Rational lambda_at(const std::map<std::pair<int, int>, Rational>& table, int i,
                   int j) {
  auto it = table.find({i, j});
  return it == table.end() ? Rational(0) : it->second;
}

}  // namespace

CasePolynomials build_case_polynomials(const GroebnerResult& gr) {
  const int m = gr.m;
  CasePolynomials cp;
  std::vector<Rational> f_coeffs, g_coeffs;
  if (m % 2 == 0) {
    cp.tag = CaseTag::both_nonzero_even;
    for (int r = 0; 6 * r <= m - 2; ++r)
      f_coeffs.push_back(lambda_at(gr.lambda_m, (m - 2 - 6 * r) / 2, 2 * r + 1));
    for (int r = 0; 6 * r <= m + 2; ++r)
      g_coeffs.push_back(lambda_at(gr.lambda_m1, (m + 2 - 6 * r) / 2, 2 * r));
  } else {
    cp.tag = CaseTag::both_nonzero_odd;
    for (int r = 0; 6 * r <= m + 1; ++r)
      f_coeffs.push_back(lambda_at(gr.lambda_m, (m + 1 - 6 * r) / 2, 2 * r));
    for (int r = 0; 6 * r <= m - 1; ++r)
      g_coeffs.push_back(lambda_at(gr.lambda_m1, (m - 1 - 6 * r) / 2, 2 * r + 1));
  }
  cp.f = UniPoly::from_coeffs(std::move(f_coeffs));
  cp.g = UniPoly::from_coeffs(std::move(g_coeffs));
  return cp;
}

namespace {

std::complex<double> unity_root(int order, int index) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(index) /
                             static_cast<double>(order));
}

// Signed zeros put -1-0i on the lower side of the log branch cut; collapse
// them so principal values follow the usual convention.
std::complex<double> canon_zero(std::complex<double> z) {
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return {re, im};
}

std::complex<double> principal_root(std::complex<double> z, int order) {
  return std::pow(canon_zero(z), 1.0 / static_cast<double>(order));
}

std::complex<double> principal_sqrt(std::complex<double> z) {
  return std::sqrt(canon_zero(z));
}

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

}  // namespace

BranchLeadingValues branch_leading_values(const SolutionBranch& b,
                                          std::complex<double> y) {
  if (y == std::complex<double>(0.0, 0.0))
    throw std::domain_error("branch evaluation requires y != 0");
  if (b.degenerate)
    throw std::domain_error("branch evaluation on a degenerate branch: " +
                            b.degenerate_reason);
  BranchLeadingValues v{};
  const double lam = to_double(b.pivot_lambda);
  switch (b.tag) {
    case CaseTag::c1_zero: {
      v.c1 = 0.0;
      v.c2 = principal_root(-y / lam, b.radical_order) *
             unity_root(b.radical_order, b.unity_index);
      break;
    }
    case CaseTag::c2_zero: {
      v.c1 = principal_root(-y / lam, b.radical_order) *
             unity_root(b.radical_order, b.unity_index);
      v.c2 = 0.0;
      break;
    }
    case CaseTag::both_nonzero_even: {
      v.c1 = principal_root(-y / b.g_value, b.radical_order) *
             unity_root(b.radical_order, b.unity_index);
      v.c2 = static_cast<double>(b.sqrt_choice) *
             principal_sqrt(b.t_value * v.c1 * v.c1 * v.c1);
      break;
    }
    case CaseTag::both_nonzero_odd: {
      std::complex<double> tau =
          static_cast<double>(b.sqrt_choice) * principal_sqrt(b.t_value);
      std::complex<double> rho = principal_root(-y / (tau * b.g_value), b.radical_order) *
                                 unity_root(b.radical_order, b.unity_index);
      v.c1 = rho * rho;
      v.c2 = tau * rho * rho * rho;
      break;
    }
  }
  return v;
}

std::vector<SolutionBranch> enumerate_branches(const GroebnerResult& gr,
                                               const CasePolynomials& cp,
                                               const std::vector<RootDatum>& roots) {
  const int m = gr.m;
  std::set<CaseTag> cases = applicable_cases(m);
  std::vector<SolutionBranch> branches;

  if (cases.count(CaseTag::c1_zero)) {
    const int j = (m + 2) / 3;
    Rational lam = lambda_at(gr.lambda_m1, 0, j);
    if (lam == 0)
      throw InvariantViolation(
          "enumerate_branches: pivotal coefficient of C_{-2}^j vanishes");
    for (int u = 0; u < j; ++u) {
      SolutionBranch b;
      b.tag = CaseTag::c1_zero;
      b.m = m;
      b.unity_index = u;
      b.radical_order = j;
      b.pivot_lambda = lam;
      b.c1_is_zero = true;
      b.c1_exponent = Rational(0);
      b.c2_exponent = make_rational(1, j);
      std::ostringstream os;
      os << "C_{-1} = 0; C_{-2} = zeta(" << j << "," << u << ")*(-y/("
         << to_string(lam) << "))^(1/" << j << ")";
      b.closed_form = os.str();
      branches.push_back(std::move(b));
    }
  }

  if (cases.count(CaseTag::c2_zero)) {
    const int i = (m + 2) / 2;
    Rational lam = lambda_at(gr.lambda_m1, i, 0);
    if (lam == 0)
      throw InvariantViolation(
          "enumerate_branches: pivotal coefficient of C_{-1}^i vanishes");
    for (int u = 0; u < i; ++u) {
      SolutionBranch b;
      b.tag = CaseTag::c2_zero;
      b.m = m;
      b.unity_index = u;
      b.radical_order = i;
      b.pivot_lambda = lam;
      b.c2_is_zero = true;
      b.c1_exponent = make_rational(1, i);
      b.c2_exponent = Rational(0);
      std::ostringstream os;
      os << "C_{-1} = zeta(" << i << "," << u << ")*(-y/(" << to_string(lam)
         << "))^(1/" << i << "); C_{-2} = 0";
      b.closed_form = os.str();
      branches.push_back(std::move(b));
    }
  }

  const bool even = m % 2 == 0;
  // Exact gates for the degenerate situations; the numeric test below only
  // decides which root triggers them.
  const bool f_has_zero_root = !cp.f.is_zero() && cp.f.coeff(0) == 0;
  UniPoly common = (cp.f.is_zero() || cp.g.is_zero())
                       ? UniPoly()
                       : gcd(squarefree_part(cp.f), cp.g);
  const bool g_can_vanish = common.degree() > 0;

  for (const RootDatum& root : roots) {
    const std::complex<double> t = root.approx;
    const std::complex<double> gval = cp.g.eval(t);
    bool degenerate = false;
    std::string reason;
    if (cp.g.is_zero()) {
      degenerate = true;
      reason = "degenerate - division by zero in closed form: g vanishes identically";
    } else if (f_has_zero_root && std::abs(t) < 1e-9) {
      degenerate = true;
      reason = "degenerate - division by zero in closed form: t = 0";
    } else if (g_can_vanish && std::abs(common.eval(t)) < 1e-9) {
      degenerate = true;
      reason = "degenerate - division by zero in closed form: g(t) = 0";
    }

    if (even) {
      const int half = (m + 2) / 2;
      for (int u = 0; u < half; ++u) {
        for (int sign : {+1, -1}) {
          SolutionBranch b;
          b.tag = CaseTag::both_nonzero_even;
          b.m = m;
          b.unity_index = u;
          b.radical_order = half;
          b.sqrt_choice = sign;
          b.root_index = root.index;
          b.t_value = t;
          b.g_value = gval;
          b.c1_exponent = make_rational(2, m + 2);
          b.c2_exponent = make_rational(3, m + 2);
          b.degenerate = degenerate;
          b.degenerate_reason = reason;
          std::ostringstream os;
          os << "C_{-1} = zeta(" << half << "," << u << ")*(-y/g(t_" << root.index
             << "))^(2/" << m + 2 << "); C_{-2} = " << (sign > 0 ? "+" : "-")
             << "sqrt(t_" << root.index << "*C_{-1}^3); t_" << root.index << " = "
             << complex_str(t);
          b.closed_form = os.str();
          branches.push_back(std::move(b));
        }
      }
    } else {
      for (int sign : {+1, -1}) {
        for (int u = 0; u < m + 2; ++u) {
          SolutionBranch b;
          b.tag = CaseTag::both_nonzero_odd;
          b.m = m;
          b.unity_index = u;
          b.radical_order = m + 2;
          b.sqrt_choice = sign;
          b.root_index = root.index;
          b.t_value = t;
          b.g_value = gval;
          b.c1_exponent = make_rational(2, m + 2);
          b.c2_exponent = make_rational(3, m + 2);
          b.degenerate = degenerate;
          b.degenerate_reason = reason;
          std::ostringstream os;
          os << "rho = zeta(" << m + 2 << "," << u << ")*(-y/(" << (sign > 0 ? "+" : "-")
             << "sqrt(t_" << root.index << ")*g(t_" << root.index << ")))^(1/" << m + 2
             << "); C_{-1} = rho^2; C_{-2} = " << (sign > 0 ? "+" : "-") << "sqrt(t_"
             << root.index << ")*rho^3; t_" << root.index << " = " << complex_str(t);
          b.closed_form = os.str();
          branches.push_back(std::move(b));
        }
      }
    }
  }

  // The two square-root families of the odd case parametrize the same
  // solution set; mark the second occurrence of each (C_{-1}, C_{-2}) pair.
  if (!even) {
    const std::complex<double> y_ref(1.0, 0.0);
    for (std::size_t a = 0; a < branches.size(); ++a) {
      SolutionBranch& ba = branches[a];
      if (ba.tag != CaseTag::both_nonzero_odd || ba.degenerate || ba.sqrt_choice == 1)
        continue;
      BranchLeadingValues va = branch_leading_values(ba, y_ref);
      for (std::size_t c = 0; c < a; ++c) {
        const SolutionBranch& bc = branches[c];
        if (bc.tag != CaseTag::both_nonzero_odd || bc.degenerate ||
            bc.root_index != ba.root_index || bc.sqrt_choice != 1)
          continue;
        BranchLeadingValues vc = branch_leading_values(bc, y_ref);
        double scale = 1.0 + std::abs(va.c1) + std::abs(va.c2);
        if (std::abs(va.c1 - vc.c1) + std::abs(va.c2 - vc.c2) < 1e-9 * scale) {
          ba.duplicate_of = static_cast<int>(c);
          break;
        }
      }
    }
  }

  return branches;
}

long long case_candidate_bound(CaseTag tag, int m, int root_count) {
  switch (tag) {
    case CaseTag::c1_zero: return (m + 2) / 3;
    case CaseTag::c2_zero: return (m + 2) / 2;
    case CaseTag::both_nonzero_even:
      return static_cast<long long>(root_count) * (m + 2);
    case CaseTag::both_nonzero_odd:
      return 2LL * root_count * (m + 2);
  }
  throw std::logic_error("unknown case tag");
}

Analysis analyze(const GroebnerResult& gr, double tol, unsigned seed) {
  Analysis a;
  a.m = gr.m;
  a.cases = applicable_cases(gr.m);
  a.cp = build_case_polynomials(gr);
  if (a.cp.f.is_zero()) {
    // Every t admissible: a solution continuum, not an enumerable list.
    a.f_identically_zero = true;
  } else {
    a.roots = analyze_roots(a.cp.f, tol, seed);
    a.root_count = roots_exact_count(a.cp.f).count;
  }
  a.branches = enumerate_branches(gr, a.cp, a.roots);
  return a;
}

}  // namespace jacgb
