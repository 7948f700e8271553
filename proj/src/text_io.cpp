#include "jacgb/text_io.hpp"

#include <cmath>
#include <sstream>

namespace jacgb {

namespace {

// Variables inside a monomial print by ascending index, C_{-1} before
// C_{-2} before ... before y.
std::string render_monomial(const Ring& ring, const Monomial& mono) {
  std::ostringstream os;
  bool first = true;
  const int m = ring.m();
  auto emit = [&](std::size_t slot) {
    if (mono[slot] == 0) return;
    if (!first) os << "*";
    first = false;
    os << ring.var_name(slot);
    if (mono[slot] > 1) os << "^" << mono[slot];
  };
  for (int k = 1; k <= m + 1; ++k) emit(ring.c_slot(k));
  emit(ring.y_slot());
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(15);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono = render_monomial(ring, t.mono);
    if (mono.empty()) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string render_unipoly(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (d == 0) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::string render_system(const SystemInstance& sys) {
  std::ostringstream os;
  os << "system m=" << sys.m << " (" << sys.equations.size() << " equations, "
     << sys.m + 1 << " unknowns C_{-1}..C_{-" << sys.m + 1 << "})\n";
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    os << "E_" << i + 1 << " [w=" << sys.weights[i]
       << "] = " << render_polynomial(sys.equations[i]) << "\n";
  return os.str();
}

std::string render_groebner(const GroebnerResult& gr) {
  std::ostringstream os;
  os << "reduced basis m=" << gr.m << "\n";
  for (std::size_t i = 0; i < gr.tildeE.size(); ++i)
    os << "E~_" << i + 1 << " = " << render_polynomial(gr.tildeE[i]) << "\n";
  os << "R_" << gr.m << " = " << render_polynomial(gr.R.at(gr.m)) << "\n";
  os << "R_" << gr.m + 1 << " = " << render_polynomial(gr.R.at(gr.m + 1)) << "\n";
  auto table = [&os](const char* name,
                     const std::map<std::pair<int, int>, Rational>& t) {
    os << name << ":";
    for (const auto& [key, value] : t)
      os << " (" << key.first << "," << key.second << ")=" << to_string(value);
    os << "\n";
  };
  table("lambda_m", gr.lambda_m);
  table("lambda_m1", gr.lambda_m1);
  return os.str();
}

std::string render_buchberger(const BuchbergerReport& report) {
  std::ostringstream os;
  os << (report.is_basis ? "Groebner basis: yes" : "Groebner basis: NO");
  if (report.failing_pair)
    os << " (failing pair " << report.failing_pair->first << ","
       << report.failing_pair->second << ")";
  os << "; pairs total " << report.pairs_total << ", skipped coprime "
     << report.pairs_skipped << ", reduced " << report.pairs_reduced << "\n";
  return os.str();
}

std::string render_analysis(const Analysis& a) {
  std::ostringstream os;
  os << "analysis m=" << a.m << "\ncases:";
  for (CaseTag tag : a.cases) os << " " << to_string(tag);
  os << "\nf(t) = " << render_unipoly(a.cp.f) << "\ng(t) = " << render_unipoly(a.cp.g)
     << "\n";
  if (a.f_identically_zero) {
    os << "f vanishes identically: solution continuum in t, no finite "
          "enumeration\n";
  } else {
    os << "distinct roots of f: s = " << a.root_count << "\n";
    for (const RootDatum& r : a.roots)
      os << "  t_" << r.index << " = " << format_complex(r.approx)
         << " (multiplicity " << r.multiplicity << ")\n";
  }
  os << "branches: " << a.branches.size() << "\n";
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    const SolutionBranch& b = a.branches[i];
    os << "  [" << i << "] " << to_string(b.tag) << ": " << b.closed_form;
    if (b.degenerate) os << " [" << b.degenerate_reason << "]";
    if (b.duplicate_of) os << " [duplicate of " << *b.duplicate_of << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_verification(const VerificationReport& r) {
  std::ostringstream os;
  os << "verification m=" << r.m << " at y = " << format_complex(r.y_sample)
     << ", tol = " << r.tol << "\n";
  for (const BranchCheck& c : r.checks) {
    os << "  [" << c.branch << "] " << to_string(c.verdict);
    if (c.verdict != Verdict::degenerate)
      os << ", max residual " << c.max_residual << " (E_" << c.worst_equation
         << ")";
    if (c.collides_with) os << ", coincides with branch " << *c.collides_with;
    os << "\n";
  }
  for (const auto& [tag, cc] : r.counts)
    os << to_string(tag) << ": " << cc.verified << " verified / " << cc.candidates
       << " candidates (bound " << cc.bound << ", " << cc.spurious
       << " spurious, " << cc.degenerate << " degenerate)\n";
  os << "collisions: " << r.collisions << "\n";
  os << (r.bounds_ok ? "bounds: ok" : "bounds: VIOLATED") << "\n";
  return os.str();
}

std::string render_tilde_table(const GroebnerResult& gr) {
  std::ostringstream os;
  for (int k = 1; k <= 5 && k <= gr.m + 1; ++k)
    os << "E~_" << k << " = "
       << render_polynomial(gr.tildeE[static_cast<std::size_t>(k) - 1]) << "\n";
  return os.str();
}

}  // namespace jacgb
