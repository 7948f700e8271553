#include "jacgb/groebner.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"
#include "jacgb/parallel.hpp"

namespace jacgb {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("s_polynomial: zero input");
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  return f.times_term(lf.mono.quotient_of(l), 1 / lf.coeff) -
         g.times_term(lg.mono.quotient_of(l), 1 / lg.coeff);
}

BuchbergerReport buchberger_check(std::span<const Polynomial> gens,
                                  bool use_coprime_criterion, int threads) {
  for (const Polynomial& g : gens)
    if (g.is_zero()) throw std::domain_error("buchberger_check: zero generator");

  BuchbergerReport report;
  std::vector<std::pair<std::size_t, std::size_t>> to_reduce;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++report.pairs_total;
      if (use_coprime_criterion &&
          Monomial::coprime(gens[i].leading_monomial(), gens[j].leading_monomial()))
        ++report.pairs_skipped;
      else
        to_reduce.push_back({i, j});
    }
  }

  std::vector<char> failed(to_reduce.size(), 0);
  parallel_for(to_reduce.size(), threads, [&](std::size_t idx) {
    auto [i, j] = to_reduce[idx];
    Polynomial s = s_polynomial(gens[i], gens[j]);
    if (!normal_form(s, gens).is_zero()) failed[idx] = 1;
  });

  report.pairs_reduced = to_reduce.size();
  for (std::size_t idx = 0; idx < to_reduce.size(); ++idx) {
    if (failed[idx]) {
      report.is_basis = false;
      report.failing_pair = to_reduce[idx];  // pairs are in fixed (i,j) order
      break;
    }
  }
  return report;
}

Polynomial reduce_by_relations(const Polynomial& p,
                               const std::map<int, Polynomial>& R) {
  // Replacements only involve C_{-1} and C_{-2}, so one pass suffices and
  // the substitution order is immaterial.
  Polynomial result = p;
  const RingPtr& ring = p.ring();
  if (!ring) return result;
  for (const auto& [k, rk] : R) {
    std::size_t slot = ring->c_slot(k + 2);
    if (result.contains_slot(slot)) result = result.substitute(slot, -rk);
  }
  return result;
}

namespace {

// Splits the coefficients of a polynomial in C_{-1}, C_{-2} into the
// (i, j) -> coefficient table; checks the weight constraint 2i+3j = w.
std::map<std::pair<int, int>, Rational> lambda_table(const Polynomial& r,
                                                     long long expected_weight) {
  std::map<std::pair<int, int>, Rational> table;
  if (r.is_zero()) return table;
  const Ring& ring = *r.ring();
  const std::size_t s1 = ring.c_slot(1);
  const std::size_t s2 = ring.c_slot(2);
  for (const Term& t : r.terms()) {
    int i = 0, j = 0;
    for (std::size_t slot = 0; slot < t.mono.size(); ++slot) {
      if (t.mono[slot] == 0) continue;
      if (slot == s1)
        i = t.mono[slot];
      else if (slot == s2)
        j = t.mono[slot];
      else
        throw InvariantViolation(
            "lambda table: remainder contains a variable other than C_{-1}, "
            "C_{-2}");
    }
    if (2 * i + 3 * j != expected_weight)
      throw InvariantViolation("lambda table: term violates the weight constraint");
    table.emplace(std::make_pair(i, j), t.coeff);
  }
  return table;
}

void check_c1_c2_only(const Polynomial& r, int k) {
  const RingPtr& ring = r.ring();
  if (!ring) return;
  for (std::size_t slot = 0; slot < ring->num_vars(); ++slot) {
    if (slot == ring->c_slot(1) || slot == ring->c_slot(2)) continue;
    if (r.contains_slot(slot))
      throw InvariantViolation("reduce_basis: R_" + std::to_string(k) +
                               " contains " + ring->var_name(slot) +
                               " after reduction");
  }
}

}  // namespace

GroebnerResult reduce_basis(const SystemInstance& sys) {
  GroebnerResult gr;
  gr.m = sys.m;
  gr.ring = sys.ring;
  const RingPtr& ring = sys.ring;
  const int m = sys.m;

  gr.tildeE.reserve(static_cast<std::size_t>(m) + 1);

  // Triangular pass: E_k has leading term 3*C_{-(k+2)}; dividing by 3 and
  // substituting the earlier relations leaves C_{-(k+2)} + R_k.
  for (int k = 1; k <= m - 1; ++k) {
    Polynomial p = sys.equations[static_cast<std::size_t>(k) - 1].scaled(
        make_rational(1, 3));
    p = reduce_by_relations(p, gr.R);
    Polynomial pivot = Polynomial::c(ring, k + 2);
    if (p.is_zero() || !(p.leading_term() == Term{pivot.leading_monomial(), Rational(1)}))
      throw InvariantViolation("reduce_basis: E_" + std::to_string(k) +
                               " does not reduce to a monic C_{-" +
                               std::to_string(k + 2) + "} pivot");
    Polynomial rk = p - pivot;
    check_c1_c2_only(rk, k);
    gr.tildeE.push_back(p);
    gr.R.emplace(k, std::move(rk));
  }

  // E_m and E_{m+1} reduce into Q[C_{-1}, C_{-2}] (plus the y term).
  Polynomial rm = reduce_by_relations(sys.equations[static_cast<std::size_t>(m) - 1], gr.R);
  check_c1_c2_only(rm, m);
  gr.tildeE.push_back(rm);

  Polynomial em1 = reduce_by_relations(sys.equations[static_cast<std::size_t>(m)], gr.R);
  Polynomial rm1 = em1 - Polynomial::y(ring);
  check_c1_c2_only(rm1, m + 1);
  gr.tildeE.push_back(em1);

  gr.lambda_m = lambda_table(rm, m + 1);
  gr.lambda_m1 = lambda_table(rm1, m + 2);
  gr.R.emplace(m, std::move(rm));
  gr.R.emplace(m + 1, std::move(rm1));
  return gr;
}

LambdaCheckReport lambda_closed_form_check(const GroebnerResult& gr) {
  LambdaCheckReport rep;
  rep.m = gr.m;
  const Rational m_thirds = make_rational(gr.m, 3);

  if ((gr.m + 2) % 3 == 0) {
    rep.case1_applicable = true;
    const int j = (gr.m + 2) / 3;
    rep.case1_expected =
        genbinom(m_thirds, static_cast<unsigned long>(j)) *
        rational_pow(Rational(3), static_cast<unsigned long>(j));
    auto it = gr.lambda_m1.find({0, j});
    rep.case1_actual = it == gr.lambda_m1.end() ? Rational(0) : it->second;
    rep.case1_pass = rep.case1_expected == rep.case1_actual;
  }
  if (gr.m % 2 == 0) {
    rep.case2_applicable = true;
    const int i = (gr.m + 2) / 2;
    rep.case2_expected =
        genbinom(m_thirds, static_cast<unsigned long>(i)) *
        rational_pow(Rational(3), static_cast<unsigned long>(i));
    auto it = gr.lambda_m1.find({i, 0});
    rep.case2_actual = it == gr.lambda_m1.end() ? Rational(0) : it->second;
    rep.case2_pass = rep.case2_expected == rep.case2_actual;
  }
  return rep;
}

LambdaCheckReport lambda_closed_form_check(int m) {
  return lambda_closed_form_check(reduce_basis(build_system(m)));
}

}  // namespace jacgb
