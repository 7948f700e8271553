#include "jacgb/json_io.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

namespace {

// JSON exponent vectors follow the serialized variable list C1..C{m+1}, y;
// internal monomial slots are C_{-(m+1)}..C_{-1}, y.
std::vector<int> json_exponents(const Ring& ring, const Monomial& mono) {
  const int m = ring.m();
  std::vector<int> e(ring.num_vars());
  for (int k = 1; k <= m + 1; ++k)
    e[static_cast<std::size_t>(k) - 1] = mono[ring.c_slot(k)];
  e.back() = mono[ring.y_slot()];
  return e;
}

Monomial monomial_from_json_exponents(const Ring& ring, const Json& e) {
  if (!e.is_array() || e.size() != ring.num_vars())
    throw std::invalid_argument("polynomial json: bad exponent vector");
  Monomial mono(ring.num_vars());
  const int m = ring.m();
  for (int k = 1; k <= m + 1; ++k)
    mono[ring.c_slot(k)] = e[static_cast<std::size_t>(k) - 1].get<int32_t>();
  mono[ring.y_slot()] = e.back().get<int32_t>();
  return mono;
}

std::vector<std::string> json_var_names(int m) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(m) + 2);
  for (int k = 1; k <= m + 1; ++k) vars.push_back("C" + std::to_string(k));
  vars.push_back("y");
  return vars;
}

}  // namespace

Json to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex json: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Polynomial& p) {
  if (!p.ring()) throw std::invalid_argument("polynomial json: ring-less value");
  const Ring& ring = *p.ring();
  Json j;
  j["m"] = ring.m();
  j["vars"] = json_var_names(ring.m());
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json term;
    term["c"] = to_string(t.coeff);
    term["e"] = json_exponents(ring, t.mono);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  RingPtr ring = make_ring(m);
  if (j.at("vars") != Json(json_var_names(m)))
    throw std::invalid_argument("polynomial json: unexpected variable list");
  std::vector<Term> terms;
  for (const Json& t : j.at("terms"))
    terms.push_back({monomial_from_json_exponents(*ring, t.at("e")),
                     rational_from_string(t.at("c").get<std::string>())});
  return Polynomial::from_terms(std::move(ring), std::move(terms));
}

Json to_json(const LaurentSeries& s) {
  Json j;
  j["m"] = s.ring()->m();
  j["trunc"] = s.truncation();
  Json coeffs = Json::object();
  for (const auto& [e, c] : s.coeffs()) coeffs[std::to_string(e)] = to_json(c);
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentSeries laurent_from_json(const Json& j) {
  RingPtr ring = make_ring(j.at("m").get<int>());
  LaurentSeries s(ring, j.at("trunc").get<int>());
  for (const auto& [key, value] : j.at("coeffs").items())
    s.set_coeff(std::stoi(key), polynomial_from_json(value));
  return s;
}

Json to_json(const SystemInstance& sys) {
  Json j;
  j["m"] = sys.m;
  j["weights"] = sys.weights;
  Json eqs = Json::array();
  for (const Polynomial& e : sys.equations) eqs.push_back(to_json(e));
  j["equations"] = std::move(eqs);
  return j;
}

SystemInstance system_from_json(const Json& j) {
  SystemInstance sys;
  sys.m = j.at("m").get<int>();
  sys.ring = make_ring(sys.m);
  sys.weights = j.at("weights").get<std::vector<long long>>();
  for (const Json& e : j.at("equations"))
    sys.equations.push_back(polynomial_from_json(e));
  return sys;
}

namespace {

Json lambda_to_json(const std::map<std::pair<int, int>, Rational>& table) {
  Json arr = Json::array();
  for (const auto& [key, value] : table) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["c"] = to_string(value);
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::map<std::pair<int, int>, Rational> lambda_from_json(const Json& arr) {
  std::map<std::pair<int, int>, Rational> table;
  for (const Json& entry : arr)
    table.emplace(
        std::make_pair(entry.at("i").get<int>(), entry.at("j").get<int>()),
        rational_from_string(entry.at("c").get<std::string>()));
  return table;
}

}  // namespace

Json to_json(const GroebnerResult& gr) {
  Json j;
  j["m"] = gr.m;
  Json basis = Json::array();
  for (const Polynomial& p : gr.tildeE) basis.push_back(to_json(p));
  j["tildeE"] = std::move(basis);
  Json remainders = Json::object();
  for (const auto& [k, r] : gr.R) remainders[std::to_string(k)] = to_json(r);
  j["R"] = std::move(remainders);
  j["lambda_m"] = lambda_to_json(gr.lambda_m);
  j["lambda_m1"] = lambda_to_json(gr.lambda_m1);
  return j;
}

GroebnerResult groebner_from_json(const Json& j) {
  GroebnerResult gr;
  gr.m = j.at("m").get<int>();
  gr.ring = make_ring(gr.m);
  for (const Json& p : j.at("tildeE")) gr.tildeE.push_back(polynomial_from_json(p));
  for (const auto& [key, value] : j.at("R").items())
    gr.R.emplace(std::stoi(key), polynomial_from_json(value));
  gr.lambda_m = lambda_from_json(j.at("lambda_m"));
  gr.lambda_m1 = lambda_from_json(j.at("lambda_m1"));
  return gr;
}

Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

UniPoly unipoly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coeffs"))
    coeffs.push_back(rational_from_string(c.get<std::string>()));
  return UniPoly::from_coeffs(std::move(coeffs));
}

Json to_json(const CasePolynomials& cp) {
  Json j;
  j["case"] = to_string(cp.tag);
  j["f"] = to_json(cp.f);
  j["g"] = to_json(cp.g);
  return j;
}

CasePolynomials case_polynomials_from_json(const Json& j) {
  CasePolynomials cp;
  cp.tag = case_tag_from_string(j.at("case").get<std::string>());
  cp.f = unipoly_from_json(j.at("f"));
  cp.g = unipoly_from_json(j.at("g"));
  return cp;
}

Json to_json(const RootDatum& r) {
  Json j;
  j["defining"] = to_json(r.defining);
  j["approx"] = to_json(r.approx);
  j["multiplicity"] = r.multiplicity;
  j["index"] = r.index;
  return j;
}

RootDatum root_from_json(const Json& j) {
  RootDatum r;
  r.defining = unipoly_from_json(j.at("defining"));
  r.approx = complex_from_json(j.at("approx"));
  r.multiplicity = j.at("multiplicity").get<int>();
  r.index = j.at("index").get<int>();
  return r;
}

Json to_json(const SolutionBranch& b) {
  Json j;
  j["case"] = to_string(b.tag);
  j["m"] = b.m;
  j["unity_index"] = b.unity_index;
  j["radical_order"] = b.radical_order;
  j["sqrt_choice"] = b.sqrt_choice;
  j["root_index"] = b.root_index ? Json(*b.root_index) : Json(nullptr);
  j["t"] = to_json(b.t_value);
  j["g_at_t"] = to_json(b.g_value);
  j["pivot_lambda"] = to_string(b.pivot_lambda);
  j["C1_exponent"] = to_string(b.c1_exponent);
  j["C2_exponent"] = to_string(b.c2_exponent);
  j["C1_is_zero"] = b.c1_is_zero;
  j["C2_is_zero"] = b.c2_is_zero;
  j["degenerate"] = b.degenerate;
  j["degenerate_reason"] = b.degenerate_reason;
  j["duplicate_of"] = b.duplicate_of ? Json(*b.duplicate_of) : Json(nullptr);
  j["closed_form"] = b.closed_form;
  return j;
}

SolutionBranch branch_from_json(const Json& j) {
  SolutionBranch b;
  b.tag = case_tag_from_string(j.at("case").get<std::string>());
  b.m = j.at("m").get<int>();
  b.unity_index = j.at("unity_index").get<int>();
  b.radical_order = j.at("radical_order").get<int>();
  b.sqrt_choice = j.at("sqrt_choice").get<int>();
  if (!j.at("root_index").is_null()) b.root_index = j.at("root_index").get<int>();
  b.t_value = complex_from_json(j.at("t"));
  b.g_value = complex_from_json(j.at("g_at_t"));
  b.pivot_lambda = rational_from_string(j.at("pivot_lambda").get<std::string>());
  b.c1_exponent = rational_from_string(j.at("C1_exponent").get<std::string>());
  b.c2_exponent = rational_from_string(j.at("C2_exponent").get<std::string>());
  b.c1_is_zero = j.at("C1_is_zero").get<bool>();
  b.c2_is_zero = j.at("C2_is_zero").get<bool>();
  b.degenerate = j.at("degenerate").get<bool>();
  b.degenerate_reason = j.at("degenerate_reason").get<std::string>();
  if (!j.at("duplicate_of").is_null())
    b.duplicate_of = j.at("duplicate_of").get<int>();
  b.closed_form = j.at("closed_form").get<std::string>();
  return b;
}

Json to_json(const Analysis& a) {
  Json j;
  j["m"] = a.m;
  Json cases = Json::array();
  for (CaseTag tag : a.cases) cases.push_back(to_string(tag));
  j["cases"] = std::move(cases);
  j["case_polynomials"] = to_json(a.cp);
  j["f_identically_zero"] = a.f_identically_zero;
  j["root_count"] = a.root_count;
  Json roots = Json::array();
  for (const RootDatum& r : a.roots) roots.push_back(to_json(r));
  j["roots"] = std::move(roots);
  Json branches = Json::array();
  for (const SolutionBranch& b : a.branches) branches.push_back(to_json(b));
  j["branches"] = std::move(branches);
  return j;
}

Analysis analysis_from_json(const Json& j) {
  Analysis a;
  a.m = j.at("m").get<int>();
  for (const Json& tag : j.at("cases"))
    a.cases.insert(case_tag_from_string(tag.get<std::string>()));
  a.cp = case_polynomials_from_json(j.at("case_polynomials"));
  a.f_identically_zero = j.at("f_identically_zero").get<bool>();
  a.root_count = j.at("root_count").get<int>();
  for (const Json& r : j.at("roots")) a.roots.push_back(root_from_json(r));
  for (const Json& b : j.at("branches")) a.branches.push_back(branch_from_json(b));
  return a;
}

Json to_json(const BuchbergerReport& r) {
  Json j;
  j["is_basis"] = r.is_basis;
  j["failing_pair"] = r.failing_pair
                          ? Json::array({r.failing_pair->first, r.failing_pair->second})
                          : Json(nullptr);
  j["pairs_total"] = r.pairs_total;
  j["pairs_skipped"] = r.pairs_skipped;
  j["pairs_reduced"] = r.pairs_reduced;
  return j;
}

BuchbergerReport buchberger_report_from_json(const Json& j) {
  BuchbergerReport r;
  r.is_basis = j.at("is_basis").get<bool>();
  if (!j.at("failing_pair").is_null())
    r.failing_pair = {j.at("failing_pair")[0].get<std::size_t>(),
                      j.at("failing_pair")[1].get<std::size_t>()};
  r.pairs_total = j.at("pairs_total").get<std::size_t>();
  r.pairs_skipped = j.at("pairs_skipped").get<std::size_t>();
  r.pairs_reduced = j.at("pairs_reduced").get<std::size_t>();
  return r;
}

Json to_json(const BranchCheck& c) {
  Json j;
  j["branch"] = c.branch;
  j["residual"] = c.residual;
  j["max_residual"] = c.max_residual;
  j["worst_equation"] = c.worst_equation;
  j["verdict"] = to_string(c.verdict);
  j["collides_with"] = c.collides_with ? Json(*c.collides_with) : Json(nullptr);
  return j;
}

BranchCheck branch_check_from_json(const Json& j) {
  BranchCheck c;
  c.branch = j.at("branch").get<int>();
  c.residual = j.at("residual").get<std::vector<double>>();
  c.max_residual = j.at("max_residual").get<double>();
  c.worst_equation = j.at("worst_equation").get<int>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!j.at("collides_with").is_null())
    c.collides_with = j.at("collides_with").get<int>();
  return c;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["m"] = r.m;
  j["y_sample"] = to_json(r.y_sample);
  j["tol"] = r.tol;
  Json checks = Json::array();
  for (const BranchCheck& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  Json counts = Json::object();
  for (const auto& [tag, cc] : r.counts) {
    Json entry;
    entry["candidates"] = cc.candidates;
    entry["verified"] = cc.verified;
    entry["spurious"] = cc.spurious;
    entry["degenerate"] = cc.degenerate;
    entry["bound"] = cc.bound;
    counts[to_string(tag)] = std::move(entry);
  }
  j["counts"] = std::move(counts);
  j["collisions"] = r.collisions;
  j["bounds_ok"] = r.bounds_ok;
  return j;
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport r;
  r.m = j.at("m").get<int>();
  r.y_sample = complex_from_json(j.at("y_sample"));
  r.tol = j.at("tol").get<double>();
  for (const Json& c : j.at("checks")) r.checks.push_back(branch_check_from_json(c));
  for (const auto& [key, value] : j.at("counts").items()) {
    CaseCount cc;
    cc.candidates = value.at("candidates").get<long long>();
    cc.verified = value.at("verified").get<long long>();
    cc.spurious = value.at("spurious").get<long long>();
    cc.degenerate = value.at("degenerate").get<long long>();
    cc.bound = value.at("bound").get<long long>();
    r.counts.emplace(case_tag_from_string(key), cc);
  }
  r.collisions = j.at("collisions").get<int>();
  r.bounds_ok = j.at("bounds_ok").get<bool>();
  return r;
}

}  // namespace jacgb
