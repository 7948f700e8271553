#pragma once

#include <json.hpp>

#include "jacgb/verifier.hpp"

namespace jacgb {

// Insertion-ordered JSON keeps emitted documents byte-stable; every
// to_json here round-trips exactly through its from_json counterpart.
using Json = nlohmann::ordered_json;

Json to_json(const std::complex<double>& z);
std::complex<double> complex_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

Json to_json(const SystemInstance& sys);
SystemInstance system_from_json(const Json& j);

Json to_json(const GroebnerResult& gr);
GroebnerResult groebner_from_json(const Json& j);

Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const CasePolynomials& cp);
CasePolynomials case_polynomials_from_json(const Json& j);

Json to_json(const RootDatum& r);
RootDatum root_from_json(const Json& j);

Json to_json(const SolutionBranch& b);
SolutionBranch branch_from_json(const Json& j);

Json to_json(const Analysis& a);
Analysis analysis_from_json(const Json& j);

Json to_json(const BuchbergerReport& r);
BuchbergerReport buchberger_report_from_json(const Json& j);

Json to_json(const BranchCheck& c);
BranchCheck branch_check_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const Json& j);

}  // namespace jacgb
