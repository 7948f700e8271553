#include "jacgb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "jacgb/errors.hpp"

namespace jacgb {

ExactRootCount roots_exact_count(const UniPoly& f) {
  if (f.is_zero())
    throw std::domain_error(
        "roots_exact_count: degenerate case, polynomial identically zero");
  ExactRootCount r;
  r.squarefree = squarefree_part(f);
  r.count = std::max(0, r.squarefree.degree());
  return r;
}

namespace {

// |p|(|z|) with absolute coefficient values; residual scale.
double residual_scale(const std::vector<std::complex<double>>& coeffs, double az) {
  double s = 0.0, p = 1.0;
  for (const auto& c : coeffs) {
    s += std::abs(c) * p;
    p *= az;
  }
  return std::max(1.0, s);
}

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs,
                            std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace

std::vector<std::complex<double>> roots_numeric(const UniPoly& squarefree,
                                                double tol, unsigned seed) {
  if (tol <= 0) throw std::invalid_argument("roots_numeric: tol must be positive");
  if (squarefree.degree() < 1)
    throw std::domain_error("roots_numeric: polynomial must be nonconstant");

  const UniPoly p = squarefree.monic();
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(n + 1);
  for (const Rational& c : p.coeffs()) coeffs.emplace_back(to_double(c), 0.0);

  // Cauchy bound for the root radius.
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
  radius = 1.0 + radius;

  // Seeded starting points on a circle, angles jittered so no starting
  // point coincides with a symmetric root configuration.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(0.05, 0.45);
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * M_PI * (static_cast<double>(k) + jitter(rng)) /
                   static_cast<double>(n);
    z[k] = std::polar(0.8 * radius, angle);
  }

  const int max_iterations = 2000;
  bool converged = false;
  for (int it = 0; it < max_iterations && !converged; ++it) {
    double max_step = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      std::complex<double> step = horner(coeffs, z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    double largest = 1.0;
    for (const auto& zk : z) largest = std::max(largest, std::abs(zk));
    converged = max_step < 1e-15 * largest;
  }

  for (std::size_t k = 0; k < n; ++k) {
    double res = std::abs(horner(coeffs, z[k]));
    if (!(res < tol * residual_scale(coeffs, std::abs(z[k]))))
      throw NumericError("roots_numeric: iteration did not reach residual " +
                         std::to_string(tol) + "; root " + std::to_string(k) +
                         " residual " + std::to_string(res));
  }

  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

std::vector<RootDatum> analyze_roots(const UniPoly& f, double tol, unsigned seed) {
  ExactRootCount exact = roots_exact_count(f);
  std::vector<RootDatum> roots;
  if (exact.count == 0) return roots;

  std::vector<std::complex<double>> approx = roots_numeric(exact.squarefree, tol, seed);
  auto yun = squarefree_decomposition(f);

  int mult_sum = 0;
  for (std::size_t k = 0; k < approx.size(); ++k) {
    RootDatum rd;
    rd.defining = exact.squarefree;
    rd.approx = approx[k];
    rd.index = static_cast<int>(k);
    // The Yun factor this root belongs to carries its multiplicity.
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [factor, mult] : yun) {
      double v = std::abs(factor.eval(approx[k]));
      if (v < best) {
        best = v;
        rd.multiplicity = mult;
      }
    }
    mult_sum += rd.multiplicity;
    roots.push_back(std::move(rd));
  }
  if (mult_sum != f.degree())
    throw NumericError("analyze_roots: multiplicities sum to " +
                       std::to_string(mult_sum) + ", expected " +
                       std::to_string(f.degree()));
  return roots;
}

}  // namespace jacgb
