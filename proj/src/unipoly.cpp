#include "jacgb/unipoly.hpp"

#include <stdexcept>

namespace jacgb {

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> ascending) {
  UniPoly p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

UniPoly UniPoly::constant(Rational c) { return from_coeffs({std::move(c)}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return from_coeffs(std::move(v));
}

const Rational& UniPoly::coeff(std::size_t i) const {
  static const Rational kZero(0);
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& UniPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("unipoly: zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return from_coeffs(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly p(*this);
  for (Rational& c : p.coeffs_) c = -c;
  return p;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coeffs(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  UniPoly p(*this);
  for (Rational& x : p.coeffs_) x *= c;
  p.trim();
  return p;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> v;
  v.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return from_coeffs(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return scaled(1 / leading_coeff());
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::complex<double> UniPoly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
  return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("unipoly: division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                             Rational(0));
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    Rational q = rem[static_cast<std::size_t>(d)] / b.leading_coeff();
    if (q == 0) continue;
    quot[static_cast<std::size_t>(d - db)] = q;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= q * b.coeff(static_cast<std::size_t>(i));
  }
  return {UniPoly::from_coeffs(std::move(quot)), UniPoly::from_coeffs(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero())
    throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, int>> factors;
  if (f.degree() == 0) return factors;

  // Yun's algorithm over a characteristic-zero field.
  UniPoly a = f.monic();
  UniPoly g = gcd(a, a.derivative());
  UniPoly c = divmod(a, g).first;
  UniPoly w = divmod(a.derivative(), g).first - c.derivative();
  int multiplicity = 1;
  while (c.degree() > 0) {
    UniPoly s = gcd(c, w);
    if (s.degree() > 0) factors.emplace_back(s, multiplicity);
    c = divmod(c, s).first;
    w = divmod(w, s).first - c.derivative();
    ++multiplicity;
  }
  return factors;
}

}  // namespace jacgb
