#include "jacgb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

namespace {

std::complex<double> complex_pow(std::complex<double> base, int32_t exp) {
  std::complex<double> result(1.0, 0.0);
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial p;
  if (value != 0) p.terms_.push_back({Monomial(ring->num_vars()), std::move(value)});
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t slot, int32_t exp) {
  Polynomial p;
  if (exp < 0) throw std::invalid_argument("polynomial: negative exponent");
  if (exp == 0) return constant(std::move(ring), Rational(1));
  p.terms_.push_back({Monomial::of_var(ring->num_vars(), slot, exp), Rational(1)});
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::c(RingPtr ring, int k, int32_t exp) {
  std::size_t slot = ring->c_slot(k);
  return variable(std::move(ring), slot, exp);
}

Polynomial Polynomial::y(RingPtr ring) {
  std::size_t slot = ring->y_slot();
  return variable(std::move(ring), slot);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(terms);
  for (const Term& t : p.terms_)
    if (t.mono.size() != p.ring_->num_vars())
      throw RingMismatchError("polynomial: term dimension mismatch");
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  if (terms_.empty()) return;
  const MonomialOrder& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&ord](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  }
  terms_ = std::move(merged);
}

const RingPtr& Polynomial::merged_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_) {
    if (!same_ring(*a.ring_, *b.ring_))
      throw RingMismatchError("polynomial: operands over different rings (m=" +
                              std::to_string(a.ring_->m()) + " vs m=" +
                              std::to_string(b.ring_->m()) + ")");
    return a.ring_;
  }
  return a.ring_ ? a.ring_ : b.ring_;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::domain_error("polynomial: zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const RingPtr& ring = merged_ring(*this, o);
  if (!ring) return Polynomial();
  const MonomialOrder& ord = ring->order();
  Polynomial r;
  r.ring_ = ring;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int cmp = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  const RingPtr& ring = merged_ring(*this, o);
  if (!ring || terms_.empty() || o.terms_.empty()) return Polynomial::zero(ring);
  // All cross products, then one sort-and-merge pass; cheaper than a
  // node-based accumulator for the sizes the series powers produce.
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      products.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
  return from_terms(ring, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial::zero(ring_);
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& mono, const Rational& c) const {
  if (c == 0) return Polynomial::zero(ring_);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono.times(mono), t.coeff * c});
  return r;  // multiplying by one monomial preserves the descending order
}

Polynomial Polynomial::pow(unsigned n) const {
  if (!ring_) throw std::domain_error("polynomial: pow on ring-less zero");
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ && o.ring_ && !same_ring(*ring_, *o.ring_)) return false;
  return terms_ == o.terms_;
}

std::optional<long long> Polynomial::weight() const {
  if (terms_.empty())
    throw std::domain_error("polynomial: weight of the zero polynomial");
  const MonomialOrder& ord = ring_->order();
  long long w = ord.weighted_degree(terms_.front().mono);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.weighted_degree(terms_[i].mono) != w) return std::nullopt;
  return w;
}

bool Polynomial::contains_slot(std::size_t slot) const {
  for (const Term& t : terms_)
    if (t.mono[slot] != 0) return true;
  return false;
}

int32_t Polynomial::max_exponent_of(std::size_t slot) const {
  int32_t e = 0;
  for (const Term& t : terms_) e = std::max(e, t.mono[slot]);
  return e;
}

Polynomial Polynomial::substitute(std::size_t slot,
                                  const Polynomial& replacement) const {
  if (!ring_) return *this;
  if (slot >= ring_->num_vars())
    throw RingMismatchError("polynomial: substitution slot out of range");
  if (!contains_slot(slot)) return *this;

  // Bucket the terms by their exponent at `slot`, then recombine against
  // precomputed replacement powers.
  int32_t max_e = max_exponent_of(slot);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(max_e) + 1);
  for (const Term& t : terms_) {
    Term reduced = t;
    int32_t e = reduced.mono[slot];
    reduced.mono[slot] = 0;
    buckets[static_cast<std::size_t>(e)].push_back(std::move(reduced));
  }

  Polynomial result = Polynomial::zero(ring_);
  Polynomial power = Polynomial::constant(ring_, Rational(1));
  for (std::size_t e = 0; e < buckets.size(); ++e) {
    if (!buckets[e].empty()) {
      Polynomial part = Polynomial::from_terms(ring_, std::move(buckets[e]));
      result += part * power;
    }
    if (e + 1 < buckets.size()) power = power * replacement;
  }
  return result;
}

std::complex<double> Polynomial::evaluate(
    std::span<const std::complex<double>> values) const {
  if (!ring_) return {0.0, 0.0};
  if (values.size() != ring_->num_vars())
    throw RingMismatchError("polynomial: evaluation vector has wrong length");
  std::complex<double> sum(0.0, 0.0);
  for (const Term& t : terms_) {
    std::complex<double> v(to_double(t.coeff), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (t.mono[i] != 0) v *= complex_pow(values[i], t.mono[i]);
    sum += v;
  }
  return sum;
}

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const Polynomial& d : divisors)
    if (d.is_zero()) throw std::domain_error("division: zero divisor");

  // LT(h) strictly decreases, so per-divisor quotient terms and remainder
  // terms arrive already in descending order and can simply be appended.
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;

  Polynomial h = p;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dlt = divisors[i].leading_term();
      if (dlt.mono.divides(lt.mono)) {
        Monomial q = dlt.mono.quotient_of(lt.mono);
        Rational c = lt.coeff / dlt.coeff;
        h -= divisors[i].times_term(q, c);
        quotient_terms[i].push_back({std::move(q), std::move(c)});
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder_terms.push_back(lt);
      h -= Polynomial::from_terms(h.ring(), {lt});
    }
  }

  DivisionResult res;
  res.quotients.reserve(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i)
    res.quotients.push_back(
        Polynomial::from_terms(p.ring(), std::move(quotient_terms[i])));
  res.remainder = Polynomial::from_terms(p.ring(), std::move(remainder_terms));
  return res;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors) {
  return divide(p, divisors).remainder;
}

}  // namespace jacgb
