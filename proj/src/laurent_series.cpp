#include "jacgb/laurent_series.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

LaurentSeries::LaurentSeries(RingPtr ring, int truncation)
    : ring_(std::move(ring)), trunc_(truncation), zero_(Polynomial::zero(ring_)) {}

int LaurentSeries::top_degree() const {
  return coeffs_.empty() ? trunc_ - 1 : coeffs_.begin()->first;
}

const Polynomial& LaurentSeries::coeff(int k) const {
  if (k < trunc_)
    throw TruncationError("laurent: coefficient of x^" + std::to_string(k) +
                          " lies below the exact window (truncation " +
                          std::to_string(trunc_) + ")");
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? zero_ : it->second;
}

void LaurentSeries::set_coeff(int k, Polynomial value) {
  if (k < trunc_)
    throw TruncationError("laurent: cannot set coefficient below the window");
  if (value.is_zero())
    coeffs_.erase(k);
  else
    coeffs_.insert_or_assign(k, std::move(value));
}

LaurentSeries LaurentSeries::multiply(const LaurentSeries& o) const {
  if (!same_ring(*ring_, *o.ring_))
    throw RingMismatchError("laurent: operands over different rings");
  const int top_a = top_degree();
  const int top_b = o.top_degree();
  // Unknown tails of one factor meet retained terms of the other at
  // exponents below these bounds; everything at or above is exact.
  const int floor = std::max(trunc_ + top_b, o.trunc_ + top_a);
  LaurentSeries r(ring_, floor);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      const int e = ea + eb;
      if (e < floor) continue;
      Polynomial prod = ca * cb;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        if (!prod.is_zero()) r.coeffs_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return ring_->m() == o.ring_->m() && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

LaurentSeries generic_C(RingPtr ring, int truncation) {
  if (truncation > -1)
    throw std::domain_error("generic_C: truncation must be <= -1");
  if (-truncation > ring->m() + 1)
    throw std::domain_error("generic_C: truncation " + std::to_string(truncation) +
                            " needs coefficient C_{-" + std::to_string(-truncation) +
                            "}, beyond the m=" + std::to_string(ring->m()) +
                            " ring variables");
  LaurentSeries s(ring, truncation);
  s.set_coeff(1, Polynomial::constant(ring, Rational(1)));
  for (int k = 1; k <= -truncation; ++k) s.set_coeff(-k, Polynomial::c(ring, k));
  return s;
}

LaurentSeries series_pow(const LaurentSeries& s, unsigned n) {
  if (n < 1) throw std::domain_error("series_pow: exponent must be >= 1");
  LaurentSeries result = s;
  LaurentSeries base = s;
  n -= 1;
  while (n > 0) {
    if (n & 1u) result = result.multiply(base);
    n >>= 1;
    if (n > 0) base = base.multiply(base);
  }
  return result;
}

const Polynomial& coeff_at(const LaurentSeries& s, int k) { return s.coeff(k); }

}  // namespace jacgb
