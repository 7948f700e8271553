#include "jacgb/monomial.hpp"

#include <algorithm>
#include <limits>

#include "jacgb/errors.hpp"

namespace jacgb {

namespace {
constexpr int32_t kMaxExponent = 1 << 30;

void check_same_size(const Monomial& a, const Monomial& b, const char* op) {
  if (a.size() != b.size())
    throw RingMismatchError(std::string("monomial ") + op +
                            ": dimension mismatch");
}
}  // namespace

Monomial Monomial::of_var(std::size_t nvars, std::size_t slot, int32_t exp) {
  Monomial m(nvars);
  if (slot >= nvars) throw RingMismatchError("monomial: variable slot out of range");
  if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
  m.e_[slot] = exp;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](int32_t x) { return x == 0; });
}

int64_t Monomial::total_degree() const {
  int64_t d = 0;
  for (int32_t x : e_) d += x;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  check_same_size(*this, o, "times");
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    int64_t sum = int64_t{e_[i]} + int64_t{o.e_[i]};
    if (sum > kMaxExponent)
      throw std::overflow_error("monomial: exponent overflow");
    r.e_[i] = static_cast<int32_t>(sum);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  check_same_size(*this, o, "divides");
  for (std::size_t i = 0; i < size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  check_same_size(*this, o, "quotient");
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (e_[i] > o.e_[i])
      throw std::invalid_argument("monomial: inexact quotient");
    r.e_[i] = o.e_[i] - e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b, "lcm");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  check_same_size(a, b, "coprime");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

}  // namespace jacgb
