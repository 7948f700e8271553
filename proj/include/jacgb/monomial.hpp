#pragma once

#include <cstdint>
#include <vector>

namespace jacgb {

// Exponent vector, one slot per ring variable. All entries >= 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

  static Monomial of_var(std::size_t nvars, std::size_t slot, int32_t exp = 1);

  std::size_t size() const { return e_.size(); }
  int32_t operator[](std::size_t i) const { return e_[i]; }
  int32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int32_t>& exponents() const { return e_; }

  bool is_unit() const;
  int64_t total_degree() const;

  // Product of exponent vectors; overflow-checked.
  Monomial times(const Monomial& o) const;
  // True when this divides o slotwise.
  bool divides(const Monomial& o) const;
  // o / this, requiring divisibility.
  Monomial quotient_of(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const = default;

 private:
  std::vector<int32_t> e_;
};

}  // namespace jacgb
