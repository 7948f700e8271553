#include "jacgb/rational.hpp"

#include <stdexcept>

namespace jacgb {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rational: malformed value '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, unsigned long e) {
  Rational result(1);
  Rational base = q;
  while (e > 0) {
    if (e & 1ul) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational genbinom(const Rational& q, unsigned long k) {
  Rational result(1);
  for (unsigned long t = 0; t < k; ++t) {
    result *= q - Rational(static_cast<long>(t));
    result /= Rational(static_cast<long>(t) + 1);
  }
  return result;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace jacgb
