#include "jacgb/ring.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"

namespace jacgb {

Ring::Ring(int m) : m_(m), order_(MonomialOrder::weighted_degrevlex(m)) {
  if (m < 1) throw std::domain_error("ring: m must be >= 1");
}

std::size_t Ring::c_slot(int k) const {
  if (k < 1 || k > m_ + 1)
    throw RingMismatchError("ring: C_{-" + std::to_string(k) +
                            "} is not a variable of the m=" +
                            std::to_string(m_) + " ring");
  return static_cast<std::size_t>(m_ + 1 - k);
}

int Ring::c_index(std::size_t slot) const {
  if (slot >= num_vars()) throw RingMismatchError("ring: slot out of range");
  if (is_y_slot(slot)) return 0;
  return m_ + 1 - static_cast<int>(slot);
}

long long Ring::var_weight(std::size_t slot) const {
  if (slot >= num_vars()) throw RingMismatchError("ring: slot out of range");
  if (is_y_slot(slot)) return m_ + 2;
  return c_index(slot) + 1;
}

std::string Ring::var_name(std::size_t slot) const {
  if (is_y_slot(slot)) return "y";
  return "C_{-" + std::to_string(c_index(slot)) + "}";
}

RingPtr make_ring(int m) { return std::make_shared<const Ring>(m); }

}  // namespace jacgb
