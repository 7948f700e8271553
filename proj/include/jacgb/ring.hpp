#pragma once

#include <memory>
#include <string>

#include "jacgb/monomial_order.hpp"

namespace jacgb {

// The polynomial ring Q[C_{-1}, ..., C_{-(m+1)}, y] for one value of the
// system parameter m, together with its monomial order. Variable slots
// follow the canonical order C_{-(m+1)}, C_{-m}, ..., C_{-1}, y; "C_k" in
// serialized interfaces denotes C_{-k}.
class Ring {
 public:
  explicit Ring(int m);

  int m() const { return m_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(m_) + 2; }

  // Slot of C_{-k}, 1 <= k <= m+1.
  std::size_t c_slot(int k) const;
  std::size_t y_slot() const { return num_vars() - 1; }
  bool is_y_slot(std::size_t slot) const { return slot == y_slot(); }
  // k for C_{-k}; 0 when the slot is y.
  int c_index(std::size_t slot) const;

  // w(C_{-k}) = k+1, w(y) = m+2.
  long long var_weight(std::size_t slot) const;
  // "C_{-k}" or "y".
  std::string var_name(std::size_t slot) const;

  const MonomialOrder& order() const { return order_; }

 private:
  int m_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int m);

// Rings are interchangeable exactly when built for the same m.
inline bool same_ring(const Ring& a, const Ring& b) { return a.m() == b.m(); }

}  // namespace jacgb
