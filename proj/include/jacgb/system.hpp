#pragma once

#include <vector>

#include "jacgb/laurent_series.hpp"
#include "jacgb/polynomial.hpp"

namespace jacgb {

// The full equation system for one parameter value m:
//   E_k     = (C^3)_{-k}        for k = 1..m-1,
//   E_m     = (C^m)_{-1},
//   E_{m+1} = (C^m)_{-2} + y,
// each weighted-homogeneous (weights k+3, m+1, m+2 respectively).
struct SystemInstance {
  int m = 0;
  RingPtr ring;
  std::vector<Polynomial> equations;  // equations[k-1] = E_k
  std::vector<long long> weights;     // expected weight of E_k

  bool operator==(const SystemInstance& o) const {
    return m == o.m && equations == o.equations && weights == o.weights;
  }
};

// Throws std::domain_error unless m > 3 and 3 does not divide m. The
// message quotes the constraint "3∤m>3".
void validate_system_m(int m);

SystemInstance build_system(int m);

// E_k for 1 <= k <= m-1 assembled directly from the combinatorial closed
// form (squares, unordered pairs, unordered triples and the cube term),
// independent of the series expansion. The second generator of the pair.
Polynomial build_Ek_closed_form(int m, int k);
Polynomial build_Ek_closed_form(const RingPtr& ring, int k);

}  // namespace jacgb
