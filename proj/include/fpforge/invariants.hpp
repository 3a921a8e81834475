#pragma once

#include "fpforge/intmatrix.hpp"
#include "fpforge/presentation.hpp"

namespace fpforge {

// Invariants of the abelianization: torsion factors (> 1, divisibility
// chain) and free rank. Trivial iff the group is perfect.
struct AbelianInvariants {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;
  bool trivial() const { return torsion.empty() && free_rank == 0; }
};

AbelianInvariants abelian_invariants(const Presentation& p);

bool is_perfect(const Presentation& p);

// Rank of H2 of the standard 2-complex of p (always torsion-free):
// #relators - rank(exponent matrix). Equals the group's H2 rank only for
// aspherical presentations; asphericity is the caller's assertion.
std::size_t complex_h2_rank(const Presentation& p);

}  // namespace fpforge
