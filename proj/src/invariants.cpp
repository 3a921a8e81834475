#include "fpforge/invariants.hpp"

namespace fpforge {

AbelianInvariants abelian_invariants(const Presentation& p) {
  SmithDecomposition s = snf(exponent_matrix(p));
  AbelianInvariants out;
  for (const Int& d : s.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  out.free_rank = static_cast<std::size_t>(p.gens()) - s.rank;
  return out;
}

bool is_perfect(const Presentation& p) { return abelian_invariants(p).trivial(); }

std::size_t complex_h2_rank(const Presentation& p) {
  return p.relator_count() - snf(exponent_matrix(p)).rank;
}

}  // namespace fpforge
