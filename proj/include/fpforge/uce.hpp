#pragma once

#include <vector>

#include "fpforge/intmatrix.hpp"
#include "fpforge/invariants.hpp"
#include "fpforge/presentation.hpp"

namespace fpforge {

// Provenance of one output relator of the extension builder.
struct UceRelatorTag {
  enum class Kind { Commutator, RelatorPower };
  Kind kind;
  int gen = -1;                 // the generator x
  int relator = -1;             // input relator index (Commutator only)
  std::vector<Int> exponents;   // the row n with n * E = e_x (RelatorPower only)
};

struct UceResult {
  Presentation presentation;       // same generators as the input
  std::vector<Word> central_words; // the input relators; their images generate the kernel
  std::vector<std::vector<Int>> solver_exponents;  // per generator
  std::vector<UceRelatorTag> tags; // one per output relator, in order
};

// Presentation of the universal central extension of a perfect group:
// relators are the commutators [x, b] for every generator x and input
// relator b, followed by one relator-power product per generator whose
// exponent vector is the standard basis vector of that generator.
// Output relator count = #gens * (1 + #input relators).
UceResult universal_central_extension(const Presentation& p);

}  // namespace fpforge
