#pragma once

#include <cstdint>
#include <vector>

#include "fpforge/perm.hpp"
#include "fpforge/presentation.hpp"

namespace fpforge {

enum class CosetStrategy { HLT, Felsch };

// Result of a coset enumeration over the subgroup generated by subgens.
// Complete tables are standardized (BFS numbering from coset 0) and satisfy:
// per-generator actions are permutations, the action is transitive from
// coset 0, every relator acts trivially everywhere, and every subgroup
// generator fixes coset 0.
struct CosetTable {
  enum class Status { Complete, Exhausted };
  Status status = Status::Exhausted;
  std::size_t cosets = 0;                 // the index, when Complete
  std::size_t limit = 0;                  // the limit the run was given
  std::vector<std::vector<int>> action;   // per generator: images of 0..cosets-1

  bool complete() const { return status == Status::Complete; }
  std::vector<Perm> action_perms() const;
};

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::size_t limit, CosetStrategy strategy = CosetStrategy::HLT);

}  // namespace fpforge
