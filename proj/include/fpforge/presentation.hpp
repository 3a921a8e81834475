#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpforge/intmatrix.hpp"
#include "fpforge/word.hpp"

namespace fpforge {

struct PresentationOptions {
  // Machine-built presentations may legitimately contain identity relators
  // (e.g. commutators of a generator with its own power); user seeds reject
  // them unless this flag is set.
  bool allow_identity_relators = false;
};

// Generators plus relator words. Relators are stored cyclically reduced, in
// the given order, with multiplicity (no deduplication: downstream counts
// are order- and multiplicity-sensitive).
class Presentation {
 public:
  Presentation() = default;
  Presentation(Alphabet alphabet, std::vector<Word> relators, std::string label,
               PresentationOptions options = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& label() const { return label_; }
  bool allows_identity_relators() const { return options_.allow_identity_relators; }

  int gens() const { return alphabet_.size(); }
  std::size_t relator_count() const { return relators_.size(); }

  Presentation with_label(std::string label) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
  std::string label_;
  PresentationOptions options_;
};

struct ValidationIssue {
  enum class Kind { DuplicateName, InvalidName, UnreducedRelator, IdentityRelator, BadIndex };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::optional<Presentation> normalized;  // present when no blocking issue
  bool ok() const { return normalized.has_value(); }
};

// Report-style validation of raw data; normalizes (cyclic reduction) in the
// returned copy. Identity relators block unless options allow them; with the
// flag set they are still reported, but as non-blocking notes.
ValidationReport validate(const std::vector<std::string>& names, const std::vector<Word>& relators,
                          const std::string& label, PresentationOptions options = {});

// Entry (i, j) = exponent sum of generator j in relator i.
IntMatrix exponent_matrix(const Presentation& p);

// Isomorphic copy with every generator renamed name+suffix. Collisions with
// existing names (including the empty suffix) are errors.
Presentation rename_disjoint(const Presentation& p, const std::string& suffix);

// Text format, line-based:
//   # comment (a leading "# label: <text>" comment round-trips the label)
//   gens: n1 n2 ...
//   one relator per line in the word grammar
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text, const std::string& fallback_label,
                                PresentationOptions options = {});
Presentation read_presentation_file(const std::string& path, PresentationOptions options = {});

}  // namespace fpforge
