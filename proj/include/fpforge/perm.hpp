#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fpforge/intmatrix.hpp"
#include "fpforge/presentation.hpp"

namespace fpforge {

// Permutation of {0..degree-1}; composition is left-to-right:
// (a * b)(x) = b(a(x)), matching word evaluation order.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

// Cycle notation with 1-based points: "(1 2)(3 4)", identity "()".
Perm parse_cycles(const std::string& text, int degree);
std::string print_cycles(const Perm& p);

// Exact order of the group generated by perms (deterministic Schreier-Sims).
Int perm_group_order(const std::vector<Perm>& gens);

// Membership test against the generated group.
bool perm_group_contains(const std::vector<Perm>& gens, const Perm& candidate);

// Generator-image assignment for a presentation.
struct PermHom {
  int degree = 0;
  std::vector<Perm> images;  // one per generator

  Perm evaluate(const Word& w) const;
  // True when every relator maps to the identity.
  bool satisfies(const Presentation& p) const;
  Int image_order() const { return perm_group_order(images); }
  bool is_trivial() const;

  bool operator==(const PermHom&) const = default;
  auto operator<=>(const PermHom&) const = default;
};

// Hom file format: one line per generator, "name: cycle-notation".
PermHom parse_hom_file(const std::string& text, const Alphabet& alphabet, int degree_hint = 0);
std::string format_hom(const PermHom& hom, const Alphabet& alphabet);

}  // namespace fpforge
