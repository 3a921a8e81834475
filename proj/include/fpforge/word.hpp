#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fpforge/error.hpp"

namespace fpforge {

// Ordered set of generator names. Index order is significant and stable.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  static bool valid_name(std::string_view name);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  // Returns -1 when the name is unknown.
  int index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name) >= 0; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// One signed letter g^{+1} or g^{-1}.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Run-length syllable g^exp, exp != 0.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;
  bool operator==(const Syllable&) const = default;
};

// Freely reduced word: adjacent syllables use distinct generators, no zero
// exponents. The empty word is the identity. Immutable after construction.
class Word {
 public:
  Word() = default;

  static Word generator(int gen) { return power(gen, 1); }
  static Word power(int gen, std::int64_t exp);
  static Word from_syllables(const std::vector<Syllable>& syllables);

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  std::int64_t length() const;  // number of letters
  int max_gen() const;          // largest generator index used, -1 if identity

  Word inverse() const;
  Word pow(std::int64_t n) const;
  std::vector<Letter> letters() const;

  bool operator==(const Word&) const = default;

  friend Word operator*(const Word& a, const Word& b);

 private:
  // Appends one syllable, merging/cancelling with the tail.
  void push(int gen, std::int64_t exp);
  std::vector<Syllable> syls_;

  friend Word reduce(const std::vector<Letter>& raw);
};

// Free reduction of a raw letter sequence.
Word reduce(const std::vector<Letter>& raw);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // word = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

// reduce(u v u^-1 v^-1)
Word commutator(const Word& u, const Word& v);

// Word grammar:
//   WORD := term (("*")? term)* | epsilon
//   term := atom ("^" int)?
//   atom := name | "1" | "(" WORD ")" | "[" WORD "," WORD "]"
// Whitespace insignificant; "1" and the empty string denote the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Prints in the same grammar; identity prints as "1".
// parse_word(print_word(w)) == w for every reduced w.
std::string print_word(const Word& w, const Alphabet& alphabet);

}  // namespace fpforge
