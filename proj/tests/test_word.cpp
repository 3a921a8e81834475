#include <doctest.h>

#include <random>

#include "fpforge/word.hpp"
#include "support.hpp"

using namespace fpforge;
using testsupport::end_cancel_oracle;
using testsupport::make_alphabet;
using testsupport::random_letters;
using testsupport::random_word;
using testsupport::stack_reduce_oracle;

namespace {

Alphabet ab() { return Alphabet({"a", "b"}); }

Word letters_to_word(const std::vector<Letter>& ls) {
  Word w;
  for (const Letter& l : ls) w = w * Word::power(l.gen, l.sign);
  return w;
}

}  // namespace

TEST_CASE("reduce: cancellation examples") {
  // a a^-1 b -> b
  Word w = reduce({{0, 1}, {0, -1}, {1, 1}});
  CHECK(w == Word::generator(1));
  // b^-1 a a^-1 b -> 1
  CHECK(reduce({{1, -1}, {0, 1}, {0, -1}, {1, 1}}).is_identity());
  // a b b^-1 a -> a^2  (frozen from the stack-cancellation oracle)
  std::vector<Letter> raw{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(letters_to_word(stack_reduce_oracle(raw)) == Word::power(0, 2));
  CHECK(reduce(raw) == Word::power(0, 2));
}

TEST_CASE("reduce: idempotent and matches oracle on random input") {
  std::mt19937 rng(12001);
  for (int trial = 0; trial < 400; ++trial) {
    auto raw = random_letters(rng, 3, trial % 40 + 1);
    Word w = reduce(raw);
    CHECK(w == letters_to_word(stack_reduce_oracle(raw)));
    CHECK(reduce(w.letters()) == w);  // idempotent
    for (std::size_t i = 0; i + 1 < w.syllables().size(); ++i)
      CHECK(w.syllables()[i].gen != w.syllables()[i + 1].gen);
  }
}

TEST_CASE("inverse law: w * w^-1 reduces to identity") {
  std::mt19937 rng(12002);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 4, 25);
    CHECK((w * w.inverse()).is_identity());
    CHECK((w.inverse() * w).is_identity());
  }
}

TEST_CASE("cyclic_reduce examples") {
  // a b a^-1 -> core b, conjugator a
  Word w = Word::generator(0) * Word::generator(1) * Word::power(0, -1);
  CyclicReduction cr = cyclic_reduce(w);
  CHECK(cr.core == Word::generator(1));
  CHECK(cr.conjugator == Word::generator(0));

  // a^2 already cyclically reduced
  cr = cyclic_reduce(Word::power(0, 2));
  CHECK(cr.core == Word::power(0, 2));
  CHECK(cr.conjugator.is_identity());

  // a b c b^-1 a^-1 -> core c, conjugator a b  (repeated end-cancellation oracle)
  std::vector<Letter> raw{{0, 1}, {1, 1}, {2, 1}, {1, -1}, {0, -1}};
  auto oracle = end_cancel_oracle(raw);
  REQUIRE(oracle.size() == 1);
  CHECK(oracle[0] == Letter{2, 1});
  cr = cyclic_reduce(reduce(raw));
  CHECK(cr.core == Word::generator(2));
  CHECK(cr.conjugator == Word::generator(0) * Word::generator(1));
}

TEST_CASE("cyclic_reduce: conjugation identity and length law on random words") {
  std::mt19937 rng(12003);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 3, 30);
    CyclicReduction cr = cyclic_reduce(w);
    CHECK(cr.conjugator * cr.core * cr.conjugator.inverse() == w);
    CHECK(cr.core.length() <= w.length());
    CHECK(w.length() == cr.core.length() + 2 * cr.conjugator.length());
    // core is cyclically reduced: its own reduction is trivial
    CHECK(cyclic_reduce(cr.core).conjugator.is_identity());
    // oracle agreement on the core length
    CHECK(static_cast<std::int64_t>(end_cancel_oracle(w.letters()).size()) == cr.core.length());
  }
}

TEST_CASE("commutator examples") {
  Word a = Word::generator(0), b = Word::generator(1);
  Word expected = a * b * a.inverse() * b.inverse();
  CHECK(commutator(a, b) == expected);
  CHECK(commutator(a, a).is_identity());
  // (ab, b) concatenate-then-reduce oracle: a b a^-1 b^-1
  CHECK(commutator(a * b, b) == expected);
}

TEST_CASE("word grammar: parse examples") {
  Alphabet alpha = ab();
  CHECK(parse_word("a^2", alpha) == Word::power(0, 2));
  // (a*b)^5 expands to ababab... (10 letters)
  Word ab5 = parse_word("(a*b)^5", alpha);
  CHECK(ab5.length() == 10);
  CHECK(ab5 == (Word::generator(0) * Word::generator(1)).pow(5));
  // [a,b] equals commutator(a, b)
  CHECK(parse_word("[a,b]", alpha) == commutator(Word::generator(0), Word::generator(1)));
  CHECK(parse_word("1", alpha).is_identity());
  CHECK(parse_word("", alpha).is_identity());
  CHECK(parse_word("a b", alpha) == parse_word("a*b", alpha));
  CHECK(parse_word("a^-1", alpha) == Word::power(0, -1));
  CHECK(parse_word("[a,b]^-1", alpha) == commutator(Word::generator(1), Word::generator(0)));
}

TEST_CASE("word grammar: error cases") {
  Alphabet alpha = ab();
  CHECK_THROWS_AS(parse_word("c", alpha), ValidationError);
  CHECK_THROWS_AS(parse_word("a^", alpha), ValidationError);
  CHECK_THROWS_AS(parse_word("(a*b", alpha), ValidationError);
  CHECK_THROWS_AS(parse_word("[a b]", alpha), ValidationError);
  CHECK_THROWS_AS(parse_word("a)", alpha), ValidationError);
  CHECK_THROWS_AS(parse_word("2", alpha), ValidationError);
}

TEST_CASE("parse/print round-trip on a randomized corpus") {
  std::mt19937 rng(12004);
  Alphabet alpha({"a", "b", "c", "x_1"});
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 4, 40);
    std::string text = print_word(w, alpha);
    CHECK(parse_word(text, alpha) == w);
  }
  CHECK(print_word(Word(), alpha) == "1");
  CHECK(parse_word(print_word(Word(), alpha), alpha).is_identity());
}

TEST_CASE("alphabet name validation") {
  CHECK(Alphabet::valid_name("a"));
  CHECK(Alphabet::valid_name("x_1"));
  CHECK(Alphabet::valid_name("_t"));
  CHECK_FALSE(Alphabet::valid_name("1a"));
  CHECK_FALSE(Alphabet::valid_name(""));
  CHECK_FALSE(Alphabet::valid_name("a-b"));
  CHECK_THROWS_AS(Alphabet({"a", "a"}), ValidationError);
}

TEST_CASE("pow uses run-length updates") {
  Word a = Word::generator(0);
  CHECK(a.pow(100).syllables().size() == 1);
  CHECK(a.pow(100).length() == 100);
  CHECK(a.pow(-3) == Word::power(0, -3));
  CHECK(a.pow(0).is_identity());
  std::mt19937 rng(12005);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 3, 8);
    CHECK((w.pow(3) == w * w * w));
    CHECK((w.pow(-2) == w.inverse() * w.inverse()));
  }
}
