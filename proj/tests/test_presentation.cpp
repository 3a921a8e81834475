#include <doctest.h>

#include <random>

#include "fpforge/invariants.hpp"
#include "fpforge/presentation.hpp"
#include "support.hpp"

using namespace fpforge;
using testsupport::random_word;

namespace {

Presentation a5() {
  Alphabet alpha({"a", "b"});
  return Presentation(alpha,
                      {parse_word("a^2", alpha), parse_word("b^3", alpha), parse_word("(a*b)^5", alpha)},
                      "A5");
}

}  // namespace

TEST_CASE("validate: A5 is clean") {
  Alphabet alpha({"a", "b"});
  ValidationReport r = validate({"a", "b"},
                                {parse_word("a^2", alpha), parse_word("b^3", alpha),
                                 parse_word("(a*b)^5", alpha)},
                                "A5");
  CHECK(r.ok());
  CHECK(r.issues.empty());
  CHECK(r.normalized->gens() == 2);
  CHECK(r.normalized->relator_count() == 3);
}

TEST_CASE("validate: duplicate names and identity relators are reported") {
  Alphabet one({"a"});
  ValidationReport dup = validate({"a", "a"}, {parse_word("a", one)}, "bad");
  CHECK_FALSE(dup.ok());
  REQUIRE_FALSE(dup.issues.empty());
  CHECK(dup.issues[0].kind == ValidationIssue::Kind::DuplicateName);

  ValidationReport ident = validate({"a"}, {parse_word("a*a^-1", one)}, "bad2");
  CHECK_FALSE(ident.ok());
  bool flagged = false;
  for (const auto& issue : ident.issues)
    flagged |= issue.kind == ValidationIssue::Kind::IdentityRelator;
  CHECK(flagged);

  PresentationOptions allow;
  allow.allow_identity_relators = true;
  ValidationReport permitted = validate({"a"}, {parse_word("a*a^-1", one)}, "ok", allow);
  CHECK(permitted.ok());
  CHECK(permitted.normalized->relator_count() == 1);
}

TEST_CASE("relators are stored cyclically reduced, order and multiplicity kept") {
  Alphabet alpha({"a", "b"});
  Word conj = parse_word("a*b*a^-1", alpha);
  Presentation p(alpha, {conj, parse_word("b", alpha)}, "t");
  CHECK(p.relators()[0] == parse_word("b", alpha));
  CHECK(p.relators()[1] == parse_word("b", alpha));
  CHECK(p.relator_count() == 2);
}

TEST_CASE("exponent_matrix examples") {
  Presentation p = a5();
  IntMatrix m = exponent_matrix(p);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 3);
  CHECK(m.at(2, 0) == 5);
  CHECK(m.at(2, 1) == 5);

  Alphabet alpha({"a", "b"});
  Presentation comm(alpha, {parse_word("[a,b]", alpha)}, "c");
  IntMatrix cm = exponent_matrix(comm);
  CHECK(cm.at(0, 0) == 0);
  CHECK(cm.at(0, 1) == 0);

  Presentation empty(alpha, {}, "e");
  IntMatrix em = exponent_matrix(empty);
  CHECK(em.rows() == 0);
  CHECK(em.cols() == 2);
}

TEST_CASE("exponent_matrix invariant under conjugation of relators") {
  std::mt19937 rng(13001);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p = testsupport::random_presentation(rng, 3, 4, 12, "r");
    IntMatrix base = exponent_matrix(p);
    std::vector<Word> conjugated;
    for (const Word& r : p.relators()) {
      Word c = random_word(rng, 3, 6);
      conjugated.push_back(c * r * c.inverse());
    }
    Presentation q(p.alphabet(), conjugated, "rc");
    CHECK(exponent_matrix(q) == base);
  }
}

TEST_CASE("rename_disjoint") {
  Alphabet alpha({"a"});
  Presentation p(alpha, {parse_word("a^2", alpha)}, "p");
  Presentation renamed = rename_disjoint(p, "_L");
  CHECK(renamed.alphabet().names() == std::vector<std::string>{"a_L"});
  CHECK(renamed.relators()[0] == Word::power(0, 2));
  CHECK_THROWS_AS(rename_disjoint(p, ""), ValidationError);

  Alphabet two({"a", "a_L"});
  Presentation q(two, {parse_word("a*a_L", two)}, "q");
  CHECK_THROWS_AS(rename_disjoint(q, "_L"), ValidationError);
}

TEST_CASE("rename_disjoint preserves counts, lengths and matrix") {
  std::mt19937 rng(13002);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p = testsupport::random_presentation(rng, 3, 5, 10, "r");
    Presentation renamed = rename_disjoint(p, "_x");
    CHECK(renamed.relator_count() == p.relator_count());
    for (std::size_t i = 0; i < p.relator_count(); ++i)
      CHECK(renamed.relators()[i].length() == p.relators()[i].length());
    CHECK(exponent_matrix(renamed) == exponent_matrix(p));
  }
}

TEST_CASE("text format round-trip") {
  Presentation p = a5();
  std::string text = format_presentation(p);
  Presentation back = parse_presentation(text, "ignored");
  CHECK(back.label() == "A5");
  CHECK(back.alphabet() == p.alphabet());
  CHECK(back.relators() == p.relators());
  CHECK(format_presentation(back) == text);
}

TEST_CASE("text format: comments, blank lines, errors") {
  Presentation p = parse_presentation("# comment\ngens: x y\n\nx*y # inline\n[x,y]\n", "lbl");
  CHECK(p.label() == "lbl");
  CHECK(p.gens() == 2);
  CHECK(p.relator_count() == 2);

  CHECK_THROWS_AS(parse_presentation("x*y\n", "l"), ValidationError);
  CHECK_THROWS_AS(parse_presentation("gens: x x\nx\n", "l"), ValidationError);
  CHECK_THROWS_AS(parse_presentation("gens: x\ny\n", "l"), ValidationError);
}

TEST_CASE("random presentations round-trip through the text format") {
  std::mt19937 rng(13003);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p = testsupport::random_presentation(rng, 4, 3, 15, "rt" + std::to_string(trial));
    Presentation back = parse_presentation(format_presentation(p), "x");
    CHECK(back.alphabet() == p.alphabet());
    CHECK(back.relators() == p.relators());
    CHECK(back.label() == p.label());
  }
}
