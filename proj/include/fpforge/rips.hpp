#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpforge/presentation.hpp"

namespace fpforge {

// Small-cancellation metric report. A piece is a maximal common subword
// occurring in two distinct positions among the cyclic rotations of all
// relators and their inverses; the ratio of a piece is its length over the
// length of the shorter relator containing it. Exact rational arithmetic.
struct MetricReport {
  std::int64_t max_piece_len = 0;
  std::int64_t shorter_relator_len = 1;  // denominator of the worst ratio
  int denominator = 6;                   // the checked bound 1/denominator
  bool passes_sixth = true;              // max ratio < 1/denominator
  std::pair<int, int> worst_pair{-1, -1};
  Word worst_piece;

  // Reduced fraction max_piece_len / shorter_relator_len.
  std::pair<std::int64_t, std::int64_t> ratio() const;
};

MetricReport check_metric_condition(const Presentation& p, int denominator = 6);

// Positive small-cancellation words over a 3-letter alphabet {a1,a2,a3}:
// word j is the concatenation of 10 blocks a1 a2^m a3^m for m in a run of
// 10 consecutive integers; runs are pairwise disjoint, all m >= offset >= 2.
std::vector<Word> generate_sc_words(std::size_t count, const Alphabet& alphabet3,
                                    std::int64_t offset);

// Short exact sequence 1 -> N -> G -> Q -> 1 recorded at presentation level.
struct SesData {
  Presentation total;     // G
  Presentation quotient;  // Q
  std::vector<Word> quotient_map;        // per total-generator: image word in Q
  std::vector<Word> kernel_subgroup_gens;  // words in G's alphabet

  // Applies the generator map and freely reduces.
  Word apply_quotient_map(const Word& w) const;
};

struct RipsWordParams {
  std::int64_t offset = 2;  // the offset that passed the metric check
  int attempts = 1;         // 1 + number of doubling retries
  std::size_t words = 0;
};

struct RipsResult {
  Presentation presentation;  // over Y + {a1,a2,a3}
  SesData ses;
  RipsWordParams word_params;
  MetricReport metric;
};

struct RipsOptions {
  std::int64_t offset = 2;
  int max_retries = 5;  // doubling retries after the first attempt
};

// Small-cancellation embedding: adjoins a1,a2,a3, wraps every input relator
// and every conjugation relation y^-1 a_i y, y a_i y^-1 with a fresh positive
// word, and verifies C'(1/6); the offset doubles on failure. Output relator
// count = #input relators + 6 * #input generators. Input generators colliding
// with a1,a2,a3 are renamed with suffix "_q" first.
RipsResult rips_wise(const Presentation& q, RipsOptions options = {});

}  // namespace fpforge
