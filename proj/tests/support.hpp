#pragma once

// Shared test helpers: deterministic random generators and independent
// oracles used to freeze expected values.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fpforge/invariants.hpp"
#include "fpforge/presentation.hpp"
#include "fpforge/word.hpp"

namespace testsupport {

using fpforge::Alphabet;
using fpforge::Int;
using fpforge::IntMatrix;
using fpforge::Letter;
using fpforge::Presentation;
using fpforge::Word;

inline Alphabet make_alphabet(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return Alphabet(names);
}

// Independent single-pass stack reduction over plain letters.
inline std::vector<Letter> stack_reduce_oracle(const std::vector<Letter>& raw) {
  std::vector<Letter> st;
  for (const Letter& l : raw) {
    if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

// Independent cyclic reduction: repeatedly strip one matching end pair.
inline std::vector<Letter> end_cancel_oracle(std::vector<Letter> w) {
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline std::vector<Letter> random_letters(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(0, gens - 1);
  std::uniform_int_distribution<int> s(0, 1);
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

// Random freely reduced, non-identity word.
inline Word random_word(std::mt19937& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  while (true) {
    Word w = fpforge::reduce(random_letters(rng, gens, len_dist(rng)));
    if (!w.is_identity()) return w;
  }
}

inline Presentation random_presentation(std::mt19937& rng, int gens, int relators, int max_len,
                                        const std::string& label) {
  std::vector<Word> rels;
  while (static_cast<int>(rels.size()) < relators) {
    Word w = random_word(rng, gens, max_len);
    if (!fpforge::cyclic_reduce(w).core.is_identity()) rels.push_back(w);
  }
  return Presentation(make_alphabet(gens), rels, label);
}

// Adds random relators until the abelianization is trivial.
inline Presentation random_perfect_presentation(std::mt19937& rng, int gens, int max_len,
                                                const std::string& label) {
  std::vector<Word> rels;
  while (true) {
    while (true) {
      Word w = random_word(rng, gens, max_len);
      if (!fpforge::cyclic_reduce(w).core.is_identity()) {
        rels.push_back(w);
        break;
      }
    }
    Presentation p(make_alphabet(gens), rels, label);
    if (fpforge::is_perfect(p)) return p;
    if (rels.size() > 40) rels.clear();  // restart a hopeless draw
  }
}

// Minor-gcd oracle: d_k = gcd(all k x k minors) / gcd(all (k-1) x (k-1) minors).
inline std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t kmax = std::min(rows, cols);
  std::vector<Int> gcds;  // gcds[k-1] = gcd of all k x k minors
  for (std::size_t k = 1; k <= kmax; ++k) {
    // Enumerate row and column index subsets of size k.
    std::vector<std::size_t> ri(k), ci(k);
    std::iota(ri.begin(), ri.end(), 0);
    Int g = 0;
    while (true) {
      std::iota(ci.begin(), ci.end(), 0);
      while (true) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
        Int det = sub.determinant();
        g = boost::multiprecision::gcd(g, det < 0 ? Int(-det) : det);
        // next column subset
        std::size_t t = k;
        while (t > 0 && ci[t - 1] == cols - k + t - 1) --t;
        if (t == 0) break;
        ++ci[t - 1];
        for (std::size_t u = t; u < k; ++u) ci[u] = ci[u - 1] + 1;
      }
      std::size_t t = k;
      while (t > 0 && ri[t - 1] == rows - k + t - 1) --t;
      if (t == 0) break;
      ++ri[t - 1];
      for (std::size_t u = t; u < k; ++u) ri[u] = ri[u - 1] + 1;
    }
    gcds.push_back(g);
    if (g == 0) break;  // all larger minors vanish too
  }
  std::vector<Int> factors;
  Int prev = 1;
  for (const Int& g : gcds) {
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo,
                               int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace testsupport
