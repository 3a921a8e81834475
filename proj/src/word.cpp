#include "fpforge/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace fpforge {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!valid_name(n))
      throw ValidationError("invalid generator name '" + n + "'");
    auto [it, fresh] = index_.emplace(n, static_cast<int>(i));
    (void)it;
    if (!fresh) throw ValidationError("duplicate generator name '" + n + "'");
  }
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

int Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

Word Word::power(int gen, std::int64_t exp) {
  Word w;
  if (exp != 0) w.syls_.push_back({gen, exp});
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
  Word w;
  for (const Syllable& s : syllables) w.push(s.gen, s.exp);
  return w;
}

void Word::push(int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!syls_.empty() && syls_.back().gen == gen) {
    syls_.back().exp += exp;
    if (syls_.back().exp == 0) syls_.pop_back();
    return;
  }
  syls_.push_back({gen, exp});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syls_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

int Word::max_gen() const {
  int m = -1;
  for (const Syllable& s : syls_) m = std::max(m, s.gen);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    w.syls_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || is_identity()) return Word();
  Word base = n < 0 ? inverse() : *this;
  std::int64_t k = n < 0 ? -n : n;
  if (syls_.size() == 1) return power(base.syls_[0].gen, base.syls_[0].exp * k);
  Word out;
  for (std::int64_t i = 0; i < k; ++i) out = out * base;
  return out;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const Syllable& s : syls_) {
    int sign = s.exp < 0 ? -1 : 1;
    std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t i = 0; i < k; ++i) out.push_back({s.gen, sign});
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const Syllable& s : b.syls_) w.push(s.gen, s.exp);
  return w;
}

Word reduce(const std::vector<Letter>& raw) {
  Word w;
  for (const Letter& l : raw) {
    if (l.gen < 0) throw ValidationError("letter index out of alphabet range");
    w.push(l.gen, l.sign < 0 ? -1 : 1);
  }
  return w;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Syllable> core(w.syllables());
  Word conjugator;
  while (core.size() >= 2) {
    Syllable& first = core.front();
    Syllable& last = core.back();
    if (first.gen != last.gen) break;
    bool opposite = (first.exp > 0) != (last.exp > 0);
    if (!opposite) break;
    std::int64_t a = first.exp < 0 ? -first.exp : first.exp;
    std::int64_t b = last.exp < 0 ? -last.exp : last.exp;
    std::int64_t t = std::min(a, b);
    std::int64_t peel = first.exp < 0 ? -t : t;
    conjugator = conjugator * Word::power(first.gen, peel);
    first.exp -= peel;
    last.exp += peel;
    if (last.exp == 0) core.pop_back();
    if (first.exp == 0) core.erase(core.begin());
  }
  return {Word::from_syllables(core), conjugator};
}

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Alphabet& alphabet;

  explicit Parser(std::string_view t, const Alphabet& a) : text(t), alphabet(a) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("word parse error at position " + std::to_string(pos) + ": " + what);
  }

  Word parse_whole() {
    Word w = parse_word_expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return w;
  }

  Word parse_word_expr() {
    Word w;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || c == ']' || c == ',') return w;
      if (c == '*') {
        ++pos;
        c = peek();
      }
      w = w * parse_term();
    }
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return atom.pow(parse_int());
    }
    return atom;
  }

  Word parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Word inner = parse_word_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (c == '[') {
      ++pos;
      Word u = parse_word_expr();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos;
      Word v = parse_word_expr();
      if (peek() != ']') fail("expected ']'");
      ++pos;
      return commutator(u, v);
    }
    if (c == '1') {
      ++pos;
      return Word();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string_view name = text.substr(start, pos - start);
      int idx = alphabet.index(name);
      if (idx < 0) fail("unknown generator '" + std::string(name) + "'");
      return Word::generator(idx);
    }
    fail("expected generator, '1', '(' or '['");
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("malformed exponent");
    errno = 0;
    long long v = std::strtoll(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    if (errno != 0) fail("exponent out of range");
    return v;
  }
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse_whole();
}

std::string print_word(const Word& w, const Alphabet& alphabet) {
  if (w.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) out += '*';
    first = false;
    out += alphabet.name(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace fpforge
