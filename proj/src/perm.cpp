#include "fpforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fpforge/error.hpp"

namespace fpforge {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw ValidationError("invalid permutation image list");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw ValidationError("permutation degree mismatch");
  std::vector<int> img(a.img_.size());
  for (int i = 0; i < a.degree(); ++i) img[static_cast<std::size_t>(i)] = b(a(i));
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ValidationError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ValidationError("expected point in cycle notation");
      int point = std::stoi(text.substr(start, pos - start));
      if (point < 1 || point > degree)
        throw ValidationError("cycle point " + std::to_string(point) + " outside degree " +
                              std::to_string(degree));
      cycle.push_back(point - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (img[static_cast<std::size_t>(from)] != from)
        throw ValidationError("point repeated across cycles");
      img[static_cast<std::size_t>(from)] = to;
    }
    skip_ws();
  }
  return Perm(img);
}

std::string print_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j + 1);
      seen[static_cast<std::size_t>(j)] = true;
      j = p(j);
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

// Deterministic Schreier-Sims stabilizer chain.
class StabChain {
 public:
  explicit StabChain(int degree) : degree_(degree) {}

  void extend(const Perm& g) {
    if (g.is_identity()) return;
    extend_at(0, g);
  }

  Int order() const {
    Int o = 1;
    for (const Level& lvl : levels_) o *= static_cast<unsigned>(lvl.orbit.size());
    return o;
  }

  bool contains(const Perm& g) const {
    Perm r = g;
    for (const Level& lvl : levels_) {
      int image = r(lvl.base);
      auto it = lvl.transversal.find(image);
      if (it == lvl.transversal.end()) return false;
      r = r * it->second.inverse();
    }
    return r.is_identity();
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;                 // in discovery order
    std::unordered_map<int, Perm> transversal;  // point -> u with base^u = point
  };

  int degree_;
  std::vector<Level> levels_;

  static int first_moved(const Perm& g) {
    for (int i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  void recompute_orbit(std::size_t li) {
    Level& lvl = levels_[li];
    lvl.orbit.clear();
    lvl.transversal.clear();
    lvl.orbit.push_back(lvl.base);
    lvl.transversal.emplace(lvl.base, Perm(degree_));
    for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
      int pt = lvl.orbit[head];
      const Perm& u = lvl.transversal.at(pt);
      for (const Perm& g : lvl.gens) {
        int img = g(pt);
        if (!lvl.transversal.count(img)) {
          lvl.orbit.push_back(img);
          lvl.transversal.emplace(img, u * g);
        }
      }
    }
  }

  // Sifts g through levels >= li; returns the residue.
  Perm sift_from(std::size_t li, const Perm& g) const {
    Perm r = g;
    for (std::size_t i = li; i < levels_.size(); ++i) {
      int image = r(levels_[i].base);
      auto it = levels_[i].transversal.find(image);
      if (it == levels_[i].transversal.end()) return r;
      r = r * it->second.inverse();
    }
    return r;
  }

  void extend_at(std::size_t li, const Perm& g) {
    if (g.is_identity()) return;
    if (li == levels_.size()) {
      Level lvl;
      lvl.base = first_moved(g);
      levels_.push_back(std::move(lvl));
    }
    Level& lvl = levels_[li];
    if (g(lvl.base) == lvl.base) {
      extend_at(li + 1, g);
      verify_level(li);
      return;
    }
    lvl.gens.push_back(g);
    recompute_orbit(li);
    verify_level(li);
  }

  // Ensures every Schreier generator of level li sifts to the identity below.
  void verify_level(std::size_t li) {
    bool changed = true;
    while (changed) {
      changed = false;
      Level& lvl = levels_[li];
      recompute_orbit(li);
      for (std::size_t oi = 0; oi < lvl.orbit.size() && !changed; ++oi) {
        int pt = lvl.orbit[oi];
        const Perm u = lvl.transversal.at(pt);
        for (const Perm& g : lvl.gens) {
          const Perm& ug = lvl.transversal.at(g(pt));
          Perm schreier = u * g * ug.inverse();
          if (schreier.is_identity()) continue;
          Perm residue = sift_from(li + 1, schreier);
          if (!residue.is_identity()) {
            extend_at(li + 1, residue);
            changed = true;
            break;
          }
        }
      }
    }
  }
};

}  // namespace

Int perm_group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  int degree = gens[0].degree();
  StabChain chain(degree);
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw ValidationError("permutation degree mismatch");
    chain.extend(g);
  }
  return chain.order();
}

bool perm_group_contains(const std::vector<Perm>& gens, const Perm& candidate) {
  if (gens.empty()) return candidate.is_identity();
  StabChain chain(gens[0].degree());
  for (const Perm& g : gens) chain.extend(g);
  return chain.contains(candidate);
}

Perm PermHom::evaluate(const Word& w) const {
  Perm acc(degree);
  for (const Syllable& s : w.syllables()) {
    if (s.gen >= static_cast<int>(images.size()))
      throw ValidationError("word uses a generator with no assigned image");
    const Perm& base = images[static_cast<std::size_t>(s.gen)];
    Perm g = s.exp < 0 ? base.inverse() : base;
    std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t i = 0; i < k; ++i) acc = acc * g;
  }
  return acc;
}

bool PermHom::satisfies(const Presentation& p) const {
  for (const Word& r : p.relators())
    if (!evaluate(r).is_identity()) return false;
  return true;
}

bool PermHom::is_trivial() const {
  for (const Perm& g : images)
    if (!g.is_identity()) return false;
  return true;
}

PermHom parse_hom_file(const std::string& text, const Alphabet& alphabet, int degree_hint) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> raw(static_cast<std::size_t>(alphabet.size()));
  std::vector<bool> have(static_cast<std::size_t>(alphabet.size()), false);
  int max_point = degree_hint;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      bool blank = true;
      for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
      if (blank) continue;
      throw ValidationError("hom file: expected 'name: cycles' line");
    }
    std::string name = line.substr(0, colon);
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    int idx = alphabet.index(name);
    if (idx < 0) throw ValidationError("hom file: unknown generator '" + name + "'");
    raw[static_cast<std::size_t>(idx)] = line.substr(colon + 1);
    have[static_cast<std::size_t>(idx)] = true;
    // Degree inference: the largest point mentioned anywhere.
    std::size_t pos = colon + 1;
    while (pos < line.size()) {
      if (std::isdigit(static_cast<unsigned char>(line[pos]))) {
        std::size_t start = pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        max_point = std::max(max_point, std::stoi(line.substr(start, pos - start)));
      } else {
        ++pos;
      }
    }
  }
  for (int i = 0; i < alphabet.size(); ++i)
    if (!have[static_cast<std::size_t>(i)])
      throw ValidationError("hom file: missing image for generator '" + alphabet.name(i) + "'");
  if (max_point <= 0) max_point = 1;
  PermHom hom;
  hom.degree = max_point;
  for (int i = 0; i < alphabet.size(); ++i)
    hom.images.push_back(parse_cycles(raw[static_cast<std::size_t>(i)], max_point));
  return hom;
}

std::string format_hom(const PermHom& hom, const Alphabet& alphabet) {
  std::string out;
  for (int i = 0; i < alphabet.size(); ++i) {
    out += alphabet.name(i);
    out += ": ";
    out += print_cycles(hom.images[static_cast<std::size_t>(i)]);
    out += "\n";
  }
  return out;
}

}  // namespace fpforge
