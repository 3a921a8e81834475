#include "fpforge/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fpforge/error.hpp"

namespace fpforge {

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators, std::string label,
                           PresentationOptions options)
    : alphabet_(std::move(alphabet)), label_(std::move(label)), options_(options) {
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    if (r.max_gen() >= alphabet_.size())
      throw ValidationError("relator uses generator index outside the alphabet");
    Word core = cyclic_reduce(r).core;
    if (core.is_identity() && !options_.allow_identity_relators)
      throw ValidationError("identity relator rejected (enable allow_identity_relators to keep)");
    relators_.push_back(std::move(core));
  }
}

Presentation Presentation::with_label(std::string label) const {
  Presentation p = *this;
  p.label_ = std::move(label);
  return p;
}

ValidationReport validate(const std::vector<std::string>& names, const std::vector<Word>& relators,
                          const std::string& label, PresentationOptions options) {
  ValidationReport report;
  bool blocking = false;

  std::set<std::string> seen;
  for (const std::string& n : names) {
    if (!Alphabet::valid_name(n)) {
      report.issues.push_back({ValidationIssue::Kind::InvalidName, "invalid generator name '" + n + "'"});
      blocking = true;
    }
    if (!seen.insert(n).second) {
      report.issues.push_back({ValidationIssue::Kind::DuplicateName, "duplicate generator name '" + n + "'"});
      blocking = true;
    }
  }

  for (std::size_t i = 0; i < relators.size(); ++i) {
    const Word& r = relators[i];
    if (r.max_gen() >= static_cast<int>(names.size())) {
      report.issues.push_back(
          {ValidationIssue::Kind::BadIndex, "relator " + std::to_string(i) + " uses an unknown generator index"});
      blocking = true;
      continue;
    }
    CyclicReduction cr = cyclic_reduce(r);
    if (!cr.conjugator.is_identity())
      report.issues.push_back({ValidationIssue::Kind::UnreducedRelator,
                               "relator " + std::to_string(i) + " is not cyclically reduced; normalizing"});
    if (cr.core.is_identity()) {
      report.issues.push_back(
          {ValidationIssue::Kind::IdentityRelator, "relator " + std::to_string(i) + " is the identity"});
      if (!options.allow_identity_relators) blocking = true;
    }
  }

  if (!blocking)
    report.normalized = Presentation(Alphabet(names), relators, label, options);
  return report;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), static_cast<std::size_t>(p.gens()));
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (const Syllable& s : p.relators()[i].syllables())
      m.at(i, static_cast<std::size_t>(s.gen)) += s.exp;
  return m;
}

Presentation rename_disjoint(const Presentation& p, const std::string& suffix) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p.gens()));
  for (const std::string& n : p.alphabet().names()) {
    std::string renamed = n + suffix;
    if (p.alphabet().contains(renamed))
      throw ValidationError("rename_disjoint: '" + renamed + "' collides with an existing name");
    names.push_back(std::move(renamed));
  }
  PresentationOptions options;
  options.allow_identity_relators = p.allows_identity_relators();
  return Presentation(Alphabet(std::move(names)), p.relators(), p.label() + suffix, options);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  if (!p.label().empty()) out << "# label: " << p.label() << "\n";
  out << "gens:";
  for (const std::string& n : p.alphabet().names()) out << ' ' << n;
  out << "\n";
  for (const Word& r : p.relators()) out << print_word(r, p.alphabet()) << "\n";
  return out.str();
}

Presentation parse_presentation(std::string_view text, const std::string& fallback_label,
                                PresentationOptions options) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string label = fallback_label;
  std::optional<Alphabet> alphabet;
  std::vector<std::string> names;
  std::vector<Word> relators;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      line.erase(hash);
      // Recover a label written by format_presentation.
      const std::string tag = " label: ";
      if (comment.rfind(tag, 0) == 0) label = comment.substr(tag.size());
    }
    std::string trimmed = line;
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), notspace));
    trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), notspace).base(), trimmed.end());
    if (trimmed.empty()) continue;

    if (!alphabet) {
      if (trimmed.rfind("gens:", 0) != 0)
        throw ValidationError("line " + std::to_string(lineno) + ": expected 'gens: ...' header");
      std::istringstream gs(trimmed.substr(5));
      std::string n;
      while (gs >> n) names.push_back(n);
      alphabet = Alphabet(names);
      continue;
    }
    relators.push_back(parse_word(trimmed, *alphabet));
  }
  if (!alphabet) throw ValidationError("missing 'gens:' header");

  ValidationReport report = validate(names, relators, label, options);
  if (!report.ok()) {
    std::string msg = "invalid presentation";
    for (const ValidationIssue& issue : report.issues) msg += "; " + issue.message;
    throw ValidationError(msg);
  }
  return *report.normalized;
}

Presentation read_presentation_file(const std::string& path, PresentationOptions options) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label.erase(0, slash + 1);
  if (auto dot = label.find('.'); dot != std::string::npos) label.erase(dot);
  return parse_presentation(buf.str(), label, options);
}

}  // namespace fpforge
