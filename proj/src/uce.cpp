#include "fpforge/uce.hpp"

#include "fpforge/error.hpp"

namespace fpforge {

UceResult universal_central_extension(const Presentation& p) {
  if (!is_perfect(p))
    throw PreconditionError("universal_central_extension: input is not perfect (H1 != 0)");

  const int gens = p.gens();
  const std::vector<Word>& input = p.relators();
  IntMatrix e = exponent_matrix(p);

  UceResult out;
  out.central_words = input;

  std::vector<Word> relators;
  relators.reserve(static_cast<std::size_t>(gens) * (1 + input.size()));

  for (int x = 0; x < gens; ++x) {
    Word gx = Word::generator(x);
    for (std::size_t b = 0; b < input.size(); ++b) {
      relators.push_back(commutator(gx, input[b]));
      out.tags.push_back({UceRelatorTag::Kind::Commutator, x, static_cast<int>(b), {}});
    }
  }

  for (int x = 0; x < gens; ++x) {
    std::vector<Int> basis(static_cast<std::size_t>(gens));
    basis[static_cast<std::size_t>(x)] = 1;
    auto n = solve_left(e, basis);
    if (!n)
      // Impossible for a perfect input (the row lattice is all of Z^gens);
      // reaching this is a defect, not an input error.
      throw std::logic_error("universal_central_extension: solver failed on a perfect input");
    Word rho;
    for (std::size_t b = 0; b < input.size(); ++b) {
      std::int64_t k = static_cast<std::int64_t>((*n)[b]);
      if (k != 0) rho = rho * input[b].pow(k);
    }
    relators.push_back(rho);
    out.solver_exponents.push_back(*n);
    out.tags.push_back({UceRelatorTag::Kind::RelatorPower, x, -1, *n});
  }

  PresentationOptions options;
  options.allow_identity_relators = true;
  out.presentation = Presentation(p.alphabet(), relators, p.label() + ".uce", options);
  return out;
}

}  // namespace fpforge
