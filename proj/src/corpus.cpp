#include "morgan/corpus.hpp"

#include <stdexcept>

#include "morgan/prover.hpp"

namespace morgan {

CorpusGenerator::CorpusGenerator(std::uint64_t seed, CorpusOptions options)
    : rng_(seed), options_(std::move(options)) {
  if (options_.calculus != Calculus::sdm && options_.calculus != Calculus::dm)
    throw std::invalid_argument("corpora are generated for SDM or DM");
  if (options_.max_depth > 5) throw std::invalid_argument("term depth is capped at 5");
  if (options_.variables.empty()) throw std::invalid_argument("empty variable pool");
}

Term CorpusGenerator::term() { return term(options_.max_depth); }

Term CorpusGenerator::term(std::size_t depth) {
  // Leaves: a variable, or ⊥ one time in eight.
  auto leaf = [this] {
    if (uniform(8) == 0) return Term::bottom();
    return Term::var(options_.variables[uniform(options_.variables.size())]);
  };
  if (depth == 0) return leaf();
  switch (uniform(10)) {
    case 0:
    case 1:
    case 2: return leaf();
    case 3:
    case 4:
    case 5: return Term::neg(term(depth - 1));
    case 6:
    case 7: {
      Term l = term(depth - 1);
      return Term::conj(l, term(depth - 1));
    }
    default: {
      Term l = term(depth - 1);
      return Term::disj(l, term(depth - 1));
    }
  }
}

Structure CorpusGenerator::structure() {
  Term t = term();
  bool star = options_.calculus == Calculus::sdm && uniform(100) < options_.star_percent;
  return Structure{t, star};
}

Sequent CorpusGenerator::draw() {
  std::size_t n = uniform(options_.max_antecedent + 1);
  std::vector<Structure> ant;
  for (std::size_t i = 0; i < n; ++i) ant.push_back(structure());
  Structure succ = structure();
  if (!options_.star_succedent) succ.starred = false;
  return Sequent(options_.calculus, std::move(ant), succ);
}

Sequent CorpusGenerator::sequent() {
  for (;;) {
    Sequent s = draw();
    if (!options_.max_weight) return s;
    std::uint64_t w = options_.calculus == Calculus::sdm ? sdm_weight(s) : dm_weight(s);
    if (w <= *options_.max_weight) return s;
  }
}

std::vector<Sequent> CorpusGenerator::sequents(std::size_t count) {
  std::vector<Sequent> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sequent());
  return out;
}

std::vector<Sequent> derivable_corpus(std::uint64_t seed, const CorpusOptions& options,
                                      std::size_t count, std::size_t max_draws) {
  CorpusGenerator gen(seed, options);
  std::vector<Sequent> out;
  for (std::size_t i = 0; i < max_draws && out.size() < count; ++i) {
    Sequent s = gen.sequent();
    if (derivable(options.calculus, s)) out.push_back(s);
  }
  if (out.size() < count) throw std::runtime_error("derivable corpus: draw budget exhausted");
  return out;
}

}  // namespace morgan
