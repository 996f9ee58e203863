#ifndef MORGAN_CORPUS_HPP
#define MORGAN_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "morgan/sequent.hpp"

namespace morgan {

struct CorpusOptions {
  Calculus calculus = Calculus::sdm;  // SDM or DM
  std::size_t max_depth = 3;          // term depth, at most 5
  std::vector<std::string> variables{"p", "q", "r"};
  std::size_t max_antecedent = 4;
  unsigned star_percent = 25;        // chance a SDM structure is starred
  bool star_succedent = true;        // allow ∗φ on the right (SDM)
  std::optional<std::uint64_t> max_weight;  // sequent weight cap (w for SDM, μ for DM)
};

/// Seeded random terms and sequents. Draws use std::mt19937_64 outputs
/// reduced modulo the range, so a seed fixes the stream on every platform.
class CorpusGenerator {
 public:
  CorpusGenerator(std::uint64_t seed, CorpusOptions options);

  Term term();
  Term term(std::size_t depth);
  Structure structure();
  Sequent sequent();
  std::vector<Sequent> sequents(std::size_t count);

  std::uint64_t uniform(std::uint64_t n) { return rng_() % n; }
  const CorpusOptions& options() const { return options_; }

 private:
  Sequent draw();

  std::mt19937_64 rng_;
  CorpusOptions options_;
};

/// `count` sequents from the generator that the calculus derives, drawing at
/// most `max_draws` candidates.
std::vector<Sequent> derivable_corpus(std::uint64_t seed, const CorpusOptions& options,
                                      std::size_t count, std::size_t max_draws = 1'000'000);

}  // namespace morgan

#endif  // MORGAN_CORPUS_HPP
