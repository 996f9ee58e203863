#ifndef MORGAN_PROVER_HPP
#define MORGAN_PROVER_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>

#include "morgan/derivation.hpp"

namespace morgan {

/// Memo cap taken from MORGANKIT_MEMO_LIMIT; 1'000'000 entries when unset.
std::size_t default_memo_limit();

struct SearchStats {
  std::size_t expansions = 0;   // goals whose rule instances were enumerated
  std::size_t memo_hits = 0;
  std::size_t memo_clears = 0;  // times a table hit the cap and was dropped
  std::size_t loop_prunes = 0;  // INT/CL only
};

/// Backward proof search for one calculus.
///
/// SDM/DM: the weights make every branch finite. The plain verdict commits to
/// the first applicable invertible left rule (all of G3DM's; in G3SDM only
/// those with a plain principal) and otherwise tries every instance. The
/// bounded queries explore every instance.
///
/// INT/CL: antecedents are handled as sets (contraction is admissible) and a
/// branch is cut when its (set, succedent) pair repeats an ancestor.
///
/// Not thread-safe; use one Prover per thread or the shared entry points below.
class Prover {
 public:
  explicit Prover(Calculus calculus, std::size_t memo_limit = default_memo_limit());
  ~Prover();
  Prover(Prover&&) noexcept;
  Prover& operator=(Prover&&) noexcept;

  Calculus calculus() const;

  bool derivable(const Sequent& goal);
  std::optional<Derivation> derive(const Sequent& goal);

  /// True iff some derivation of height at most n exists.
  bool derivable_within_height(const Sequent& goal, std::size_t n);
  std::optional<std::size_t> min_height(const Sequent& goal);
  /// A derivation of minimal height, found by iterative deepening.
  std::optional<Derivation> derive_min_height(const Sequent& goal);

  /// Called with (conclusion, premiss) for every premiss the search visits.
  using Observer = std::function<void(const Sequent&, const Sequent&)>;
  void set_observer(Observer obs);

  const SearchStats& stats() const;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Process-wide provers, one per calculus, guarded by a mutex each. The goal's
// tag must equal `calculus`.
bool derivable(Calculus calculus, const Sequent& goal);
std::optional<Derivation> derive(Calculus calculus, const Sequent& goal);
bool derivable_within_height(Calculus calculus, const Sequent& goal, std::size_t n);
std::optional<std::size_t> min_height(Calculus calculus, const Sequent& goal);

}  // namespace morgan

#endif  // MORGAN_PROVER_HPP
