#ifndef MORGAN_INTERPOLATION_HPP
#define MORGAN_INTERPOLATION_HPP

#include <vector>

#include "morgan/derivation.hpp"

namespace morgan {

/// (Γ₁)(Γ₂; β): the antecedent split into two multisets, plus the succedent.
struct Partition {
  std::vector<Structure> left;
  std::vector<Structure> right;
  Structure succedent;
};

/// The sequent Γ₁, Γ₂ ⇒ β, canonical.
Sequent partition_goal(Calculus calculus, const Partition& part);

/// True iff left ⊎ right equals the goal's antecedent and the succedents agree.
bool partition_matches(const Sequent& goal, const Partition& part);

/// Every split of the goal's antecedent by occurrence (2^n partitions, in
/// bitmask order: bit i set puts member i on the left).
std::vector<Partition> all_partitions(const Sequent& goal);

struct InterpolationResult {
  Structure interpolant;        // plain for G3DM
  Derivation left_derivation;   // Γ₁ ⇒ α
  Derivation right_derivation;  // α, Γ₂ ⇒ β
};

/// Interpolant extraction by recursion over a G3SDM or G3DM derivation.
/// Throws std::invalid_argument when the derivation fails checking or does
/// not prove the partitioned sequent.
InterpolationResult interpolate(Calculus calculus, const Derivation& d, const Partition& part);

/// Only the interpolant, skipping the obligation proofs.
Structure extract_interpolant(Calculus calculus, const Derivation& d, const Partition& part);

/// Checks Γ₁ ⇒ α, α, Γ₂ ⇒ β and var(α) ⊆ var(Γ₁) ∩ var(Γ₂, β).
bool verify_interpolant(Calculus calculus, const Sequent& goal, const Partition& part,
                        const Structure& candidate);

}  // namespace morgan

#endif  // MORGAN_INTERPOLATION_HPP
