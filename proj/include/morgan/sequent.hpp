#ifndef MORGAN_SEQUENT_HPP
#define MORGAN_SEQUENT_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "morgan/term.hpp"

namespace morgan {

/// The four calculi: G3SDM, G3DM, G3ip and G3ip+Gem-at.
enum class Calculus : std::uint8_t { sdm, dm, intuitionistic, classical };

std::string_view calculus_name(Calculus c);  // "SDM", "DM", "INT", "CL"
Calculus calculus_from_name(std::string_view s);  // accepts SDM/g3sdm, DM/g3dm, INT/g3ip, CL/g3cp

/// A basic structure: a term, or a starred term (G3SDM only). Stars do not nest.
struct Structure {
  Term term;
  bool starred = false;

  static Structure plain(Term t) { return {t, false}; }
  static Structure star(Term t) { return {t, true}; }

  bool operator==(const Structure& o) const { return term == o.term && starred == o.starred; }
  bool operator!=(const Structure& o) const { return !(*this == o); }
};

/// Plain < Starred, then the structural term order.
int compare(const Structure& a, const Structure& b);

struct StructureLess {
  bool operator()(const Structure& a, const Structure& b) const { return compare(a, b) < 0; }
};

/// Γ ⇒ α. The antecedent is a multiset: equality ignores member order.
class Sequent {
 public:
  Sequent(Calculus calculus, std::vector<Structure> antecedent, Structure succedent);
  Sequent(Calculus calculus, std::vector<Term> antecedent, Term succedent);

  /// Skips the language checks; for rule code whose outputs are well formed by construction.
  struct unchecked_t {};
  Sequent(unchecked_t, Calculus calculus, std::vector<Structure> antecedent, Structure succedent)
      : calculus_(calculus), antecedent_(std::move(antecedent)), succedent_(succedent) {}

  Calculus calculus() const { return calculus_; }
  const std::vector<Structure>& antecedent() const { return antecedent_; }
  const Structure& succedent() const { return succedent_; }

  /// Copy with the antecedent sorted by the canonical structure order.
  Sequent canonical() const;
  bool is_canonical() const;

  bool operator==(const Sequent& o) const;
  bool operator!=(const Sequent& o) const { return !(*this == o); }

 private:
  Calculus calculus_;
  std::vector<Structure> antecedent_;
  Structure succedent_;
};

/// Hash and equality over the stored member order. Intended for canonical
/// sequents used as memo keys, where this coincides with multiset equality.
struct SequentKeyHash {
  std::size_t operator()(const Sequent& s) const noexcept;
};
struct SequentKeyEq {
  bool operator()(const Sequent& a, const Sequent& b) const noexcept;
};

inline Sequent canonical_form(const Sequent& s) { return s.canonical(); }

/// Multiset equality of two antecedents.
bool same_multiset(std::span<const Structure> a, std::span<const Structure> b);

VarSet vars(const Structure& s);
VarSet vars(std::span<const Structure> ss);
VarSet vars(const Sequent& s);

/// Connective-and-star count of a basic structure (diagnostic only).
std::size_t complexity(const Structure& s);

// SDM-weight w: w(p)=w(⊥)=1, w(¬φ)=w(φ)+2, w(φ∨ψ)=w(φ)+w(ψ)+2,
// w(φ∧ψ)=w(φ)+w(ψ)+3, w(∗φ)=w(φ)+1, additive over multisets.
std::uint64_t sdm_weight(const Term& t);
std::uint64_t sdm_weight(const Structure& s);
std::uint64_t sdm_weight(std::span<const Structure> ss);
std::uint64_t sdm_weight(const Sequent& s);

// The same measure with w(φ∧ψ)=w(φ)+w(ψ)+4. Under w the rule (∗¬∧⇒) keeps
// the weight unchanged (both sides carry w(φ)+w(ψ)+6); this variant strictly
// decreases on every G3SDM rule and is what bounds the search.
std::uint64_t sdm_search_weight(const Term& t);
std::uint64_t sdm_search_weight(const Structure& s);
std::uint64_t sdm_search_weight(const Sequent& s);

// DM-weight μ: μ(p)=μ(⊥)=1, μ(¬φ)=μ(φ)+1, μ(φ∨ψ)=μ(φ∧ψ)=μ(φ)+μ(ψ)+2.
std::uint64_t dm_weight(const Term& t);
std::uint64_t dm_weight(std::span<const Structure> ss);
std::uint64_t dm_weight(const Sequent& s);

}  // namespace morgan

#endif  // MORGAN_SEQUENT_HPP
