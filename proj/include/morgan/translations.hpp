#ifndef MORGAN_TRANSLATIONS_HPP
#define MORGAN_TRANSLATIONS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morgan/json_io.hpp"
#include "morgan/sequent.hpp"

namespace morgan {

// ---- t: structure flattening ------------------------------------------

/// t(φ) = φ, t(∗φ) = ¬φ.
Term flatten(const Structure& s);
/// ∧-fold of the members in canonical order, left-associated; ⊤ (¬⊥) when empty.
Term flatten(std::span<const Structure> gamma);

/// ⋀ and ⋁ over a list in the given order, left-associated; ⋀∅ = ¬⊥, ⋁∅ = ⊥.
Term conjoin(std::span<const Term> ts);
Term disjoin(std::span<const Term> ts);

// ---- f, ¬¬ -------------------------------------------------------------

Term f_godel_gentzen(const Term& phi);
/// f(Σ): the ∧-fold of the memberwise images in canonical order; empty stays empty.
std::vector<Term> f_antecedent(std::span<const Structure> sigma);
/// DM sequent Σ ⇒ φ to the SDM sequent f(Σ) ⇒ f(φ).
Sequent f_sequent(const Sequent& dm);

Term double_negate(const Term& t);
std::vector<Structure> double_negate(std::span<const Structure> sigma);

// ---- k -----------------------------------------------------------------

/// Lazily built table of ≡-class representatives (φ ≡ ψ iff both φ ⇒ ψ and
/// ψ ⇒ φ are G3SDM-derivable). Class variables #k0, #k1, ... are handed out
/// in first-encounter order. Single-writer: callers serialize access.
class ClassRegistry {
 public:
  struct Entry {
    Term representative;
    Term variable;
  };

  /// Variable of the class containing phi, inserting a new class on a miss.
  Term class_of(const Term& phi);
  /// Variable of an existing class, without inserting.
  std::optional<Term> find(const Term& phi);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t equivalence_checks() const { return checks_; }

  json to_json() const;  // {"schema":"morgan-kit/registry/v1","classes":[{"var":"#k0","rep":T},...]}
  static ClassRegistry from_json(const json& j);

 private:
  bool equivalent(const Term& a, const Term& b);

  std::vector<Entry> entries_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> cache_;
  std::size_t checks_ = 0;
};

Term k_to_int(const Term& phi, ClassRegistry& reg);
/// k(∗φ) = k(¬φ).
Term k_to_int(const Structure& s, ClassRegistry& reg);
/// SDM sequent Γ ⇒ φ (plain succedent) to the INT sequent k(Γ) ⇒ k(φ).
Sequent k_sequent(const Sequent& sdm, ClassRegistry& reg);

// ---- h, g --------------------------------------------------------------

Term h_to_cl(const Term& phi);
/// DM sequent to the CL sequent h(Σ) ⇒ h(φ).
Sequent h_sequent(const Sequent& dm);

/// (θ ⊃ ⊥) ⊃ ⊥.
Term g_glivenko(const Term& theta);
std::vector<Term> g_glivenko(std::span<const Structure> x);
/// CL sequent X ⇒ θ to the INT sequent g(X) ⇒ ¬¬θ.
Sequent g_sequent(const Sequent& cl);

// ---- embedding checks --------------------------------------------------

enum class EmbeddingKind { dm_to_sdm_f, dm_glivenko_sdm, sdm_to_int_k, dm_to_cl_h, cl_to_int_g, diagram };

std::string_view embedding_kind_name(EmbeddingKind k);
EmbeddingKind embedding_kind_from_name(std::string_view name);
/// Calculus of the corpus a kind reads.
Calculus embedding_source(EmbeddingKind k);

struct EmbeddingCase {
  Sequent source;
  std::vector<Sequent> targets;  // the sequents the verdict was compared against
  bool source_derivable = false;
  bool target_derivable = false;
};

struct EmbeddingReport {
  EmbeddingKind kind = EmbeddingKind::dm_to_sdm_f;
  std::size_t total = 0;
  std::size_t agreements = 0;
  std::vector<EmbeddingCase> counterexamples;
  // dm-glivenko-sdm also measures the ¬φ-succedent reading, ungated.
  std::optional<std::size_t> variant_agreements;
  std::size_t registry_classes = 0;  // k-based kinds

  double rate() const { return total ? double(agreements) / double(total) : 1.0; }
  bool all_agree() const { return agreements == total; }
  json to_json() const;
};

/// Runs the source-side and target-side searches for every corpus sequent.
/// The corpus must be tagged with embedding_source(kind). One registry is
/// shared across the run; pass one in to keep it afterwards.
EmbeddingReport check_embedding(EmbeddingKind kind, std::span<const Sequent> corpus,
                                ClassRegistry* registry = nullptr);

// ---- text front end ------------------------------------------------------

/// Applies a named map (t, f, nn, k, h, g) to a term, structure or sequent
/// written in the concrete syntax, and prints the image. Input containing
/// "=>" is read as a sequent: SDM for t and k, DM for f, nn and h, CL for g.
std::string translate_text(std::string_view text, std::string_view map, ClassRegistry& reg);

}  // namespace morgan

#endif  // MORGAN_TRANSLATIONS_HPP
