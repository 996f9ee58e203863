#ifndef MORGAN_TERM_HPP
#define MORGAN_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace morgan {

/// Variable namespaces. Only `base` is accepted from user input for SDM/DM
/// sequents; the others are produced by the k and h translations.
enum class Namespace : std::uint8_t { base, primed, doubled, class_indexed };

/// Constructor tags, in canonical-order rank.
enum class Op : std::uint8_t { var, bottom, neg, conj, disj, imp };

struct TermNode;

/// Immutable, hash-consed term. Two structurally equal terms share one node,
/// so equality and hashing are O(1). The same node type carries the
/// implicational language (Op::imp) used by G3ip; ¬ and ⊤ are notation there.
class Term {
 public:
  Term();  // ⊥

  static Term var(std::string_view name, Namespace ns = Namespace::base);
  static Term bottom();
  static Term top();  // ¬⊥ in the SDM/DM language
  static Term neg(Term t);
  static Term conj(Term l, Term r);
  static Term disj(Term l, Term r);
  static Term imp(Term l, Term r);
  static Term imp_top();          // ⊥ ⊃ ⊥
  static Term imp_neg(Term t);    // t ⊃ ⊥

  Op op() const;
  Namespace ns() const;           // only meaningful for variables
  const std::string& name() const;
  Term arg() const;               // neg
  Term left() const;              // binary
  Term right() const;             // binary

  bool is_var() const { return op() == Op::var; }
  bool is_bottom() const { return op() == Op::bottom; }
  bool is_neg() const { return op() == Op::neg; }
  bool is_conj() const { return op() == Op::conj; }
  bool is_disj() const { return op() == Op::disj; }
  bool is_imp() const { return op() == Op::imp; }

  /// Number of ¬, ∧, ∨, ⊃ occurrences.
  std::size_t complexity() const;
  /// Number of nodes.
  std::size_t size() const;
  /// Unique id of the interned node; stable within a process only.
  std::uint32_t id() const;

  bool operator==(const Term& o) const { return node_ == o.node_; }
  bool operator!=(const Term& o) const { return node_ != o.node_; }

  const TermNode* node() const { return node_; }

 private:
  explicit Term(const TermNode* n) : node_(n) {}
  const TermNode* node_;
};

/// Total structural order: constructor rank, then namespace and name for
/// variables, then children left to right. Returns <0, 0, >0.
int compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

using VarSet = std::set<Term, TermLess>;

/// Collects the variables of t into out.
void collect_vars(const Term& t, VarSet& out);
VarSet vars(const Term& t);

}  // namespace morgan

template <>
struct std::hash<morgan::Term> {
  std::size_t operator()(const morgan::Term& t) const noexcept { return t.id(); }
};

#endif  // MORGAN_TERM_HPP
