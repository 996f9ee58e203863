#ifndef MORGAN_DERIVATION_HPP
#define MORGAN_DERIVATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morgan/rules.hpp"

namespace morgan {

struct DerivationNode;

/// Immutable proof tree; subtrees may be shared between derivations.
using Derivation = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  Sequent sequent;
  Rule rule;
  std::optional<std::size_t> principal;  // index into sequent.antecedent()
  std::vector<Derivation> children;
  std::size_t height = 0;
};

/// Builds a node; the height is computed from the children.
Derivation make_derivation(Sequent sequent, Rule rule, std::optional<std::size_t> principal,
                           std::vector<Derivation> children = {});
/// Builds a node with an explicit height field, unchecked. Used by parsers
/// and by tests that need malformed trees.
Derivation make_raw_derivation(Sequent sequent, Rule rule, std::optional<std::size_t> principal,
                               std::vector<Derivation> children, std::size_t height);

struct CheckResult {
  bool ok = true;
  std::string diagnostic;  // path to the offending node and what went wrong
  explicit operator bool() const { return ok; }
};

/// Replays every node against the rule tables of `calculus`: some instance
/// produced by expand() for the node's sequent must carry the node's rule and
/// principal member, and its premisses must equal the children's sequents as
/// multisets. Heights must satisfy the axiom/rule height equations.
CheckResult check_derivation(Calculus calculus, const Derivation& d);

/// Number of nodes (shared subtrees counted once per occurrence).
std::size_t node_count(const Derivation& d);

/// Adds `extra` to the antecedent of every node (weakening). Nodes whose rule
/// discards the context, (∗), keep their premisses unchanged.
Derivation weaken(const Derivation& d, const std::vector<Structure>& extra);

/// Visits every node in pre-order.
template <class F>
void for_each_node(const Derivation& d, F&& f) {
  f(*d);
  for (const auto& c : d->children) for_each_node(c, f);
}

}  // namespace morgan

#endif  // MORGAN_DERIVATION_HPP
