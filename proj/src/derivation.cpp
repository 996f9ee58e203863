#include "morgan/derivation.hpp"

#include <algorithm>
#include <stdexcept>

#include "morgan/syntax.hpp"

namespace morgan {

Derivation make_derivation(Sequent sequent, Rule rule, std::optional<std::size_t> principal,
                           std::vector<Derivation> children) {
  std::size_t h = 0;
  if (!children.empty()) {
    for (const auto& c : children) h = std::max(h, c->height);
    ++h;
  }
  return make_raw_derivation(std::move(sequent), rule, principal, std::move(children), h);
}

Derivation make_raw_derivation(Sequent sequent, Rule rule, std::optional<std::size_t> principal,
                               std::vector<Derivation> children, std::size_t height) {
  return std::make_shared<const DerivationNode>(
      DerivationNode{std::move(sequent), rule, principal, std::move(children), height});
}

namespace {

bool same_principal(const Sequent& s, std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return s.antecedent()[*a] == s.antecedent()[*b];
}

CheckResult fail(const std::string& path, const DerivationNode& n, const std::string& why) {
  return CheckResult{false, path + " [" + std::string(rule_label(n.rule)) + "] " +
                                print_sequent(n.sequent) + ": " + why};
}

CheckResult check_node(Calculus calculus, const Derivation& d, const std::string& path) {
  if (!d) return CheckResult{false, path + ": null node"};
  const DerivationNode& n = *d;
  if (n.sequent.calculus() != calculus) return fail(path, n, "calculus tag mismatch");
  Calculus family = calculus == Calculus::classical ? Calculus::intuitionistic : calculus;
  if (rule_calculus(n.rule) != family) return fail(path, n, "rule from another calculus");
  if (n.rule == Rule::gem_at && calculus != Calculus::classical)
    return fail(path, n, "Gem-at outside G3ip+Gem-at");
  if (n.principal && *n.principal >= n.sequent.antecedent().size())
    return fail(path, n, "principal index out of range");

  if (n.children.empty()) {
    if (!is_axiom(n.rule)) return fail(path, n, "leaf is not an axiom");
    if (n.height != 0) return fail(path, n, "axiom with nonzero height");
  } else {
    std::size_t h = 0;
    for (const auto& c : n.children) {
      if (!c) return fail(path, n, "null child");
      h = std::max(h, c->height);
    }
    if (n.height != h + 1) return fail(path, n, "height field inconsistent with children");
  }

  bool matched = false;
  for (const auto& inst : expand(n.sequent)) {
    if (inst.rule != n.rule || !same_principal(n.sequent, inst.principal, n.principal)) continue;
    if (inst.premisses.size() != n.children.size()) continue;
    bool all = true;
    for (std::size_t i = 0; i < inst.premisses.size() && all; ++i)
      all = inst.premisses[i] == n.children[i]->sequent;
    if (all) {
      matched = true;
      break;
    }
  }
  if (!matched) return fail(path, n, "no rule instance reproduces this step");

  for (std::size_t i = 0; i < n.children.size(); ++i) {
    auto r = check_node(calculus, n.children[i], path + "/" + std::to_string(i));
    if (!r) return r;
  }
  return {};
}

}  // namespace

CheckResult check_derivation(Calculus calculus, const Derivation& d) {
  try {
    return check_node(calculus, d, "root");
  } catch (const std::exception& e) {
    return CheckResult{false, std::string("root: ") + e.what()};
  }
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& c : d->children) n += node_count(c);
  return n;
}

Derivation weaken(const Derivation& d, const std::vector<Structure>& extra) {
  if (extra.empty()) return d;
  const DerivationNode& n = *d;
  std::vector<Structure> ant = n.sequent.antecedent();
  ant.insert(ant.end(), extra.begin(), extra.end());
  std::sort(ant.begin(), ant.end(), StructureLess{});
  Sequent s(Sequent::unchecked_t{}, n.sequent.calculus(), std::move(ant), n.sequent.succedent());

  std::optional<std::size_t> principal;
  if (n.principal) {
    const Structure& p = n.sequent.antecedent()[*n.principal];
    auto it = std::find(s.antecedent().begin(), s.antecedent().end(), p);
    principal = static_cast<std::size_t>(it - s.antecedent().begin());
  }
  std::vector<Derivation> children;
  children.reserve(n.children.size());
  for (const auto& c : n.children)
    children.push_back(n.rule == Rule::sdm_star ? c : weaken(c, extra));
  return make_derivation(std::move(s), n.rule, principal, std::move(children));
}

}  // namespace morgan
