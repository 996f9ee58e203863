#ifndef MORGAN_RULES_HPP
#define MORGAN_RULES_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "morgan/sequent.hpp"

namespace morgan {

enum class Rule : std::uint8_t {
  // G3SDM
  sdm_id, sdm_bot_l, sdm_star_bot_r, sdm_star_neg_bot_l,
  sdm_and_l, sdm_and_r, sdm_or_l, sdm_or_r1, sdm_or_r2,
  sdm_star_or_l, sdm_star_or_r, sdm_star_neg_and_l, sdm_star_neg_and_r,
  sdm_star_negneg_l, sdm_star_negneg_r, sdm_neg_l, sdm_neg_r, sdm_star,
  // G3DM
  dm_id1, dm_id2, dm_bot_l, dm_neg_bot_r,
  dm_and_l, dm_and_r, dm_or_l, dm_or_r1, dm_or_r2,
  dm_neg_and_l, dm_neg_and_r1, dm_neg_and_r2, dm_neg_or_l, dm_neg_or_r,
  dm_negneg_l, dm_negneg_r,
  // G3ip (+ Gem-at)
  ip_id, ip_bot_l, ip_and_l, ip_and_r, ip_or_l, ip_or_r1, ip_or_r2, ip_imp_l, ip_imp_r,
  gem_at,
};

/// Stable ASCII label used in proof objects, e.g. "*|=>" for (∗∨⇒).
std::string_view rule_label(Rule r);
/// LaTeX label, e.g. "(*\\vee\\Rightarrow)".
std::string_view rule_latex(Rule r);
Rule rule_from_label(Calculus c, std::string_view label);
bool is_axiom(Rule r);
Calculus rule_calculus(Rule r);  // INT for the G3ip rules

/// One backward rule application: `premisses / conclusion`.
struct RuleInstance {
  Rule rule;
  Sequent conclusion;
  std::vector<Sequent> premisses;        // canonical antecedents
  std::optional<std::size_t> principal;  // antecedent index of the principal occurrence
};

/// Every G3SDM axiom/rule instance whose conclusion is `goal`.
std::vector<RuleInstance> expand_g3sdm(const Sequent& goal);
/// Every G3DM axiom/rule instance whose conclusion is `goal`.
std::vector<RuleInstance> expand_g3dm(const Sequent& goal);
/// G3ip instances; with `classical`, also Gem-at on every variable of the goal.
std::vector<RuleInstance> expand_g3ip(const Sequent& goal, bool classical);

/// Dispatch on the goal's calculus tag.
std::vector<RuleInstance> expand(const Sequent& goal);

}  // namespace morgan

#endif  // MORGAN_RULES_HPP
