#include "morgan/rules.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace morgan {

namespace {

struct RuleInfo {
  Rule rule;
  const char* label;
  const char* latex;
  bool axiom;
  Calculus calculus;
};

constexpr Calculus S = Calculus::sdm, D = Calculus::dm, I = Calculus::intuitionistic;

constexpr std::array kRules{
    RuleInfo{Rule::sdm_id, "Id", "(Id)", true, S},
    RuleInfo{Rule::sdm_bot_l, "F=>", "(\\bot\\Rightarrow)", true, S},
    RuleInfo{Rule::sdm_star_bot_r, "=>*F", "(\\Rightarrow*\\bot)", true, S},
    RuleInfo{Rule::sdm_star_neg_bot_l, "*~F=>", "(*\\neg\\bot\\Rightarrow)", true, S},
    RuleInfo{Rule::sdm_and_l, "&=>", "(\\wedge\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_and_r, "=>&", "(\\Rightarrow\\wedge)", false, S},
    RuleInfo{Rule::sdm_or_l, "|=>", "(\\vee\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_or_r1, "=>|1", "(\\Rightarrow\\vee_1)", false, S},
    RuleInfo{Rule::sdm_or_r2, "=>|2", "(\\Rightarrow\\vee_2)", false, S},
    RuleInfo{Rule::sdm_star_or_l, "*|=>", "(*\\vee\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_star_or_r, "=>*|", "(\\Rightarrow*\\vee)", false, S},
    RuleInfo{Rule::sdm_star_neg_and_l, "*~&=>", "(*\\neg\\wedge\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_star_neg_and_r, "=>*~&", "(\\Rightarrow*\\neg\\wedge)", false, S},
    RuleInfo{Rule::sdm_star_negneg_l, "*~~=>", "(*\\neg\\neg\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_star_negneg_r, "=>*~~", "(\\Rightarrow*\\neg\\neg)", false, S},
    RuleInfo{Rule::sdm_neg_l, "~=>", "(\\neg\\Rightarrow)", false, S},
    RuleInfo{Rule::sdm_neg_r, "=>~", "(\\Rightarrow\\neg)", false, S},
    RuleInfo{Rule::sdm_star, "*", "(*)", false, S},
    RuleInfo{Rule::dm_id1, "Id1", "(Id_1)", true, D},
    RuleInfo{Rule::dm_id2, "Id2", "(Id_2)", true, D},
    RuleInfo{Rule::dm_bot_l, "F=>", "(\\bot\\Rightarrow)", true, D},
    RuleInfo{Rule::dm_neg_bot_r, "=>~F", "(\\Rightarrow\\neg\\bot)", true, D},
    RuleInfo{Rule::dm_and_l, "&=>", "(\\wedge\\Rightarrow)", false, D},
    RuleInfo{Rule::dm_and_r, "=>&", "(\\Rightarrow\\wedge)", false, D},
    RuleInfo{Rule::dm_or_l, "|=>", "(\\vee\\Rightarrow)", false, D},
    RuleInfo{Rule::dm_or_r1, "=>|1", "(\\Rightarrow\\vee_1)", false, D},
    RuleInfo{Rule::dm_or_r2, "=>|2", "(\\Rightarrow\\vee_2)", false, D},
    RuleInfo{Rule::dm_neg_and_l, "~&=>", "(\\neg\\wedge\\Rightarrow)", false, D},
    RuleInfo{Rule::dm_neg_and_r1, "=>~&1", "(\\Rightarrow\\neg\\wedge_1)", false, D},
    RuleInfo{Rule::dm_neg_and_r2, "=>~&2", "(\\Rightarrow\\neg\\wedge_2)", false, D},
    RuleInfo{Rule::dm_neg_or_l, "~|=>", "(\\neg\\vee\\Rightarrow)", false, D},
    RuleInfo{Rule::dm_neg_or_r, "=>~|", "(\\Rightarrow\\neg\\vee)", false, D},
    RuleInfo{Rule::dm_negneg_l, "~~=>", "(\\neg\\neg\\Rightarrow)", false, D},
    RuleInfo{Rule::dm_negneg_r, "=>~~", "(\\Rightarrow\\neg\\neg)", false, D},
    RuleInfo{Rule::ip_id, "Id", "(Id)", true, I},
    RuleInfo{Rule::ip_bot_l, "FL", "(\\bot L)", true, I},
    RuleInfo{Rule::ip_and_l, "&L", "(\\wedge L)", false, I},
    RuleInfo{Rule::ip_and_r, "&R", "(\\wedge R)", false, I},
    RuleInfo{Rule::ip_or_l, "|L", "(\\vee L)", false, I},
    RuleInfo{Rule::ip_or_r1, "|R1", "(\\vee R_1)", false, I},
    RuleInfo{Rule::ip_or_r2, "|R2", "(\\vee R_2)", false, I},
    RuleInfo{Rule::ip_imp_l, "->L", "(\\supset L)", false, I},
    RuleInfo{Rule::ip_imp_r, "->R", "(\\supset R)", false, I},
    RuleInfo{Rule::gem_at, "Gem-at", "(Gem\\text{-}at)", false, I},
};

const RuleInfo& info(Rule r) {
  const auto& entry = kRules[static_cast<std::size_t>(r)];
  if (entry.rule != r) throw std::logic_error("rule table out of order");
  return entry;
}

using Structures = std::vector<Structure>;

Structures without(const Structures& ant, std::size_t i) {
  Structures out;
  out.reserve(ant.size() + 1);
  for (std::size_t j = 0; j < ant.size(); ++j)
    if (j != i) out.push_back(ant[j]);
  return out;
}

Sequent premiss(Calculus c, Structures ant, Structure succ) {
  std::sort(ant.begin(), ant.end(), StructureLess{});
  return Sequent(Sequent::unchecked_t{}, c, std::move(ant), succ);
}

// Replace occurrence i by the given members.
Sequent left_premiss(const Sequent& goal, std::size_t i, std::initializer_list<Structure> add) {
  Structures ant = without(goal.antecedent(), i);
  ant.insert(ant.end(), add.begin(), add.end());
  return premiss(goal.calculus(), std::move(ant), goal.succedent());
}

Sequent right_premiss(const Sequent& goal, Structure succ) {
  return premiss(goal.calculus(), goal.antecedent(), succ);
}

class Emitter {
 public:
  explicit Emitter(const Sequent& goal) : goal_(goal) {}

  void axiom(Rule r, std::optional<std::size_t> principal = std::nullopt) {
    out_.push_back(RuleInstance{r, goal_, {}, principal});
  }
  void rule(Rule r, std::vector<Sequent> ps, std::optional<std::size_t> principal = std::nullopt) {
    out_.push_back(RuleInstance{r, goal_, std::move(ps), principal});
  }
  std::vector<RuleInstance> take() { return std::move(out_); }

 private:
  const Sequent& goal_;
  std::vector<RuleInstance> out_;
};

Structure P(Term t) { return Structure::plain(t); }
Structure St(Term t) { return Structure::star(t); }

void require(const Sequent& goal, Calculus c, const char* who) {
  if (goal.calculus() != c)
    throw std::invalid_argument(std::string(who) + ": goal is tagged " +
                                std::string(calculus_name(goal.calculus())));
}

}  // namespace

std::string_view rule_label(Rule r) { return info(r).label; }
std::string_view rule_latex(Rule r) { return info(r).latex; }
bool is_axiom(Rule r) { return info(r).axiom; }
Calculus rule_calculus(Rule r) { return info(r).calculus; }

Rule rule_from_label(Calculus c, std::string_view label) {
  Calculus family = c == Calculus::classical ? Calculus::intuitionistic : c;
  for (const auto& e : kRules)
    if (e.calculus == family && label == e.label) return e.rule;
  throw std::invalid_argument("unknown rule label '" + std::string(label) + "' for " +
                              std::string(calculus_name(c)));
}

std::vector<RuleInstance> expand_g3sdm(const Sequent& goal) {
  require(goal, Calculus::sdm, "expand_g3sdm");
  Emitter e(goal);
  const auto& ant = goal.antecedent();
  const Structure& beta = goal.succedent();
  const Term& b = beta.term;

  // axioms
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const auto& a = ant[i];
    if (!a.starred && a.term.is_var() && !beta.starred && a.term == b) e.axiom(Rule::sdm_id, i);
  }
  for (std::size_t i = 0; i < ant.size(); ++i)
    if (!ant[i].starred && ant[i].term.is_bottom()) e.axiom(Rule::sdm_bot_l, i);
  if (beta.starred && b.is_bottom()) e.axiom(Rule::sdm_star_bot_r);
  for (std::size_t i = 0; i < ant.size(); ++i)
    if (ant[i].starred && ant[i].term.is_neg() && ant[i].term.arg().is_bottom())
      e.axiom(Rule::sdm_star_neg_bot_l, i);

  // one-premiss left rules
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const auto& a = ant[i];
    const Term& t = a.term;
    if (!a.starred) {
      if (t.is_conj()) e.rule(Rule::sdm_and_l, {left_premiss(goal, i, {P(t.left()), P(t.right())})}, i);
      else if (t.is_neg()) e.rule(Rule::sdm_neg_l, {left_premiss(goal, i, {St(t.arg())})}, i);
    } else {
      if (t.is_disj()) {
        e.rule(Rule::sdm_star_or_l, {left_premiss(goal, i, {St(t.left()), St(t.right())})}, i);
      } else if (t.is_neg() && t.arg().is_conj()) {
        Term c = t.arg();
        e.rule(Rule::sdm_star_neg_and_l,
               {left_premiss(goal, i, {St(Term::neg(c.left())), St(Term::neg(c.right()))})}, i);
      } else if (t.is_neg() && t.arg().is_neg()) {
        e.rule(Rule::sdm_star_negneg_l, {left_premiss(goal, i, {St(t.arg().arg())})}, i);
      }
    }
  }
  // one-premiss right rules
  if (!beta.starred) {
    if (b.is_disj()) {
      e.rule(Rule::sdm_or_r1, {right_premiss(goal, P(b.left()))});
      e.rule(Rule::sdm_or_r2, {right_premiss(goal, P(b.right()))});
    } else if (b.is_neg()) {
      e.rule(Rule::sdm_neg_r, {right_premiss(goal, St(b.arg()))});
    }
  } else if (b.is_neg() && b.arg().is_neg()) {
    e.rule(Rule::sdm_star_negneg_r, {right_premiss(goal, St(b.arg().arg()))});
  }
  // branching left rules
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const auto& a = ant[i];
    if (!a.starred && a.term.is_disj())
      e.rule(Rule::sdm_or_l,
             {left_premiss(goal, i, {P(a.term.left())}), left_premiss(goal, i, {P(a.term.right())})}, i);
  }
  // branching right rules
  if (!beta.starred && b.is_conj()) {
    e.rule(Rule::sdm_and_r, {right_premiss(goal, P(b.left())), right_premiss(goal, P(b.right()))});
  } else if (beta.starred && b.is_disj()) {
    e.rule(Rule::sdm_star_or_r, {right_premiss(goal, St(b.left())), right_premiss(goal, St(b.right()))});
  } else if (beta.starred && b.is_neg() && b.arg().is_conj()) {
    Term c = b.arg();
    e.rule(Rule::sdm_star_neg_and_r, {right_premiss(goal, St(Term::neg(c.left()))),
                                      right_premiss(goal, St(Term::neg(c.right())))});
  }
  // (∗): from φ ⇒ ψ infer ∗ψ, Γ ⇒ ∗φ
  if (beta.starred) {
    for (std::size_t i = 0; i < ant.size(); ++i)
      if (ant[i].starred)
        e.rule(Rule::sdm_star, {Sequent(Sequent::unchecked_t{}, Calculus::sdm, {P(b)}, P(ant[i].term))}, i);
  }
  return e.take();
}

std::vector<RuleInstance> expand_g3dm(const Sequent& goal) {
  require(goal, Calculus::dm, "expand_g3dm");
  Emitter e(goal);
  const auto& ant = goal.antecedent();
  const Term& b = goal.succedent().term;

  for (std::size_t i = 0; i < ant.size(); ++i)
    if (ant[i].term.is_var() && ant[i].term == b) e.axiom(Rule::dm_id1, i);
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_neg() && t.arg().is_var() && t == b) e.axiom(Rule::dm_id2, i);
  }
  for (std::size_t i = 0; i < ant.size(); ++i)
    if (ant[i].term.is_bottom()) e.axiom(Rule::dm_bot_l, i);
  if (b.is_neg() && b.arg().is_bottom()) e.axiom(Rule::dm_neg_bot_r);

  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_conj()) {
      e.rule(Rule::dm_and_l, {left_premiss(goal, i, {P(t.left()), P(t.right())})}, i);
    } else if (t.is_neg() && t.arg().is_disj()) {
      Term d = t.arg();
      e.rule(Rule::dm_neg_or_l,
             {left_premiss(goal, i, {P(Term::neg(d.left())), P(Term::neg(d.right()))})}, i);
    } else if (t.is_neg() && t.arg().is_neg()) {
      e.rule(Rule::dm_negneg_l, {left_premiss(goal, i, {P(t.arg().arg())})}, i);
    }
  }
  if (b.is_disj()) {
    e.rule(Rule::dm_or_r1, {right_premiss(goal, P(b.left()))});
    e.rule(Rule::dm_or_r2, {right_premiss(goal, P(b.right()))});
  } else if (b.is_neg() && b.arg().is_conj()) {
    Term c = b.arg();
    e.rule(Rule::dm_neg_and_r1, {right_premiss(goal, P(Term::neg(c.left())))});
    e.rule(Rule::dm_neg_and_r2, {right_premiss(goal, P(Term::neg(c.right())))});
  } else if (b.is_neg() && b.arg().is_neg()) {
    e.rule(Rule::dm_negneg_r, {right_premiss(goal, P(b.arg().arg()))});
  }
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_disj()) {
      e.rule(Rule::dm_or_l,
             {left_premiss(goal, i, {P(t.left())}), left_premiss(goal, i, {P(t.right())})}, i);
    } else if (t.is_neg() && t.arg().is_conj()) {
      Term c = t.arg();
      e.rule(Rule::dm_neg_and_l, {left_premiss(goal, i, {P(Term::neg(c.left()))}),
                                  left_premiss(goal, i, {P(Term::neg(c.right()))})},
             i);
    }
  }
  if (b.is_conj()) {
    e.rule(Rule::dm_and_r, {right_premiss(goal, P(b.left())), right_premiss(goal, P(b.right()))});
  } else if (b.is_neg() && b.arg().is_disj()) {
    Term d = b.arg();
    e.rule(Rule::dm_neg_or_r, {right_premiss(goal, P(Term::neg(d.left()))),
                               right_premiss(goal, P(Term::neg(d.right())))});
  }
  return e.take();
}

std::vector<RuleInstance> expand_g3ip(const Sequent& goal, bool classical) {
  Calculus want = classical ? Calculus::classical : Calculus::intuitionistic;
  require(goal, want, "expand_g3ip");
  Emitter e(goal);
  const auto& ant = goal.antecedent();
  const Term& g = goal.succedent().term;

  for (std::size_t i = 0; i < ant.size(); ++i)
    if (ant[i].term.is_var() && ant[i].term == g) e.axiom(Rule::ip_id, i);
  for (std::size_t i = 0; i < ant.size(); ++i)
    if (ant[i].term.is_bottom()) e.axiom(Rule::ip_bot_l, i);

  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_conj()) e.rule(Rule::ip_and_l, {left_premiss(goal, i, {P(t.left()), P(t.right())})}, i);
  }
  if (g.is_imp()) e.rule(Rule::ip_imp_r, {premiss(goal.calculus(), [&] {
                           Structures a = ant;
                           a.push_back(P(g.left()));
                           return a;
                         }(), P(g.right()))});
  if (g.is_disj()) {
    e.rule(Rule::ip_or_r1, {right_premiss(goal, P(g.left()))});
    e.rule(Rule::ip_or_r2, {right_premiss(goal, P(g.right()))});
  }
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_disj())
      e.rule(Rule::ip_or_l, {left_premiss(goal, i, {P(t.left())}), left_premiss(goal, i, {P(t.right())})},
             i);
  }
  if (g.is_conj())
    e.rule(Rule::ip_and_r, {right_premiss(goal, P(g.left())), right_premiss(goal, P(g.right()))});
  for (std::size_t i = 0; i < ant.size(); ++i) {
    const Term& t = ant[i].term;
    if (t.is_imp())
      e.rule(Rule::ip_imp_l, {right_premiss(goal, P(t.left())), left_premiss(goal, i, {P(t.right())})}, i);
  }
  if (classical) {
    for (const Term& p : vars(goal)) {
      Structures with_p = ant, with_not_p = ant;
      with_p.push_back(P(p));
      with_not_p.push_back(P(Term::imp_neg(p)));
      e.rule(Rule::gem_at, {premiss(goal.calculus(), std::move(with_p), goal.succedent()),
                            premiss(goal.calculus(), std::move(with_not_p), goal.succedent())});
    }
  }
  return e.take();
}

std::vector<RuleInstance> expand(const Sequent& goal) {
  switch (goal.calculus()) {
    case Calculus::sdm: return expand_g3sdm(goal);
    case Calculus::dm: return expand_g3dm(goal);
    case Calculus::intuitionistic: return expand_g3ip(goal, false);
    case Calculus::classical: return expand_g3ip(goal, true);
  }
  return {};
}

}  // namespace morgan
