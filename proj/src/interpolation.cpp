#include "morgan/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "morgan/prover.hpp"
#include "morgan/translations.hpp"

namespace morgan {

namespace {

using Members = std::vector<Structure>;

bool contains(const Members& m, const Structure& s) {
  return std::find(m.begin(), m.end(), s) != m.end();
}

bool take(Members& m, const Structure& s) {
  auto it = std::find(m.begin(), m.end(), s);
  if (it == m.end()) return false;
  m.erase(it);
  return true;
}

// a minus b, by occurrence.
Members difference(Members a, const Members& b) {
  for (const auto& s : b) take(a, s);
  return a;
}

Members concat(Members a, const Members& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool subset(const VarSet& a, const VarSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end(), TermLess{});
}

Structure P(Term t) { return Structure::plain(t); }

bool binary_left(Rule r) {
  return r == Rule::sdm_or_l || r == Rule::dm_or_l || r == Rule::dm_neg_and_l;
}

class Extractor {
 public:
  Structure run(const Derivation& d, const Members& left, const Members& right) {
    const DerivationNode& n = *d;
    const auto& ant = n.sequent.antecedent();
    std::optional<Structure> principal;
    if (n.principal) principal = ant[*n.principal];
    bool on_left = principal && contains(left, *principal);
    const Term top = Term::top();

    switch (n.rule) {
      // G3SDM axioms
      case Rule::sdm_id: return on_left ? *principal : Structure::star(Term::bottom());
      case Rule::sdm_bot_l: return on_left ? P(Term::bottom()) : P(top);
      case Rule::sdm_star_bot_r: return Structure::star(Term::bottom());
      case Rule::sdm_star_neg_bot_l: return on_left ? *principal : P(top);
      // G3DM axioms
      case Rule::dm_id1:
      case Rule::dm_id2: return on_left ? *principal : P(top);
      case Rule::dm_bot_l: return on_left ? P(Term::bottom()) : P(top);
      case Rule::dm_neg_bot_r: return P(top);
      case Rule::sdm_star: return star_case(n, on_left, right);
      default: break;
    }

    std::vector<Structure> alphas;
    if (principal) {
      // Left rule: the members a premiss adds go to the principal's side.
      Members l = left, r = right;
      if (!take(on_left ? l : r, *principal))
        throw std::logic_error("principal member missing from the partition");
      Members rest = concat(l, r);
      for (const auto& child : n.children) {
        Members added = difference(child->sequent.antecedent(), rest);
        alphas.push_back(on_left ? run(child, concat(l, added), r) : run(child, l, concat(r, added)));
      }
    } else {
      for (const auto& child : n.children) alphas.push_back(run(child, left, right));
    }

    if (alphas.size() == 1) return alphas[0];
    Term a = flatten(alphas[0]), b = flatten(alphas[1]);
    if (binary_left(n.rule) && on_left) return P(Term::disj(a, b));
    return P(Term::conj(a, b));
  }

 private:
  // ∗ψ, Γ ⇒ ∗φ from φ ⇒ ψ.
  Structure star_case(const DerivationNode& n, bool on_left, const Members& right) {
    if (!on_left) return Structure::star(Term::bottom());
    const Term psi = n.sequent.antecedent()[*n.principal].term;
    const Term phi = n.sequent.succedent().term;
    VarSet shared = vars(std::span<const Structure>(right));
    collect_vars(phi, shared);
    if (subset(vars(psi), shared)) return Structure::star(psi);
    // ψ mentions variables outside Γ₂, φ: interpolate φ ⇒ ψ with φ on the
    // left and take ∗t(γ); var(γ) ⊆ var(φ) ∩ var(ψ).
    Structure gamma = run(n.children[0], {P(phi)}, {});
    return Structure::star(flatten(gamma));
  }
};

void require_interpolable(Calculus c) {
  if (c != Calculus::sdm && c != Calculus::dm)
    throw std::invalid_argument("interpolation is implemented for G3SDM and G3DM");
}

}  // namespace

Sequent partition_goal(Calculus calculus, const Partition& part) {
  return Sequent(calculus, concat(part.left, part.right), part.succedent).canonical();
}

bool partition_matches(const Sequent& goal, const Partition& part) {
  return goal.succedent() == part.succedent &&
         same_multiset(goal.antecedent(), concat(part.left, part.right));
}

std::vector<Partition> all_partitions(const Sequent& goal) {
  const auto& ant = goal.antecedent();
  if (ant.size() > 20) throw std::invalid_argument("too many antecedent members to split");
  std::vector<Partition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ant.size()); ++mask) {
    Partition p{{}, {}, goal.succedent()};
    for (std::size_t i = 0; i < ant.size(); ++i) ((mask >> i) & 1 ? p.left : p.right).push_back(ant[i]);
    out.push_back(std::move(p));
  }
  return out;
}

Structure extract_interpolant(Calculus calculus, const Derivation& d, const Partition& part) {
  require_interpolable(calculus);
  if (auto r = check_derivation(calculus, d); !r)
    throw std::invalid_argument("derivation fails checking: " + r.diagnostic);
  if (!partition_matches(d->sequent, part))
    throw std::invalid_argument("partition does not split the derived sequent");
  return Extractor().run(d, part.left, part.right);
}

InterpolationResult interpolate(Calculus calculus, const Derivation& d, const Partition& part) {
  Structure alpha = extract_interpolant(calculus, d, part);
  auto left = derive(calculus, Sequent(calculus, part.left, alpha));
  auto right = derive(calculus, Sequent(calculus, concat({alpha}, part.right), part.succedent));
  if (!left || !right) throw std::logic_error("extracted interpolant misses an obligation");
  return InterpolationResult{alpha, *left, *right};
}

bool verify_interpolant(Calculus calculus, const Sequent& goal, const Partition& part,
                        const Structure& candidate) {
  require_interpolable(calculus);
  if (calculus == Calculus::dm && candidate.starred) return false;
  if (goal.calculus() != calculus || !partition_matches(goal, part)) return false;
  VarSet shared_right = vars(std::span<const Structure>(part.right));
  collect_vars(part.succedent.term, shared_right);
  VarSet cv = vars(candidate.term);
  if (!subset(cv, vars(std::span<const Structure>(part.left))) || !subset(cv, shared_right))
    return false;
  try {
    return derivable(calculus, Sequent(calculus, part.left, candidate)) &&
           derivable(calculus, Sequent(calculus, concat({candidate}, part.right), part.succedent));
  } catch (const std::invalid_argument&) {
    return false;  // candidate outside the calculus language
  }
}

}  // namespace morgan
