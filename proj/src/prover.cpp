#include "morgan/prover.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace morgan {

std::size_t default_memo_limit() {
  if (const char* env = std::getenv("MORGANKIT_MEMO_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Left rules the committed search may apply without backtracking. In G3DM
// every left rule qualifies. In G3SDM only the rules with a plain principal
// do: a starred principal can instead feed (∗), which discards the rest of
// the antecedent, and its decomposition can lose that route (for instance
// *~~r => ~(~~r & q) is derivable while *r => ~(~~r & q) is not).
bool invertible_left(Rule r) {
  switch (r) {
    case Rule::sdm_and_l:
    case Rule::sdm_or_l:
    case Rule::sdm_neg_l:
    case Rule::dm_and_l:
    case Rule::dm_or_l:
    case Rule::dm_neg_and_l:
    case Rule::dm_neg_or_l:
    case Rule::dm_negneg_l: return true;
    default: return false;
  }
}

template <class V>
using SeqMap = std::unordered_map<Sequent, V, SequentKeyHash, SequentKeyEq>;

// Insert with a size cap: overflowing the cap drops the whole table.
template <class V>
void capped_insert(SeqMap<V>& m, const Sequent& k, V v, std::size_t limit, SearchStats& st) {
  if (m.size() >= limit) {
    m.clear();
    ++st.memo_clears;
  }
  m.insert_or_assign(k, std::move(v));
}

// Antecedent as a set: sorted, duplicates removed.
Sequent as_set(const Sequent& s) {
  std::vector<Structure> ant = s.antecedent();
  std::sort(ant.begin(), ant.end(), StructureLess{});
  ant.erase(std::unique(ant.begin(), ant.end()), ant.end());
  return Sequent(Sequent::unchecked_t{}, s.calculus(), std::move(ant), s.succedent());
}

// Members of s beyond its set image (s canonical).
std::vector<Structure> surplus(const Sequent& s) {
  std::vector<Structure> out;
  const auto& a = s.antecedent();
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] == a[i - 1]) out.push_back(a[i]);
  return out;
}

struct Bounds {
  std::size_t ub = kNone;  // derivable within ub
  std::size_t lb = kNone;  // not derivable within lb (kNone: unknown)
};

}  // namespace

struct Prover::Impl {
  Calculus calculus;
  std::size_t limit;
  SearchStats stats;
  Observer observer;

  SeqMap<bool> verdicts;  // SDM/DM
  SeqMap<Bounds> bounds;  // all calculi

  // INT/CL
  SeqMap<Derivation> ip_success;
  std::unordered_set<Sequent, SequentKeyHash, SequentKeyEq> ip_failure;
  SeqMap<std::size_t> ancestors;

  Impl(Calculus c, std::size_t l) : calculus(c), limit(std::max<std::size_t>(l, 1)) {}

  bool weighted() const { return calculus == Calculus::sdm || calculus == Calculus::dm; }

  void check_tag(const Sequent& g) const {
    if (g.calculus() != calculus)
      throw std::invalid_argument("goal tagged " + std::string(calculus_name(g.calculus())) +
                                  " given to a " + std::string(calculus_name(calculus)) + " prover");
  }

  void observe(const Sequent& parent, const RuleInstance& inst) {
    if (!observer) return;
    for (const auto& p : inst.premisses) observer(parent, p);
  }

  std::vector<RuleInstance> expand_counted(const Sequent& s) {
    ++stats.expansions;
    return expand(s);
  }

  // ---- SDM / DM: committed search -------------------------------------

  // Index of the instance a committed search uses at s, or kNone when only
  // the remaining instances can be tried one by one.
  static std::size_t committed(const std::vector<RuleInstance>& insts) {
    for (std::size_t i = 0; i < insts.size(); ++i)
      if (is_axiom(insts[i].rule)) return i;
    for (std::size_t i = 0; i < insts.size(); ++i)
      if (invertible_left(insts[i].rule)) return i;
    return kNone;
  }

  bool all_premisses(const Sequent& s, const RuleInstance& inst) {
    observe(s, inst);
    for (const auto& p : inst.premisses)
      if (!decide(p)) return false;
    return true;
  }

  bool decide(const Sequent& s) {
    if (auto it = verdicts.find(s); it != verdicts.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    auto insts = expand_counted(s);
    bool ok = false;
    if (std::size_t c = committed(insts); c != kNone) {
      ok = all_premisses(s, insts[c]);
    } else {
      for (const auto& inst : insts)
        if (all_premisses(s, inst)) {
          ok = true;
          break;
        }
    }
    capped_insert(verdicts, s, ok, limit, stats);
    return ok;
  }

  Derivation witness(const Sequent& s) {
    auto insts = expand_counted(s);
    const RuleInstance* pick = nullptr;
    if (std::size_t c = committed(insts); c != kNone) {
      pick = &insts[c];
    } else {
      for (const auto& inst : insts) {
        bool all = true;
        for (const auto& p : inst.premisses) all = all && decide(p);
        if (all) {
          pick = &inst;
          break;
        }
      }
    }
    if (!pick) throw std::logic_error("witness requested for an underivable sequent");
    std::vector<Derivation> kids;
    for (const auto& p : pick->premisses) kids.push_back(witness(p));
    return make_derivation(s, pick->rule, pick->principal, std::move(kids));
  }

  // ---- INT / CL: set-based search with ancestor loop check -----------

  struct IpOutcome {
    bool ok;
    std::size_t ref;  // shallowest ancestor depth a loop cut referred to
  };

  Derivation ip_child(const Sequent& premiss) {
    Sequent set = as_set(premiss);
    return weaken(ip_success.at(set), surplus(premiss));
  }

  // Tries one instance: every premiss must succeed.
  IpOutcome ip_try(const Sequent& s, const RuleInstance& inst, std::size_t depth,
                   Derivation& out) {
    observe(s, inst);
    std::vector<Derivation> kids;
    std::size_t ref = kNone;
    for (const auto& p : inst.premisses) {
      Sequent set = as_set(p);
      IpOutcome r = ip_prove(set, depth + 1);
      if (!r.ok) return {false, r.ref};
      ref = std::min(ref, r.ref);
      kids.push_back(weaken(ip_success.at(set), surplus(p)));
    }
    out = make_derivation(s, inst.rule, inst.principal, std::move(kids));
    return {true, ref};
  }

  // s has a set antecedent.
  IpOutcome ip_prove(const Sequent& s, std::size_t depth) {
    if (ip_success.count(s)) {
      ++stats.memo_hits;
      return {true, kNone};
    }
    if (ip_failure.count(s)) {
      ++stats.memo_hits;
      return {false, kNone};
    }
    if (auto it = ancestors.find(s); it != ancestors.end()) {
      ++stats.loop_prunes;
      return {false, it->second};
    }
    ancestors.emplace(s, depth);
    IpOutcome result = ip_search(s, depth);
    ancestors.erase(s);
    if (result.ok) {
      // The derivation was stored by ip_search.
    } else if (result.ref >= depth) {
      if (ip_failure.size() >= limit) {
        ip_failure.clear();
        ++stats.memo_clears;
      }
      ip_failure.insert(s);
      result.ref = kNone;
    }
    return result;
  }

  IpOutcome ip_search(const Sequent& s, std::size_t depth) {
    auto insts = expand_counted(s);
    const auto& ant = s.antecedent();
    auto in_ant = [&](const Term& t) {
      return std::find(ant.begin(), ant.end(), Structure::plain(t)) != ant.end();
    };
    auto store = [&](Derivation d) { capped_insert(ip_success, s, std::move(d), limit, stats); };

    for (const auto& inst : insts)
      if (is_axiom(inst.rule)) {
        store(make_derivation(s, inst.rule, inst.principal));
        return {true, kNone};
      }

    // Invertible steps: commit to the first one that applies.
    const RuleInstance* commit = nullptr;
    for (const auto& inst : insts) {
      Rule r = inst.rule;
      if (r == Rule::ip_and_l || r == Rule::ip_or_l || r == Rule::ip_imp_r || r == Rule::ip_and_r) {
        commit = &inst;
        break;
      }
    }
    if (!commit) {
      // θ⊃δ with θ an atom present in the antecedent: the left premiss is an
      // axiom, and the right premiss is equivalent to the conclusion.
      for (const auto& inst : insts) {
        if (inst.rule != Rule::ip_imp_l) continue;
        const Term& pr = ant[*inst.principal].term;
        if (pr.left().is_var() && in_ant(pr.left()) && !in_ant(pr.right())) {
          commit = &inst;
          break;
        }
      }
    }
    if (!commit && calculus == Calculus::classical) {
      // Gem-at is invertible; split on the first variable not yet decided.
      for (const auto& inst : insts) {
        if (inst.rule != Rule::gem_at) continue;
        // The atom is the member the first premiss adds.
        Term atom;
        for (const auto& m : inst.premisses[0].antecedent())
          if (m.term.is_var() && !in_ant(m.term)) atom = m.term;
        if (atom.is_var() && !in_ant(Term::imp_neg(atom))) {
          commit = &inst;
          break;
        }
      }
    }
    if (commit) {
      Derivation d;
      IpOutcome r = ip_try(s, *commit, depth, d);
      if (r.ok) store(d);
      return r;
    }

    std::size_t ref = kNone;
    for (const auto& inst : insts) {
      if (inst.rule == Rule::gem_at) continue;  // all atoms decided above
      if (inst.rule == Rule::ip_imp_l && in_ant(ant[*inst.principal].term.right())) continue;
      Derivation d;
      IpOutcome r = ip_try(s, inst, depth, d);
      if (r.ok) {
        store(d);
        return {true, kNone};
      }
      ref = std::min(ref, r.ref);
    }
    return {false, ref};
  }

  bool ip_decide(const Sequent& goal) {
    Sequent set = as_set(goal);
    return ip_prove(set, 0).ok;
  }

  // ---- height-bounded exhaustive search (all calculi) ------------------

  bool quick_refute(const Sequent& s) {
    if (weighted()) return !decide(s);
    return false;
  }

  bool within(const Sequent& s, std::size_t n) {
    if (auto it = bounds.find(s); it != bounds.end()) {
      if (it->second.ub <= n) return true;
      if (it->second.lb != kNone && it->second.lb >= n) return false;
    }
    if (quick_refute(s)) return false;
    auto insts = expand_counted(s);
    bool ok = false;
    std::size_t height = kNone;
    for (const auto& inst : insts)
      if (is_axiom(inst.rule)) {
        ok = true;
        height = 0;
        break;
      }
    if (!ok && n > 0) {
      for (const auto& inst : insts) {
        if (is_axiom(inst.rule)) continue;
        observe(s, inst);
        bool all = true;
        for (const auto& p : inst.premisses)
          if (!within(p, n - 1)) {
            all = false;
            break;
          }
        if (all) {
          ok = true;
          height = n;
          break;
        }
      }
    }
    Bounds b;
    if (auto it = bounds.find(s); it != bounds.end()) b = it->second;
    if (ok) b.ub = std::min(b.ub, height);
    else b.lb = b.lb == kNone ? n : std::max(b.lb, n);
    capped_insert(bounds, s, b, limit, stats);
    return ok;
  }

  Derivation bounded_witness(const Sequent& s, std::size_t n) {
    auto insts = expand_counted(s);
    for (const auto& inst : insts)
      if (is_axiom(inst.rule)) return make_derivation(s, inst.rule, inst.principal);
    if (n == 0) throw std::logic_error("bounded witness below the proven bound");
    for (const auto& inst : insts) {
      if (is_axiom(inst.rule)) continue;
      bool all = true;
      for (const auto& p : inst.premisses) all = all && within(p, n - 1);
      if (!all) continue;
      std::vector<Derivation> kids;
      for (const auto& p : inst.premisses) kids.push_back(bounded_witness(p, n - 1));
      return make_derivation(s, inst.rule, inst.principal, std::move(kids));
    }
    throw std::logic_error("bounded witness below the proven bound");
  }

  std::size_t height_cap(const Sequent& s) const {
    // Every G3SDM/G3DM rule lowers the search weight by at least one.
    if (calculus == Calculus::sdm) return sdm_search_weight(s);
    if (calculus == Calculus::dm) return dm_weight(s);
    return kNone;
  }
};

Prover::Prover(Calculus calculus, std::size_t memo_limit)
    : impl_(std::make_unique<Impl>(calculus, memo_limit)) {}
Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

Calculus Prover::calculus() const { return impl_->calculus; }

bool Prover::derivable(const Sequent& goal) {
  impl_->check_tag(goal);
  Sequent c = goal.canonical();
  return impl_->weighted() ? impl_->decide(c) : impl_->ip_decide(c);
}

std::optional<Derivation> Prover::derive(const Sequent& goal) {
  impl_->check_tag(goal);
  Sequent c = goal.canonical();
  if (impl_->weighted()) {
    if (!impl_->decide(c)) return std::nullopt;
    return impl_->witness(c);
  }
  Sequent set = as_set(c);
  if (!impl_->ip_prove(set, 0).ok) return std::nullopt;
  return weaken(impl_->ip_success.at(set), surplus(c));
}

bool Prover::derivable_within_height(const Sequent& goal, std::size_t n) {
  impl_->check_tag(goal);
  return impl_->within(goal.canonical(), n);
}

std::optional<std::size_t> Prover::min_height(const Sequent& goal) {
  impl_->check_tag(goal);
  Sequent c = goal.canonical();
  if (!derivable(c)) return std::nullopt;
  for (std::size_t n = 0;; ++n) {
    if (impl_->within(c, n)) return n;
    if (n > impl_->height_cap(c))
      throw std::logic_error("height search passed the weight bound");
  }
}

std::optional<Derivation> Prover::derive_min_height(const Sequent& goal) {
  auto h = min_height(goal);
  if (!h) return std::nullopt;
  return impl_->bounded_witness(goal.canonical(), *h);
}

void Prover::set_observer(Observer obs) { impl_->observer = std::move(obs); }
const SearchStats& Prover::stats() const { return impl_->stats; }

void Prover::clear() {
  impl_->verdicts.clear();
  impl_->bounds.clear();
  impl_->ip_success.clear();
  impl_->ip_failure.clear();
}

namespace {

struct Shared {
  std::mutex mu;
  Prover prover;
  explicit Shared(Calculus c) : prover(c) {}
};

Shared& shared(Calculus c) {
  static std::array<Shared, 4> all{Shared(Calculus::sdm), Shared(Calculus::dm),
                                   Shared(Calculus::intuitionistic), Shared(Calculus::classical)};
  return all[static_cast<std::size_t>(c)];
}

}  // namespace

bool derivable(Calculus calculus, const Sequent& goal) {
  auto& s = shared(calculus);
  std::lock_guard lock(s.mu);
  return s.prover.derivable(goal);
}

std::optional<Derivation> derive(Calculus calculus, const Sequent& goal) {
  auto& s = shared(calculus);
  std::lock_guard lock(s.mu);
  return s.prover.derive(goal);
}

bool derivable_within_height(Calculus calculus, const Sequent& goal, std::size_t n) {
  auto& s = shared(calculus);
  std::lock_guard lock(s.mu);
  return s.prover.derivable_within_height(goal, n);
}

std::optional<std::size_t> min_height(Calculus calculus, const Sequent& goal) {
  auto& s = shared(calculus);
  std::lock_guard lock(s.mu);
  return s.prover.min_height(goal);
}

}  // namespace morgan
