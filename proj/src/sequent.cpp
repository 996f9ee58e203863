#include "morgan/sequent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace morgan {

std::string_view calculus_name(Calculus c) {
  switch (c) {
    case Calculus::sdm: return "SDM";
    case Calculus::dm: return "DM";
    case Calculus::intuitionistic: return "INT";
    case Calculus::classical: return "CL";
  }
  return "?";
}

Calculus calculus_from_name(std::string_view s) {
  if (s == "SDM" || s == "sdm" || s == "g3sdm") return Calculus::sdm;
  if (s == "DM" || s == "dm" || s == "g3dm") return Calculus::dm;
  if (s == "INT" || s == "int" || s == "g3ip") return Calculus::intuitionistic;
  if (s == "CL" || s == "cl" || s == "g3cp") return Calculus::classical;
  throw std::invalid_argument("unknown calculus '" + std::string(s) + "'");
}

int compare(const Structure& a, const Structure& b) {
  if (a.starred != b.starred) return a.starred ? 1 : -1;
  return compare(a.term, b.term);
}

namespace {

bool has_op(const Term& t, Op op) {
  if (t.op() == op) return true;
  switch (t.op()) {
    case Op::var:
    case Op::bottom: return false;
    case Op::neg: return has_op(t.arg(), op);
    default: return has_op(t.left(), op) || has_op(t.right(), op);
  }
}

void check_structure(Calculus c, const Structure& s) {
  bool algebraic = c == Calculus::sdm || c == Calculus::dm;
  if (s.starred && c != Calculus::sdm)
    throw std::invalid_argument("starred structures only occur in SDM sequents");
  if (algebraic && has_op(s.term, Op::imp))
    throw std::invalid_argument("implication is not part of the SDM/DM language");
  if (!algebraic && has_op(s.term, Op::neg))
    throw std::invalid_argument("INT/CL terms write negation as implication into F");
}

std::vector<Structure> plain_all(std::vector<Term> ts) {
  std::vector<Structure> out;
  out.reserve(ts.size());
  for (auto& t : ts) out.push_back(Structure::plain(t));
  return out;
}

}  // namespace

Sequent::Sequent(Calculus calculus, std::vector<Structure> antecedent, Structure succedent)
    : calculus_(calculus), antecedent_(std::move(antecedent)), succedent_(succedent) {
  for (const auto& s : antecedent_) check_structure(calculus_, s);
  check_structure(calculus_, succedent_);
}

Sequent::Sequent(Calculus calculus, std::vector<Term> antecedent, Term succedent)
    : Sequent(calculus, plain_all(std::move(antecedent)), Structure::plain(succedent)) {}

Sequent Sequent::canonical() const {
  Sequent out = *this;
  std::sort(out.antecedent_.begin(), out.antecedent_.end(), StructureLess{});
  return out;
}

bool Sequent::is_canonical() const {
  return std::is_sorted(antecedent_.begin(), antecedent_.end(), StructureLess{});
}

bool same_multiset(std::span<const Structure> a, std::span<const Structure> b) {
  if (a.size() != b.size()) return false;
  std::vector<Structure> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end(), StructureLess{});
  std::sort(y.begin(), y.end(), StructureLess{});
  return x == y;
}

bool Sequent::operator==(const Sequent& o) const {
  return calculus_ == o.calculus_ && succedent_ == o.succedent_ &&
         same_multiset(antecedent_, o.antecedent_);
}

std::size_t SequentKeyHash::operator()(const Sequent& s) const noexcept {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(s.calculus());
  h = mix(h, (std::size_t{s.succedent().term.id()} << 1) | s.succedent().starred);
  for (const auto& a : s.antecedent()) h = mix(h, (std::size_t{a.term.id()} << 1) | a.starred);
  return h;
}

bool SequentKeyEq::operator()(const Sequent& a, const Sequent& b) const noexcept {
  return a.calculus() == b.calculus() && a.succedent() == b.succedent() &&
         a.antecedent() == b.antecedent();
}

VarSet vars(const Structure& s) { return vars(s.term); }

VarSet vars(std::span<const Structure> ss) {
  VarSet out;
  for (const auto& s : ss) collect_vars(s.term, out);
  return out;
}

VarSet vars(const Sequent& s) {
  VarSet out = vars(std::span<const Structure>(s.antecedent()));
  collect_vars(s.succedent().term, out);
  return out;
}

std::size_t complexity(const Structure& s) { return s.term.complexity() + (s.starred ? 1 : 0); }

namespace {

std::uint64_t weigh(const Term& t, std::uint64_t neg, std::uint64_t disj, std::uint64_t conj) {
  switch (t.op()) {
    case Op::var:
    case Op::bottom: return 1;
    case Op::neg: return weigh(t.arg(), neg, disj, conj) + neg;
    case Op::disj: return weigh(t.left(), neg, disj, conj) + weigh(t.right(), neg, disj, conj) + disj;
    case Op::conj: return weigh(t.left(), neg, disj, conj) + weigh(t.right(), neg, disj, conj) + conj;
    case Op::imp: break;
  }
  throw std::invalid_argument("weights are defined on SDM/DM terms only");
}

}  // namespace

std::uint64_t sdm_weight(const Term& t) { return weigh(t, 2, 2, 3); }
std::uint64_t sdm_weight(const Structure& s) { return sdm_weight(s.term) + (s.starred ? 1 : 0); }
std::uint64_t sdm_weight(std::span<const Structure> ss) {
  std::uint64_t w = 0;
  for (const auto& s : ss) w += sdm_weight(s);
  return w;
}
std::uint64_t sdm_weight(const Sequent& s) {
  return sdm_weight(std::span<const Structure>(s.antecedent())) + sdm_weight(s.succedent());
}

std::uint64_t sdm_search_weight(const Term& t) { return weigh(t, 2, 2, 4); }
std::uint64_t sdm_search_weight(const Structure& s) {
  return sdm_search_weight(s.term) + (s.starred ? 1 : 0);
}
std::uint64_t sdm_search_weight(const Sequent& s) {
  std::uint64_t w = sdm_search_weight(s.succedent());
  for (const auto& a : s.antecedent()) w += sdm_search_weight(a);
  return w;
}

std::uint64_t dm_weight(const Term& t) { return weigh(t, 1, 2, 2); }
std::uint64_t dm_weight(std::span<const Structure> ss) {
  std::uint64_t w = 0;
  for (const auto& s : ss) w += dm_weight(s.term);
  return w;
}
std::uint64_t dm_weight(const Sequent& s) {
  return dm_weight(std::span<const Structure>(s.antecedent())) + dm_weight(s.succedent().term);
}

}  // namespace morgan
