#include "morgan/translations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "morgan/prover.hpp"
#include "morgan/syntax.hpp"

namespace morgan {

// ---- t ------------------------------------------------------------------

Term flatten(const Structure& s) { return s.starred ? Term::neg(s.term) : s.term; }

Term flatten(std::span<const Structure> gamma) {
  std::vector<Structure> sorted(gamma.begin(), gamma.end());
  std::sort(sorted.begin(), sorted.end(), StructureLess{});
  std::vector<Term> ts;
  ts.reserve(sorted.size());
  for (const auto& s : sorted) ts.push_back(flatten(s));
  return conjoin(ts);
}

Term conjoin(std::span<const Term> ts) {
  if (ts.empty()) return Term::top();
  Term acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = Term::conj(acc, ts[i]);
  return acc;
}

Term disjoin(std::span<const Term> ts) {
  if (ts.empty()) return Term::bottom();
  Term acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = Term::disj(acc, ts[i]);
  return acc;
}

// ---- f, ¬¬ ----------------------------------------------------------------

namespace {

void require_base(const Term& v, const char* who) {
  if (v.ns() != Namespace::base)
    throw std::invalid_argument(std::string(who) + " expects base-language variables, got " +
                                print_var_name(v));
}

void require_plain(std::span<const Structure> ss, const char* who) {
  for (const auto& s : ss)
    if (s.starred) throw std::invalid_argument(std::string(who) + ": starred structure");
}

}  // namespace

Term f_godel_gentzen(const Term& phi) {
  switch (phi.op()) {
    case Op::var: return Term::neg(Term::neg(phi));
    case Op::bottom: return phi;
    case Op::neg: return Term::neg(f_godel_gentzen(phi.arg()));
    case Op::conj: return Term::conj(f_godel_gentzen(phi.left()), f_godel_gentzen(phi.right()));
    case Op::disj:
      return Term::neg(Term::neg(Term::disj(f_godel_gentzen(phi.left()), f_godel_gentzen(phi.right()))));
    case Op::imp: break;
  }
  throw std::invalid_argument("f is defined on SDM/DM terms");
}

std::vector<Term> f_antecedent(std::span<const Structure> sigma) {
  require_plain(sigma, "f");
  if (sigma.empty()) return {};
  std::vector<Structure> sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end(), StructureLess{});
  std::vector<Term> images;
  for (const auto& s : sorted) images.push_back(f_godel_gentzen(s.term));
  return {conjoin(images)};
}

Sequent f_sequent(const Sequent& dm) {
  if (dm.calculus() != Calculus::dm) throw std::invalid_argument("f_sequent expects a DM sequent");
  return Sequent(Calculus::sdm, f_antecedent(dm.antecedent()), f_godel_gentzen(dm.succedent().term));
}

Term double_negate(const Term& t) { return Term::neg(Term::neg(t)); }

std::vector<Structure> double_negate(std::span<const Structure> sigma) {
  require_plain(sigma, "double_negate");
  std::vector<Structure> out;
  for (const auto& s : sigma) out.push_back(Structure::plain(double_negate(s.term)));
  return out;
}

// ---- k ----------------------------------------------------------------------

bool ClassRegistry::equivalent(const Term& a, const Term& b) {
  if (a == b) return true;
  auto key = std::minmax(a.id(), b.id());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  ++checks_;
  bool eq = derivable(Calculus::sdm, Sequent(Calculus::sdm, std::vector<Term>{a}, b)) &&
            derivable(Calculus::sdm, Sequent(Calculus::sdm, std::vector<Term>{b}, a));
  cache_.emplace(key, eq);
  return eq;
}

std::optional<Term> ClassRegistry::find(const Term& phi) {
  for (const auto& e : entries_)
    if (equivalent(phi, e.representative)) return e.variable;
  return std::nullopt;
}

Term ClassRegistry::class_of(const Term& phi) {
  if (auto v = find(phi)) return *v;
  Term v = Term::var("k" + std::to_string(entries_.size()), Namespace::class_indexed);
  entries_.push_back({phi, v});
  return v;
}

json ClassRegistry::to_json() const {
  json classes = json::array();
  for (const auto& e : entries_)
    classes.push_back({{"var", print_var_name(e.variable)},
                       {"rep", morgan::to_json(e.representative)},
                       {"text", print_term(e.representative)}});
  return {{"schema", "morgan-kit/registry/v1"}, {"classes", std::move(classes)}};
}

ClassRegistry ClassRegistry::from_json(const json& j) {
  ClassRegistry reg;
  for (const auto& c : j.at("classes")) {
    std::string name = c.at("var").get<std::string>();
    if (name.empty() || name[0] != '#') throw std::invalid_argument("bad class variable " + name);
    reg.entries_.push_back({term_from_json(c.at("rep")),
                            Term::var(name.substr(1), Namespace::class_indexed)});
  }
  return reg;
}

namespace {

std::size_t neg_count(const Term& t) {
  switch (t.op()) {
    case Op::var:
    case Op::bottom: return 0;
    case Op::neg: return 1 + neg_count(t.arg());
    default: return neg_count(t.left()) + neg_count(t.right());
  }
}

class KTranslator {
 public:
  explicit KTranslator(ClassRegistry& reg) : reg_(reg) {}

  Term operator()(const Term& phi) {
    switch (phi.op()) {
      case Op::var: require_base(phi, "k"); return phi;
      case Op::bottom: return phi;
      case Op::conj: return Term::conj(call(phi, phi.left()), call(phi, phi.right()));
      case Op::disj: return Term::disj(call(phi, phi.left()), call(phi, phi.right()));
      case Op::neg: return negation(phi);
      case Op::imp: break;
    }
    throw std::invalid_argument("k is defined on SDM terms");
  }

 private:
  // Recursive call with the (¬-count, size) decrease asserted.
  Term call(const Term& from, const Term& to) {
    auto m = [](const Term& t) { return std::pair{neg_count(t), t.size()}; };
    if (!(m(to) < m(from)))
      throw std::logic_error("k recursion failed to decrease: " + print_term(from) + " -> " +
                             print_term(to));
    return (*this)(to);
  }

  Term negation(const Term& phi) {
    const Term a = phi.arg();
    switch (a.op()) {
      case Op::var: require_base(a, "k"); return Term::var(a.name(), Namespace::primed);
      case Op::bottom: return Term::imp_top();
      case Op::disj:
        return Term::conj(call(phi, Term::neg(a.left())), call(phi, Term::neg(a.right())));
      case Op::conj:
        if (a.left().is_neg() && a.right().is_neg())
          return call(phi, double_negate(Term::disj(a.left().arg(), a.right().arg())));
        return reg_.class_of(phi);
      case Op::neg: return double_negation(phi);
      case Op::imp: break;
    }
    throw std::invalid_argument("k is defined on SDM terms");
  }

  Term double_negation(const Term& phi) {
    const Term b = phi.arg().arg();
    switch (b.op()) {
      case Op::var: require_base(b, "k"); return Term::var(b.name(), Namespace::doubled);
      case Op::bottom: return Term::bottom();
      case Op::conj:
        return Term::conj(call(phi, double_negate(b.left())), call(phi, double_negate(b.right())));
      case Op::neg: return call(phi, Term::neg(b.arg()));
      case Op::disj:
        if (b.left().is_neg() && b.right().is_neg())
          return call(phi, Term::neg(Term::conj(b.left().arg(), b.right().arg())));
        return reg_.class_of(phi);
      case Op::imp: break;
    }
    throw std::invalid_argument("k is defined on SDM terms");
  }

  ClassRegistry& reg_;
};

}  // namespace

Term k_to_int(const Term& phi, ClassRegistry& reg) { return KTranslator(reg)(phi); }

Term k_to_int(const Structure& s, ClassRegistry& reg) {
  return k_to_int(s.starred ? Term::neg(s.term) : s.term, reg);
}

Sequent k_sequent(const Sequent& sdm, ClassRegistry& reg) {
  if (sdm.calculus() != Calculus::sdm) throw std::invalid_argument("k_sequent expects an SDM sequent");
  if (sdm.succedent().starred)
    throw std::invalid_argument("k is applied to SDM sequents with a term succedent");
  std::vector<Term> ant;
  for (const auto& s : sdm.antecedent()) ant.push_back(k_to_int(s, reg));
  Term succ = k_to_int(sdm.succedent().term, reg);
  return Sequent(Calculus::intuitionistic, std::move(ant), succ);
}

// ---- h, g -------------------------------------------------------------------

Term h_to_cl(const Term& phi) {
  switch (phi.op()) {
    case Op::var: require_base(phi, "h"); return phi;
    case Op::bottom: return phi;
    case Op::conj: return Term::conj(h_to_cl(phi.left()), h_to_cl(phi.right()));
    case Op::disj: return Term::disj(h_to_cl(phi.left()), h_to_cl(phi.right()));
    case Op::neg: {
      const Term a = phi.arg();
      switch (a.op()) {
        case Op::var: require_base(a, "h"); return Term::var(a.name(), Namespace::primed);
        case Op::bottom: return Term::imp_top();
        case Op::conj: return Term::disj(h_to_cl(Term::neg(a.left())), h_to_cl(Term::neg(a.right())));
        case Op::disj: return Term::conj(h_to_cl(Term::neg(a.left())), h_to_cl(Term::neg(a.right())));
        case Op::neg: return h_to_cl(a.arg());
        case Op::imp: break;
      }
      break;
    }
    case Op::imp: break;
  }
  throw std::invalid_argument("h is defined on DM terms");
}

Sequent h_sequent(const Sequent& dm) {
  if (dm.calculus() != Calculus::dm) throw std::invalid_argument("h_sequent expects a DM sequent");
  std::vector<Term> ant;
  for (const auto& s : dm.antecedent()) ant.push_back(h_to_cl(s.term));
  return Sequent(Calculus::classical, std::move(ant), h_to_cl(dm.succedent().term));
}

Term g_glivenko(const Term& theta) { return Term::imp_neg(Term::imp_neg(theta)); }

std::vector<Term> g_glivenko(std::span<const Structure> x) {
  std::vector<Term> out;
  for (const auto& s : x) out.push_back(g_glivenko(s.term));
  return out;
}

Sequent g_sequent(const Sequent& cl) {
  if (cl.calculus() != Calculus::classical) throw std::invalid_argument("g_sequent expects a CL sequent");
  return Sequent(Calculus::intuitionistic, g_glivenko(cl.antecedent()), g_glivenko(cl.succedent().term));
}

// ---- embedding checks ----------------------------------------------------------

namespace {

constexpr std::pair<EmbeddingKind, std::string_view> kKindNames[] = {
    {EmbeddingKind::dm_to_sdm_f, "dm-to-sdm-f"},   {EmbeddingKind::dm_glivenko_sdm, "dm-glivenko-sdm"},
    {EmbeddingKind::sdm_to_int_k, "sdm-to-int-k"}, {EmbeddingKind::dm_to_cl_h, "dm-to-cl-h"},
    {EmbeddingKind::cl_to_int_g, "cl-to-int-g"},   {EmbeddingKind::diagram, "diagram"},
};

}  // namespace

std::string_view embedding_kind_name(EmbeddingKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

EmbeddingKind embedding_kind_from_name(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (n == name) return kind;
  throw std::invalid_argument("unknown embedding kind '" + std::string(name) + "'");
}

Calculus embedding_source(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::sdm_to_int_k: return Calculus::sdm;
    case EmbeddingKind::cl_to_int_g: return Calculus::classical;
    default: return Calculus::dm;
  }
}

EmbeddingReport check_embedding(EmbeddingKind kind, std::span<const Sequent> corpus,
                                ClassRegistry* registry) {
  ClassRegistry local;
  ClassRegistry& reg = registry ? *registry : local;
  EmbeddingReport report;
  report.kind = kind;
  if (kind == EmbeddingKind::dm_glivenko_sdm) report.variant_agreements = 0;
  const Calculus source = embedding_source(kind);

  for (const auto& s : corpus) {
    if (s.calculus() != source)
      throw std::invalid_argument(std::string(embedding_kind_name(kind)) + " reads " +
                                  std::string(calculus_name(source)) + " sequents, got " +
                                  print_sequent(s));
    EmbeddingCase c{s, {}, false, false};
    switch (kind) {
      case EmbeddingKind::dm_to_sdm_f:
        c.source_derivable = derivable(Calculus::dm, s);
        c.targets = {f_sequent(s)};
        c.target_derivable = derivable(Calculus::sdm, c.targets[0]);
        break;
      case EmbeddingKind::dm_glivenko_sdm: {
        c.source_derivable = derivable(Calculus::dm, s);
        auto nn = double_negate(s.antecedent());
        const Term phi = s.succedent().term;
        c.targets = {Sequent(Calculus::sdm, nn, Structure::plain(double_negate(phi))),
                     Sequent(Calculus::sdm, nn, Structure::plain(Term::neg(phi)))};
        c.target_derivable = derivable(Calculus::sdm, c.targets[0]);
        if (derivable(Calculus::sdm, c.targets[1]) == c.source_derivable) ++*report.variant_agreements;
        break;
      }
      case EmbeddingKind::sdm_to_int_k:
        c.source_derivable = derivable(Calculus::sdm, s);
        c.targets = {k_sequent(s, reg)};
        c.target_derivable = derivable(Calculus::intuitionistic, c.targets[0]);
        break;
      case EmbeddingKind::dm_to_cl_h:
        c.source_derivable = derivable(Calculus::dm, s);
        c.targets = {h_sequent(s)};
        c.target_derivable = derivable(Calculus::classical, c.targets[0]);
        break;
      case EmbeddingKind::cl_to_int_g:
        c.source_derivable = derivable(Calculus::classical, s);
        c.targets = {g_sequent(s)};
        c.target_derivable = derivable(Calculus::intuitionistic, c.targets[0]);
        break;
      case EmbeddingKind::diagram: {
        // Compares the two INT routes: g∘h against k∘f.
        Sequent gh = g_sequent(h_sequent(s));
        Sequent kf = k_sequent(f_sequent(s), reg);
        c.targets = {gh, kf};
        c.source_derivable = derivable(Calculus::intuitionistic, gh);
        c.target_derivable = derivable(Calculus::intuitionistic, kf);
        break;
      }
    }
    ++report.total;
    if (c.source_derivable == c.target_derivable) ++report.agreements;
    else report.counterexamples.push_back(std::move(c));
  }
  report.registry_classes = reg.size();
  return report;
}

json EmbeddingReport::to_json() const {
  json ces = json::array();
  for (const auto& c : counterexamples) {
    json targets = json::array();
    for (const auto& t : c.targets) targets.push_back(print_sequent(t));
    ces.push_back({{"source", print_sequent(c.source)},
                   {"targets", std::move(targets)},
                   {"source_derivable", c.source_derivable},
                   {"target_derivable", c.target_derivable}});
  }
  json j{{"kind", embedding_kind_name(kind)},
         {"total", total},
         {"agreements", agreements},
         {"rate", rate()},
         {"counterexamples", std::move(ces)}};
  if (variant_agreements) j["neg_variant_agreements"] = *variant_agreements;
  if (kind == EmbeddingKind::sdm_to_int_k || kind == EmbeddingKind::diagram)
    j["registry_classes"] = registry_classes;
  return j;
}

std::string translate_text(std::string_view text, std::string_view map, ClassRegistry& reg) {
  const bool is_sequent = text.find("=>") != std::string_view::npos;
  if (map == "g") {
    if (is_sequent) return print_sequent(g_sequent(parse_sequent(text, Calculus::classical)));
    return print_term(g_glivenko(parse_term(text, Language::implicational)));
  }
  if (map == "t") {
    if (!is_sequent) return print_term(flatten(parse_structure(text)));
    Sequent s = parse_sequent(text, Calculus::sdm);
    std::vector<Term> ant;
    if (!s.antecedent().empty()) ant.push_back(flatten(std::span<const Structure>(s.antecedent())));
    return print_sequent(Sequent(Calculus::sdm, ant, flatten(s.succedent())));
  }
  if (map == "k") {
    if (is_sequent) return print_sequent(k_sequent(parse_sequent(text, Calculus::sdm), reg));
    return print_term(k_to_int(parse_structure(text), reg));
  }
  if (map == "f" || map == "nn" || map == "h") {
    if (!is_sequent) {
      Term t = parse_term(text);
      return print_term(map == "f" ? f_godel_gentzen(t) : map == "h" ? h_to_cl(t) : double_negate(t));
    }
    Sequent s = parse_sequent(text, Calculus::dm);
    if (map == "f") return print_sequent(f_sequent(s));
    if (map == "h") return print_sequent(h_sequent(s));
    auto ant = double_negate(std::span<const Structure>(s.antecedent()));
    return print_sequent(Sequent(Calculus::sdm, ant, Structure::plain(double_negate(s.succedent().term))));
  }
  throw std::invalid_argument("unknown map '" + std::string(map) + "' (t, f, nn, k, h, g)");
}

}  // namespace morgan
