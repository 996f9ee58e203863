#include "morgan/render.hpp"

#include <stdexcept>

#include "morgan/syntax.hpp"

namespace morgan {

ProofFormat proof_format_from_name(std::string_view name) {
  if (name == "ascii") return ProofFormat::ascii;
  if (name == "latex") return ProofFormat::latex;
  if (name == "json") return ProofFormat::json;
  throw std::invalid_argument("unknown proof format '" + std::string(name) + "'");
}

std::string render(const Derivation& d, ProofFormat format) {
  if (auto r = check_derivation(d->sequent.calculus(), d); !r)
    throw std::invalid_argument("refusing to render an unchecked derivation: " + r.diagnostic);
  switch (format) {
    case ProofFormat::ascii: return render_ascii(d);
    case ProofFormat::latex: return render_latex(d);
    case ProofFormat::json: return proof_to_json(d).dump(2) + "\n";
  }
  return {};
}

namespace {

void ascii_into(const Derivation& d, std::size_t depth, std::string& out) {
  for (const auto& c : d->children) ascii_into(c, depth + 1, out);
  out.append(2 * depth, ' ');
  out += print_sequent(d->sequent);
  out += "   [";
  out += rule_label(d->rule);
  out += "]\n";
}

int prec(const Term& t) {
  switch (t.op()) {
    case Op::imp: return 1;
    case Op::disj: return 2;
    case Op::conj: return 3;
    case Op::neg: return 4;
    default: return 5;
  }
}

void latex_into(const Term& t, std::string& out) {
  auto child = [&out](const Term& c, bool paren) {
    if (paren) out += '(';
    latex_into(c, out);
    if (paren) out += ')';
  };
  switch (t.op()) {
    case Op::var:
      switch (t.ns()) {
        case Namespace::base: out += t.name(); break;
        case Namespace::primed: out += t.name() + "'"; break;
        case Namespace::doubled: out += t.name() + "''"; break;
        case Namespace::class_indexed: out += "p_{\\xi_{" + t.name().substr(1) + "}}"; break;
      }
      return;
    case Op::bottom: out += "\\bot"; return;
    case Op::neg:
      out += "\\neg ";
      child(t.arg(), prec(t.arg()) < 4);
      return;
    default: break;
  }
  int p = prec(t);
  const char* sym = t.op() == Op::conj ? " \\wedge " : t.op() == Op::disj ? " \\vee " : " \\supset ";
  child(t.left(), prec(t.left()) < p);
  out += sym;
  child(t.right(), prec(t.right()) <= p);
}

std::string latex_structure(const Structure& s) {
  if (!s.starred) return latex_term(s.term);
  bool paren = prec(s.term) < 4;
  return std::string("{*}") + (paren ? "(" : "") + latex_term(s.term) + (paren ? ")" : "");
}

void bussproofs_into(const Derivation& d, std::string& out) {
  for (const auto& c : d->children) bussproofs_into(c, out);
  if (d->children.empty()) out += "\\AxiomC{}\n";
  out += "\\RightLabel{\\scriptsize $";
  out += rule_latex(d->rule);
  out += "$}\n";
  out += d->children.size() == 2 ? "\\BinaryInfC{$" : "\\UnaryInfC{$";
  out += latex_sequent(d->sequent);
  out += "$}\n";
}

std::optional<std::size_t> opt_index(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

json node_json(const Derivation& d) {
  json kids = json::array();
  for (const auto& c : d->children) kids.push_back(node_json(c));
  return json{{"sequent", to_json(d->sequent)},
              {"rule", rule_label(d->rule)},
              {"principal", d->principal ? json(*d->principal) : json(nullptr)},
              {"height", d->height},
              {"children", std::move(kids)}};
}

Derivation node_from_json(const json& j) {
  Sequent s = sequent_from_json(j.at("sequent"));
  Rule r = rule_from_label(s.calculus(), j.at("rule").get<std::string>());
  std::vector<Derivation> kids;
  for (const auto& c : j.at("children")) kids.push_back(node_from_json(c));
  return make_raw_derivation(std::move(s), r, opt_index(j.at("principal")), std::move(kids),
                             j.at("height").get<std::size_t>());
}

}  // namespace

std::string render_ascii(const Derivation& d) {
  std::string out;
  ascii_into(d, 0, out);
  return out;
}

std::string latex_term(const Term& t) {
  std::string out;
  latex_into(t, out);
  return out;
}

std::string latex_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent().size(); ++i) {
    if (i) out += ", ";
    out += latex_structure(s.antecedent()[i]);
  }
  out += out.empty() ? "\\Rightarrow " : " \\Rightarrow ";
  out += latex_structure(s.succedent());
  return out;
}

std::string render_latex(const Derivation& d) {
  std::string out = "\\begin{prooftree}\n";
  bussproofs_into(d, out);
  out += "\\end{prooftree}\n";
  return out;
}

json proof_to_json(const Derivation& d) {
  return json{{"schema", kProofSchema},
              {"calculus", calculus_name(d->sequent.calculus())},
              {"root", node_json(d)}};
}

Derivation proof_from_json(const json& j) {
  if (j.contains("schema")) {
    if (j.at("schema") != kProofSchema)
      throw std::invalid_argument("unsupported proof schema " + j.at("schema").dump());
    return node_from_json(j.at("root"));
  }
  return node_from_json(j);
}

bool same_derivation(const Derivation& a, const Derivation& b) {
  if (a->rule != b->rule || a->principal != b->principal || a->height != b->height) return false;
  const Sequent& x = a->sequent;
  const Sequent& y = b->sequent;
  if (x.calculus() != y.calculus() || x.succedent() != y.succedent() ||
      x.antecedent() != y.antecedent())
    return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!same_derivation(a->children[i], b->children[i])) return false;
  return true;
}

}  // namespace morgan
