#include "morgan/json_io.hpp"

#include <stdexcept>
#include <string>

namespace morgan {

namespace {

const char* ns_name(Namespace ns) {
  switch (ns) {
    case Namespace::base: return "base";
    case Namespace::primed: return "primed";
    case Namespace::doubled: return "doubled";
    case Namespace::class_indexed: return "class";
  }
  return "base";
}

Namespace ns_from(const std::string& s) {
  if (s == "base") return Namespace::base;
  if (s == "primed") return Namespace::primed;
  if (s == "doubled") return Namespace::doubled;
  if (s == "class") return Namespace::class_indexed;
  throw std::invalid_argument("unknown namespace '" + s + "'");
}

}  // namespace

json to_json(const Term& t) {
  switch (t.op()) {
    case Op::var: return {{"tag", "var"}, {"name", t.name()}, {"ns", ns_name(t.ns())}};
    case Op::bottom: return {{"tag", "bot"}};
    case Op::neg: return {{"tag", "neg"}, {"arg", to_json(t.arg())}};
    case Op::conj: return {{"tag", "and"}, {"left", to_json(t.left())}, {"right", to_json(t.right())}};
    case Op::disj: return {{"tag", "or"}, {"left", to_json(t.left())}, {"right", to_json(t.right())}};
    case Op::imp: return {{"tag", "imp"}, {"left", to_json(t.left())}, {"right", to_json(t.right())}};
  }
  return nullptr;
}

json to_json(const Structure& s) { return {{"star", s.starred}, {"term", to_json(s.term)}}; }

json to_json(const Sequent& s) {
  json ant = json::array();
  for (const auto& a : s.antecedent()) ant.push_back(to_json(a));
  return {{"calculus", std::string(calculus_name(s.calculus()))},
          {"antecedent", std::move(ant)},
          {"succedent", to_json(s.succedent())}};
}

Term term_from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "var") return Term::var(j.at("name").get<std::string>(), ns_from(j.value("ns", "base")));
  if (tag == "bot") return Term::bottom();
  if (tag == "neg") return Term::neg(term_from_json(j.at("arg")));
  if (tag == "and") return Term::conj(term_from_json(j.at("left")), term_from_json(j.at("right")));
  if (tag == "or") return Term::disj(term_from_json(j.at("left")), term_from_json(j.at("right")));
  if (tag == "imp") return Term::imp(term_from_json(j.at("left")), term_from_json(j.at("right")));
  throw std::invalid_argument("unknown term tag '" + tag + "'");
}

Structure structure_from_json(const json& j) {
  return Structure{term_from_json(j.at("term")), j.value("star", false)};
}

Sequent sequent_from_json(const json& j) {
  std::vector<Structure> ant;
  for (const auto& a : j.at("antecedent")) ant.push_back(structure_from_json(a));
  return Sequent(calculus_from_name(j.at("calculus").get<std::string>()), std::move(ant),
                 structure_from_json(j.at("succedent")));
}

json sequent_document(const Sequent& s) {
  json doc = to_json(s);
  doc["schema"] = kAstSchema;
  return doc;
}

}  // namespace morgan
