#include "morgan/syntax.hpp"

#include <cctype>

namespace morgan {

Language language_of(Calculus c) {
  return (c == Calculus::sdm || c == Calculus::dm) ? Language::algebraic : Language::implicational;
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, Language lang) : src_(src), lang_(lang) {}

  Term term() { return implication(); }

  Structure structure() {
    skip();
    if (peek() == '*') {
      ++pos_;
      return Structure::star(term());
    }
    return Structure::plain(term());
  }

  std::vector<Structure> structures_until_arrow(bool allow_split, std::vector<Structure>* first) {
    std::vector<Structure> out;
    skip();
    if (at_arrow()) return out;
    if (allow_split && peek() == ';') {
      ++pos_;
      *first = std::move(out);
      return structures_until_arrow(false, nullptr);
    }
    while (true) {
      out.push_back(structure());
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (allow_split && peek() == ';') {
        ++pos_;
        *first = std::move(out);
        return structures_until_arrow(false, nullptr);
      }
      if (at_arrow()) return out;
      fail("expected ',' or '=>'");
    }
  }

  void arrow() {
    skip();
    if (!at_arrow()) fail("expected '=>'");
    pos_ += 2;
  }

  void finish() {
    skip();
    if (pos_ != src_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool at_arrow() const { return src_.substr(pos_, 2) == "=>"; }
  bool at_imp() const { return src_.substr(pos_, 2) == "->"; }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Term implication() {
    Term lhs = disjunction();
    while (true) {
      skip();
      if (!at_imp()) return lhs;
      if (lang_ == Language::algebraic) fail("'->' is not part of the SDM/DM language");
      pos_ += 2;
      lhs = Term::imp(lhs, disjunction());
    }
  }

  Term disjunction() {
    Term lhs = conjunction();
    while (true) {
      skip();
      if (peek() != '|') return lhs;
      ++pos_;
      lhs = Term::disj(lhs, conjunction());
    }
  }

  Term conjunction() {
    Term lhs = unary();
    while (true) {
      skip();
      if (peek() != '&') return lhs;
      ++pos_;
      lhs = Term::conj(lhs, unary());
    }
  }

  Term unary() {
    skip();
    if (peek() == '~') {
      ++pos_;
      Term t = unary();
      return lang_ == Language::algebraic ? Term::neg(t) : Term::imp_neg(t);
    }
    return atom();
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Term atom() {
    skip();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Term t = term();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (c == '#') {
      ++pos_;
      if (!ident_start(peek())) fail("expected class variable name after '#'");
      std::string name = identifier();
      if (lang_ == Language::algebraic)
        throw NamespaceError("class-indexed variable '#" + name + "' is reserved", start);
      return Term::var(name, Namespace::class_indexed);
    }
    if (!ident_start(c)) {
      if (c == '\0') fail("unexpected end of input");
      fail(std::string("unexpected character '") + c + "'");
    }
    std::string name = identifier();
    if (name == "F") return Term::bottom();
    if (name == "T") return lang_ == Language::algebraic ? Term::top() : Term::imp_top();
    Namespace ns = Namespace::base;
    if (peek() == '\'') {
      ++pos_;
      ns = Namespace::primed;
      if (peek() == '\'') {
        ++pos_;
        ns = Namespace::doubled;
      }
      if (lang_ == Language::algebraic)
        throw NamespaceError("primed variable '" + name + "' is reserved", start);
    }
    return Term::var(name, ns);
  }

  std::string_view src_;
  Language lang_;
  std::size_t pos_ = 0;
};

int precedence(const Term& t) {
  switch (t.op()) {
    case Op::imp: return 1;
    case Op::disj: return 2;
    case Op::conj: return 3;
    case Op::neg: return 4;
    default: return 5;
  }
}

void print_into(const Term& t, std::string& out) {
  auto child = [&out](const Term& c, bool paren) {
    if (paren) out += '(';
    print_into(c, out);
    if (paren) out += ')';
  };
  switch (t.op()) {
    case Op::var: out += print_var_name(t); return;
    case Op::bottom: out += 'F'; return;
    case Op::neg:
      out += '~';
      child(t.arg(), precedence(t.arg()) < 4);
      return;
    default: break;
  }
  int p = precedence(t);
  const char* sym = t.op() == Op::conj ? " & " : t.op() == Op::disj ? " | " : " -> ";
  child(t.left(), precedence(t.left()) < p);
  out += sym;
  child(t.right(), precedence(t.right()) <= p);
}

}  // namespace

Term parse_term(std::string_view input, Language lang) {
  Parser p(input, lang);
  Term t = p.term();
  p.finish();
  return t;
}

Structure parse_structure(std::string_view input, Language lang) {
  Parser p(input, lang);
  Structure s = p.structure();
  p.finish();
  return s;
}

namespace {

void check_stars(const std::vector<Structure>& ss, const Structure& succ, Calculus c, Parser& p) {
  if (c == Calculus::sdm) return;
  for (const auto& s : ss)
    if (s.starred) p.fail("'*' is only allowed in G3SDM sequents");
  if (succ.starred) p.fail("'*' is only allowed in G3SDM sequents");
}

}  // namespace

Sequent parse_sequent(std::string_view input, Calculus calculus) {
  Parser p(input, language_of(calculus));
  auto ant = p.structures_until_arrow(false, nullptr);
  p.arrow();
  Structure succ = p.structure();
  p.finish();
  check_stars(ant, succ, calculus, p);
  return Sequent(calculus, std::move(ant), succ);
}

SplitSequent parse_split_sequent(std::string_view input, Calculus calculus) {
  Parser p(input, language_of(calculus));
  SplitSequent out;
  bool split = false;
  std::vector<Structure> first;
  {
    std::vector<Structure>* slot = &first;
    auto rest = p.structures_until_arrow(true, slot);
    // structures_until_arrow moves the part before ';' into `first`
    // and returns the rest; without ';' everything comes back in `rest`.
    split = input.find(';') != std::string_view::npos;
    if (split) {
      out.left = std::move(first);
      out.right = std::move(rest);
    } else {
      out.left = std::move(rest);
    }
  }
  p.arrow();
  out.succedent = p.structure();
  p.finish();
  std::vector<Structure> all = out.left;
  all.insert(all.end(), out.right.begin(), out.right.end());
  check_stars(all, out.succedent, calculus, p);
  Sequent(calculus, all, out.succedent);  // validates the language
  return out;
}

std::string print_var_name(const Term& v) {
  switch (v.ns()) {
    case Namespace::base: return v.name();
    case Namespace::primed: return v.name() + "'";
    case Namespace::doubled: return v.name() + "''";
    case Namespace::class_indexed: return "#" + v.name();
  }
  return v.name();
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_structure(const Structure& s) {
  if (!s.starred) return print_term(s.term);
  std::string out = "*";
  bool paren = precedence(s.term) < 4;
  if (paren) out += '(';
  out += print_term(s.term);
  if (paren) out += ')';
  return out;
}

std::string print_structures(const std::vector<Structure>& ss) {
  std::string out;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (i) out += ", ";
    out += print_structure(ss[i]);
  }
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out = print_structures(s.antecedent());
  if (!out.empty()) out += ' ';
  out += "=> ";
  out += print_structure(s.succedent());
  return out;
}

}  // namespace morgan
