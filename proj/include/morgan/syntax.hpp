#ifndef MORGAN_SYNTAX_HPP
#define MORGAN_SYNTAX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morgan/sequent.hpp"

namespace morgan {

/// Which term language a parser accepts.
///  - algebraic: `~ & | F T`, base variables only (SDM/DM input).
///  - implicational: `-> & | F T`, `~x` meaning `x -> F`, and the translation
///    namespaces `p'`, `p''`, `#k0` (INT/CL input).
enum class Language { algebraic, implicational };

Language language_of(Calculus c);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Reserved-namespace variable in algebraic input.
class NamespaceError : public ParseError {
 public:
  using ParseError::ParseError;
};

Term parse_term(std::string_view input, Language lang = Language::algebraic);
Structure parse_structure(std::string_view input, Language lang = Language::algebraic);
Sequent parse_sequent(std::string_view input, Calculus calculus);

/// `Γ₁ ; Γ₂ => β`: a sequent whose antecedent is split in two by `;`.
struct SplitSequent {
  std::vector<Structure> left;
  std::vector<Structure> right;
  Structure succedent;
};
SplitSequent parse_split_sequent(std::string_view input, Calculus calculus);

/// Minimal parentheses under ~ > & > | > ->, binary operators left-associative.
std::string print_term(const Term& t);
std::string print_structure(const Structure& s);
std::string print_structures(const std::vector<Structure>& ss);
std::string print_sequent(const Sequent& s);

std::string print_var_name(const Term& v);

}  // namespace morgan

#endif  // MORGAN_SYNTAX_HPP
