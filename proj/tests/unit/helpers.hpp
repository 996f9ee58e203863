#ifndef MORGAN_TEST_HELPERS_HPP
#define MORGAN_TEST_HELPERS_HPP

#include "morgan/rules.hpp"
#include "morgan/syntax.hpp"

namespace testing {

inline morgan::Sequent S(const char* text) { return morgan::parse_sequent(text, morgan::Calculus::sdm); }
inline morgan::Sequent D(const char* text) { return morgan::parse_sequent(text, morgan::Calculus::dm); }
inline morgan::Sequent I(const char* text) {
  return morgan::parse_sequent(text, morgan::Calculus::intuitionistic);
}
inline morgan::Sequent C(const char* text) { return morgan::parse_sequent(text, morgan::Calculus::classical); }
inline morgan::Term T(const char* text) { return morgan::parse_term(text); }

// Plain exhaustive backward search over expand(): no memo, no commitment,
// no loop check. Only for the terminating calculi (SDM, DM).
inline bool naive_derivable(const morgan::Sequent& goal) {
  for (const auto& ri : morgan::expand(goal)) {
    bool all = true;
    for (const auto& p : ri.premisses)
      if (!naive_derivable(p)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace testing

#endif
