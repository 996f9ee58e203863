#ifndef MORGAN_ALGEBRA_HPP
#define MORGAN_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morgan/json_io.hpp"
#include "morgan/sequent.hpp"

namespace morgan {

enum class Variety { sdm, dm };

Variety variety_from_name(std::string_view name);  // "sdm" | "dm" (any case)
std::string_view variety_name(Variety v);

using Element = std::uint8_t;

/// A finite algebra (A, ∨, ∧, ¬, 0, 1) given by total tables.
class FiniteAlgebra {
 public:
  /// Tables are row-major n×n for join and meet. Throws std::invalid_argument
  /// on non-total or out-of-range tables.
  FiniteAlgebra(std::size_t size, std::vector<Element> join, std::vector<Element> meet,
                std::vector<Element> neg, Element zero, Element one,
                std::vector<std::string> names = {});

  /// Builds join and meet from a partial order given as a predicate matrix
  /// (leq[a*n+b] means a ≤ b). Throws when some pair lacks a join or meet.
  static FiniteAlgebra from_order(std::size_t size, const std::vector<bool>& leq,
                                  std::vector<Element> neg, std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<Element>& neg_table() const { return neg_; }

  json to_json() const;  // schema morgan-kit/algebra/v1
  static FiniteAlgebra from_json(const json& j);

 private:
  std::size_t n_;
  std::vector<Element> join_, meet_, neg_;
  Element zero_, one_;
  std::vector<std::string> names_;
};

inline constexpr const char* kAlgebraSchema = "morgan-kit/algebra/v1";

/// The first identity that fails, or nothing when `alg` is a bounded
/// distributive lattice whose negation satisfies the variety's identities.
std::optional<std::string> variety_violation(const FiniteAlgebra& alg, Variety v);
bool check_variety(const FiniteAlgebra& alg, Variety v);

/// The four-element De Morgan algebra: 0 < a, b < 1, ¬a = a, ¬b = b.
/// Element ids: 0 = 0, 1 = a, 2 = b, 3 = 1.
FiniteAlgebra dm4();

using Assignment = std::map<Term, Element, TermLess>;

/// Homomorphic value of φ; throws std::invalid_argument on an unassigned
/// variable or an implication.
Element evaluate(const Term& phi, const Assignment& sigma, const FiniteAlgebra& alg);

/// An assignment with t(Γ)^σ ≰ t(α)^σ, if one exists.
std::optional<Assignment> counter_assignment(const Sequent& s, const FiniteAlgebra& alg);
/// Validity: t(Γ)^σ ≤ t(α)^σ under every assignment (⋀Σ for DM sequents).
bool valid(const Sequent& s, const FiniteAlgebra& alg);

/// Every algebra of the variety with 2..max_size elements (max_size ≤ 6),
/// one per isomorphism class, ordered by size. Results are cached.
const std::vector<FiniteAlgebra>& enumerate_algebras(Variety v, std::size_t max_size);

struct CounterWitness {
  FiniteAlgebra algebra;
  Assignment assignment;
};

/// First (algebra, assignment) among enumerate_algebras(v, max_size) that
/// invalidates s. Sound but not complete for SDM.
std::optional<CounterWitness> refute(const Sequent& s, Variety v, std::size_t max_size);

json to_json(const Assignment& sigma, const FiniteAlgebra& alg);

}  // namespace morgan

#endif  // MORGAN_ALGEBRA_HPP
