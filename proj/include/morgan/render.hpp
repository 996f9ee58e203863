#ifndef MORGAN_RENDER_HPP
#define MORGAN_RENDER_HPP

#include <string>
#include <string_view>

#include "morgan/derivation.hpp"
#include "morgan/json_io.hpp"

namespace morgan {

enum class ProofFormat { ascii, latex, json };

ProofFormat proof_format_from_name(std::string_view name);  // "ascii" | "latex" | "json"

inline constexpr const char* kProofSchema = "morgan-kit/proof/v1";

/// Renders a derivation after replaying it with check_derivation; throws
/// std::invalid_argument when the check fails.
std::string render(const Derivation& d, ProofFormat format);

// Unchecked renderers.
std::string render_ascii(const Derivation& d);
std::string render_latex(const Derivation& d);
json proof_to_json(const Derivation& d);

/// Parses a `morgan-kit/proof/v1` document (or a bare node object).
Derivation proof_from_json(const json& j);

/// True iff two derivations have identical sequents, rules, principals,
/// heights and shape.
bool same_derivation(const Derivation& a, const Derivation& b);

std::string latex_term(const Term& t);
std::string latex_sequent(const Sequent& s);

}  // namespace morgan

#endif  // MORGAN_RENDER_HPP
