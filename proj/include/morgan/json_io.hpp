#ifndef MORGAN_JSON_IO_HPP
#define MORGAN_JSON_IO_HPP

#include <json.hpp>

#include "morgan/sequent.hpp"

namespace morgan {

using json = nlohmann::json;

inline constexpr const char* kAstSchema = "morgan-kit/ast/v1";

// Tagged-union encoding:
//   {"tag":"var","name":"p","ns":"base"}  {"tag":"bot"}
//   {"tag":"neg","arg":T}  {"tag":"and"|"or"|"imp","left":T,"right":T}
json to_json(const Term& t);
json to_json(const Structure& s);   // {"star":bool,"term":T}
json to_json(const Sequent& s);     // {"calculus":"SDM","antecedent":[...],"succedent":S}

Term term_from_json(const json& j);
Structure structure_from_json(const json& j);
Sequent sequent_from_json(const json& j);

/// Sequent wrapped with the schema tag.
json sequent_document(const Sequent& s);

}  // namespace morgan

#endif  // MORGAN_JSON_IO_HPP
