#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "linkcat/error.hpp"
#include "linkcat/families.hpp"
#include "linkcat/linking.hpp"
#include "linkcat/mll.hpp"

namespace linkcat::io {

/// Well-formed JSON that does not describe a valid value. `pointer` is the
/// JSON pointer of the offending element, e.g. "/links/2/left/0".
class FormatError : public Error {
 public:
  FormatError(std::string pointer, const std::string& message)
      : Error(pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// {"left": n | [labels], "right": n | [labels],
///  "links": [{"left": [i, ...], "right": [j, ...]}, ...], "loops": k}
nlohmann::json to_json(const Linking& l);
/// Also accepts (and ignores) the "newLoops" member emitted by compose.
Linking linking_from_json(const nlohmann::json& j);

/// {"source": "<formula>", "target": "<formula>", "axioms": [[i, j], ...]}
/// with leaf indices on source -o target.
nlohmann::json to_json(const mll::ProofNet& net);
mll::ProofNet net_from_json(const nlohmann::json& j,
                            mll::NetCheck check = mll::NetCheck::Correctness);

/// {"elements": [...], "table": [[i, j, k, lambda], ...]}; the table member
/// is present only when `table` is non-null.
nlohmann::json enumeration_to_json(const std::vector<Linking>& elements,
                                   const std::vector<TableEntry>* table);

/// Throws ParseError carrying the byte offset of a syntax error.
nlohmann::json parse_json(std::string_view text);

/// Parses "0-3,1-2" into leaf pairs. Throws ParseError.
std::vector<mll::Axiom> parse_axiom_list(std::string_view text);

/// Two-space indented, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace linkcat::io
