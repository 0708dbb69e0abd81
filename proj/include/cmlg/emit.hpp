#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cmlg/moves.hpp"
#include "cmlg/potential.hpp"
#include "cmlg/toric.hpp"

namespace cmlg {

// Model document: datum, element table, terms, checks. Ideals are sorted
// element-id lists; term and monomial order is the canonical map order.
nlohmann::json model_json(const MinusculePoset& P, const Superpotential& W, const std::vector<Check>& checks);
// Inverse of the "terms" part of model_json. Throws std::invalid_argument.
Superpotential superpotential_from_json(const MinusculePoset& P, const nlohmann::json& doc);

std::string model_text(const MinusculePoset& P, const Superpotential& W, const std::vector<Check>& checks);
std::string model_latex(const MinusculePoset& P, const Superpotential& W);

// Drawing of the poset as rows of boxes in which the left and upper
// neighbours of every box are exactly its lower covers. rows[r] holds
// (column, element) pairs with consecutive columns.
struct BoxLayout {
    std::vector<std::vector<std::pair<int, int>>> rows;
};
std::optional<BoxLayout> find_box_layout(const MinusculePoset& P);
// Row strings in the golden-file notation (':' indent, one digit label
// per box); only meaningful for rank <= 9.
std::vector<std::string> layout_strings(const MinusculePoset& P, const BoxLayout& L);

std::string poset_text(const MinusculePoset& P);
std::string poset_dot(const MinusculePoset& P);
nlohmann::json poset_json(const MinusculePoset& P);

std::string move_poset_text(const MinusculePoset& P, const MovePoset& mp);
std::string move_poset_dot(const MinusculePoset& P, const MovePoset& mp);
nlohmann::json move_poset_json(const MinusculePoset& P, const MovePoset& mp);

nlohmann::json checks_json(const std::vector<Check>& checks);

}  // namespace cmlg
