#pragma once

#include <span>
#include <vector>

#include "json.hpp"

#include "grcup/f2poly.hpp"

namespace grcup {

/// Canonical JSON form of a polynomial: an array of [p, q] pairs in
/// descending lex order.
nlohmann::ordered_json poly_to_json(const Polynomial& f);

/// Parses the canonical form, rejecting malformed pairs and out-of-order
/// term lists.
Polynomial poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json polys_to_json(std::span<const Polynomial> polys);
std::vector<Polynomial> polys_from_json(const nlohmann::json& j);

}  // namespace grcup
