#pragma once

#include <optional>
#include <string>

#include "etcs/angles.hpp"
#include "etcs/catalog.hpp"
#include "etcs/classify.hpp"

namespace etcs {

// On-disk form of a configuration: the lattice data plus an optional block of
// manifold invariants and optional citation text.
struct ConfigDocument {
    Configuration config;
    std::optional<ManifoldInvariants> manifold;
    std::string citation;
};

// Parses the JSON document format:
//   { "name": "...", "citation": "...", "k_plus": 2, "k_minus": 1,
//     "theta": {"num": 1, "den": 4}, "rank_plus": 1, "rank_minus": 1,
//     "gram": [[2, 2], [2, 4]],
//     "nu_bar_plus": 0, "nu_bar_minus": "0",
//     "manifold": {"b3": 134, "div_p1": 48,
//                  "torsion_free": true, "two_connected": true} }
// theta means a gluing angle of pi * num / den. Unknown keys are rejected;
// malformed JSON yields a positioned error. Only syntax and types are checked
// here; configuration invariants are enforced by validate_configuration.
ConfigDocument parse_document(const std::string& text);

// Serializes with fixed key order; rationals render as canonical "p/q"
// strings (plain "p" when the denominator is 1).
std::string document_to_json(const ConfigDocument& doc);

ConfigDocument entry_to_document(const CatalogEntry& entry);

} // namespace etcs
