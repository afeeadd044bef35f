#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/signature.hpp"

namespace tcc {

// The tiles of `tile_text` repeated k times. k must be odd; at least 3 for a single tile and
// at least 1 for a multi-tile unit, with an odd total of at least 3 tiles.
Signature repeat_tile(std::string_view tile_text, int k, const Catalog& catalog = Catalog::bundled());

enum class FamilyId { G1, G2, G3, G4, G5, G6 };

std::string_view to_string(FamilyId id);
FamilyId parse_family_id(std::string_view text);

struct FamilyParams {
    int n = 0;                       // G1..G4
    std::vector<std::string> tiles;  // G5, G6: tile signatures such as "DDdL"
};

struct FamilyExpectation {
    std::optional<int> gamma;
    std::optional<int> alpha;
    std::optional<int> vertex_count;
    // Which bound the family attains: "gamma_upper", "gamma_lower", "alpha_upper" or "alpha_lower".
    std::string sharp_bound;
};

struct FamilyInstance {
    FamilyId id = FamilyId::G1;
    FamilyParams params;
    Signature signature;
    FamilyExpectation expected;

    // "G1:n=3" or "G5:tiles=DDdL,DDL,DDdL".
    std::string spec() const;
};

// Throws ValidationError when the parameters break the family's constraints.
FamilyInstance family_instance(FamilyId id, const FamilyParams& params, const Catalog& catalog = Catalog::bundled());

// Parses "G1:n=3", "G5:tiles=DDdL,DDL,DDdL"; throws ParseError on malformed text.
FamilyInstance family_instance(std::string_view spec, const Catalog& catalog = Catalog::bundled());

}  // namespace tcc
