#include "tcc/families.hpp"

#include <algorithm>
#include <charconv>

#include "tcc/error.hpp"

namespace tcc {

namespace {

constexpr std::string_view kNames[] = {"G1", "G2", "G3", "G4", "G5", "G6"};

void require(bool ok, FamilyId id, const std::string& what) {
    if (!ok) throw ValidationError(std::string(to_string(id)) + ": " + what);
}

Signature from_tiles(FamilyId id, const std::vector<std::string>& tiles, const std::vector<std::string>& allowed,
                     const Catalog& catalog) {
    require(tiles.size() >= 3 && tiles.size() % 2 == 1, id, "needs an odd number of at least 3 tiles");
    Signature sig;
    for (const auto& t : tiles) {
        require(std::find(allowed.begin(), allowed.end(), t) != allowed.end(), id, "tile '" + t + "' is not allowed");
        const Signature one = parse_tiles(t, catalog);
        sig.tiles.push_back(one.tiles.front());
    }
    return sig;
}

bool all_equal(const std::vector<std::string>& tiles, std::string_view t) {
    return std::all_of(tiles.begin(), tiles.end(), [&](const std::string& x) { return x == t; });
}

}  // namespace

Signature repeat_tile(std::string_view tile_text, int k, const Catalog& catalog) {
    const Signature unit = parse_tiles(tile_text, catalog);
    const int min_k = unit.tiles.size() == 1 ? 3 : 1;
    if (k < min_k || k % 2 == 0)
        throw ValidationError("repeat count must be odd and at least " + std::to_string(min_k) + ", got " +
                              std::to_string(k));
    Signature sig;
    for (int i = 0; i < k; ++i) sig.tiles.insert(sig.tiles.end(), unit.tiles.begin(), unit.tiles.end());
    if (sig.tiles.size() < 3 || sig.tiles.size() % 2 == 0)
        throw ValidationError("repeating '" + std::string(tile_text) + "' " + std::to_string(k) +
                              " times gives an even or too short signature");
    return sig;
}

std::string_view to_string(FamilyId id) { return kNames[static_cast<int>(id)]; }

FamilyId parse_family_id(std::string_view text) {
    for (int i = 0; i < 6; ++i)
        if (text == kNames[i]) return static_cast<FamilyId>(i);
    throw ParseError("unknown family '" + std::string(text) + "'", 0);
}

std::string FamilyInstance::spec() const {
    std::string out(to_string(id));
    if (id == FamilyId::G5 || id == FamilyId::G6) {
        out += ":tiles=";
        for (std::size_t i = 0; i < params.tiles.size(); ++i) out += (i ? "," : "") + params.tiles[i];
    } else {
        out += ":n=" + std::to_string(params.n);
    }
    return out;
}

FamilyInstance family_instance(FamilyId id, const FamilyParams& params, const Catalog& catalog) {
    FamilyInstance f;
    f.id = id;
    f.params = params;
    const int n = params.n;
    switch (id) {
        case FamilyId::G1:
        case FamilyId::G2:
        case FamilyId::G4:
            require(n >= 3 && n % 2 == 1, id, "n must be odd and at least 3");
            break;
        case FamilyId::G3: require(n >= 1 && n % 2 == 1, id, "n must be odd and at least 1"); break;
        case FamilyId::G5:
        case FamilyId::G6: break;
    }
    switch (id) {
        case FamilyId::G1:
            f.signature = repeat_tile("VBdL", n, catalog);
            f.expected.gamma = 2 * n;
            f.expected.sharp_bound = "gamma_upper";
            break;
        case FamilyId::G2:
            f.signature = repeat_tile("AIVL", n, catalog);
            f.expected.gamma = n;
            f.expected.sharp_bound = "gamma_upper";
            break;
        case FamilyId::G3:
            f.signature = repeat_tile("DDLDDLAIVL", n, catalog);
            f.expected.gamma = 2 * n;
            f.expected.sharp_bound = "gamma_lower";
            break;
        case FamilyId::G4:
            f.signature = repeat_tile("HdL", n, catalog);
            f.expected.alpha = 3 * n;
            f.expected.vertex_count = 6 * n;
            f.expected.sharp_bound = "alpha_upper";
            break;
        case FamilyId::G5: {
            f.signature = from_tiles(id, params.tiles, {"DDdL", "DDL"}, catalog);
            require(!all_equal(params.tiles, "DDdL"), id, "not all tiles may be DDdL");
            const SymbolCounts c = counts(f.signature);
            f.expected.alpha = c.L + c.d;
            f.expected.sharp_bound = "alpha_lower";
            break;
        }
        case FamilyId::G6: {
            f.signature = from_tiles(id, params.tiles, {"DDdL", "VIAdL", "AIVdL"}, catalog);
            require(!all_equal(params.tiles, "VIAdL"), id, "not all tiles may be VIAdL");
            require(!all_equal(params.tiles, "AIVdL"), id, "not all tiles may be AIVdL");
            f.expected.alpha = 2 * counts(f.signature).L - 1;
            f.expected.sharp_bound = "alpha_lower";
            break;
        }
    }
    return f;
}

FamilyInstance family_instance(std::string_view spec, const Catalog& catalog) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("family spec needs 'id:key=value'", spec.size());
    const FamilyId id = parse_family_id(spec.substr(0, colon));
    const std::string_view rest = spec.substr(colon + 1);
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) throw ParseError("family spec needs 'key=value'", spec.size());
    const std::string_view key = rest.substr(0, eq), value = rest.substr(eq + 1);
    const std::size_t value_at = colon + 1 + eq + 1;

    FamilyParams params;
    const bool tiled = id == FamilyId::G5 || id == FamilyId::G6;
    if (!tiled) {
        if (key != "n") throw ParseError("family " + std::string(to_string(id)) + " takes 'n'", colon + 1);
        const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), params.n);
        if (ec != std::errc() || end != value.data() + value.size() || value.empty())
            throw ParseError("n must be an integer", value_at);
    } else {
        if (key != "tiles") throw ParseError("family " + std::string(to_string(id)) + " takes 'tiles'", colon + 1);
        std::size_t start = 0;
        while (start <= value.size()) {
            const auto comma = std::min(value.find(',', start), value.size());
            if (comma == start) throw ParseError("empty tile in list", value_at + start);
            params.tiles.emplace_back(value.substr(start, comma - start));
            start = comma + 1;
        }
    }
    return family_instance(id, params, catalog);
}

}  // namespace tcc
