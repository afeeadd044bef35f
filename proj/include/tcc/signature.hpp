#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/catalog.hpp"

namespace tcc {

enum class FrameKind { L, dL };

std::string_view to_string(FrameKind f);

struct TileSignature {
    std::string picture;  // picture token as written, e.g. "AIV"
    FrameKind frame = FrameKind::L;

    std::string text() const;
    bool operator==(const TileSignature&) const = default;
};

struct Signature {
    std::vector<TileSignature> tiles;

    std::string text() const;
    bool operator==(const Signature&) const = default;
};

struct SymbolCounts {
    int A = 0, B = 0, D = 0, H = 0, I = 0, V = 0, L = 0, d = 0;
    int AIV = 0, VIA = 0;

    bool operator==(const SymbolCounts&) const = default;
};

// Greedy tokenizer: uppercase letters form a picture token that ends at 'd' or 'L'; 'd' must
// be followed by 'L'. Whitespace between tiles is ignored. Tile counts must be odd and >= 3.
Signature parse_signature(std::string_view text, const Catalog& catalog = Catalog::bundled());

// Tokenizes without the parity rule; used for tile fragments such as repeat units.
Signature parse_tiles(std::string_view text, const Catalog& catalog = Catalog::bundled());

std::string render_signature(const Signature& sig);

SymbolCounts counts(const Signature& sig);

// Every (picture token, frame) pair available in the catalog, in catalog order.
std::vector<TileSignature> all_tile_signatures(const Catalog& catalog = Catalog::bundled());

// Uniform choice per position from `allowed` (all catalog tiles when empty).
Signature random_signature(std::size_t num_tiles, std::span<const TileSignature> allowed, std::uint64_t seed,
                           const Catalog& catalog = Catalog::bundled());

}  // namespace tcc
