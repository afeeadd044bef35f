#include "tcc/signature.hpp"

#include <cctype>
#include <random>

#include "tcc/error.hpp"

namespace tcc {

std::string_view to_string(FrameKind f) { return f == FrameKind::L ? "L" : "dL"; }

std::string TileSignature::text() const { return picture + std::string(to_string(frame)); }

std::string Signature::text() const { return render_signature(*this); }

Signature parse_tiles(std::string_view text, const Catalog& catalog) {
    Signature sig;
    std::string token;
    std::size_t token_start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!token.empty()) throw ParseError("picture '" + token + "' is missing its frame", i);
            continue;
        }
        if (c == 'd' || c == 'L') {
            if (token.empty()) throw ParseError("frame without a picture", i);
            if (!catalog.find_token(token)) throw ParseError("unknown picture '" + token + "'", token_start);
            FrameKind frame = FrameKind::L;
            if (c == 'd') {
                if (i + 1 >= text.size() || text[i + 1] != 'L') throw ParseError("'d' must be followed by 'L'", i);
                frame = FrameKind::dL;
                ++i;
            }
            sig.tiles.push_back({token, frame});
            token.clear();
            continue;
        }
        if (!std::isupper(static_cast<unsigned char>(c))) throw ParseError(std::string("unexpected character '") + c + "'", i);
        if (token.empty()) token_start = i;
        token += c;
    }
    if (!token.empty()) {
        if (!catalog.find_token(token)) throw ParseError("unknown picture '" + token + "'", token_start);
        throw ParseError("picture '" + token + "' is missing its frame", text.size());
    }
    if (sig.tiles.empty()) throw ParseError("empty signature", 0);
    return sig;
}

Signature parse_signature(std::string_view text, const Catalog& catalog) {
    Signature sig = parse_tiles(text, catalog);
    const std::size_t n = sig.tiles.size();
    if (n < 3 || n % 2 == 0)
        throw ParseError("a signature needs an odd number of at least 3 tiles, found " + std::to_string(n), text.size());
    return sig;
}

std::string render_signature(const Signature& sig) {
    std::string out;
    for (const auto& t : sig.tiles) out += t.text();
    return out;
}

SymbolCounts counts(const Signature& sig) {
    SymbolCounts c;
    for (const auto& t : sig.tiles) {
        for (char ch : t.text()) {
            switch (ch) {
                case 'A': ++c.A; break;
                case 'B': ++c.B; break;
                case 'D': ++c.D; break;
                case 'H': ++c.H; break;
                case 'I': ++c.I; break;
                case 'V': ++c.V; break;
                case 'L': ++c.L; break;
                case 'd': ++c.d; break;
                default: break;
            }
        }
        if (t.picture == "AIV") ++c.AIV;
        if (t.picture == "VIA") ++c.VIA;
    }
    return c;
}

std::vector<TileSignature> all_tile_signatures(const Catalog& catalog) {
    std::vector<TileSignature> out;
    for (const auto& t : enumerate_tiles(catalog))
        out.push_back({t.picture_signature(), t.frame_id == "L" ? FrameKind::L : FrameKind::dL});
    return out;
}

Signature random_signature(std::size_t num_tiles, std::span<const TileSignature> allowed, std::uint64_t seed,
                           const Catalog& catalog) {
    if (num_tiles < 3 || num_tiles % 2 == 0)
        throw ValidationError("random_signature needs an odd tile count of at least 3");
    std::vector<TileSignature> pool(allowed.begin(), allowed.end());
    if (pool.empty()) pool = all_tile_signatures(catalog);
    for (const auto& t : pool)
        if (!catalog.find_token(t.picture)) throw ValidationError("unknown picture '" + t.picture + "' in tile filter");
    std::mt19937_64 rng(seed);
    Signature sig;
    for (std::size_t i = 0; i < num_tiles; ++i) sig.tiles.push_back(pool[rng() % pool.size()]);
    return sig;
}

}  // namespace tcc
