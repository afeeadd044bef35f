#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcc/graph.hpp"

namespace tcc {

using LocalEdge = std::pair<std::string, std::string>;

// Corner order used everywhere: top-left, top-right, bottom-left, bottom-right.
using Corners = std::array<std::string, 4>;

struct Frame {
    std::string id;  // "L" or "dL"
    std::vector<std::string> vertices;
    std::vector<LocalEdge> edges;  // a repeated pair is a doubled edge
    Corners corners;
    std::array<std::string, 2> left_wall;   // bottom to top
    std::array<std::string, 2> right_wall;  // bottom to top
};

struct Picture {
    std::string id;  // upright signature, e.g. "DD", "VIA", "H"
    std::vector<std::string> vertices;
    std::vector<LocalEdge> edges;
    Corners corners;
    // Subdivisions of the square's sides including both corners, listed top to bottom for the
    // vertical sides and left to right for the horizontal ones. Empty when not subdivided.
    std::vector<std::string> left_side;
    std::vector<std::string> right_side;
    std::vector<std::string> top_side;
    std::vector<std::string> bottom_side;
    std::vector<std::string> marks;
    bool rotation_symmetric = false;
};

enum class Orientation { upright, rotated180 };

std::string_view to_string(Orientation o);

// Signature of a picture after a 180 degree rotation: "VIA" -> "AIV", "VB" -> "BV".
std::string rotated_picture_id(std::string_view id);

struct TileTemplate {
    std::string picture_id;  // catalog id of the underlying picture
    Orientation orientation = Orientation::upright;
    std::string frame_id;
    std::vector<std::string> vertices;
    std::vector<LocalEdge> edges;
    std::array<std::string, 2> left_wall;
    std::array<std::string, 2> right_wall;
    std::vector<std::string> marks;
    std::vector<std::string> picture_vertices;

    // Picture signature as drawn in this orientation.
    std::string picture_signature() const;
    // Full tile signature, e.g. "AIVL".
    std::string signature() const;

    std::size_t index_of(std::string_view vertex) const;
    Multigraph multigraph() const;
    WallPair walls() const;
};

class Catalog {
public:
    // Parses and validates a catalog document; throws ParseError or ValidationError.
    static Catalog parse(std::string_view text);
    static Catalog load_file(const std::filesystem::path& path);
    // The catalog compiled into the library.
    static const Catalog& bundled();
    static std::string_view bundled_text();

    const std::vector<Frame>& frames() const noexcept { return frames_; }
    const std::vector<Picture>& pictures() const noexcept { return pictures_; }

    const Frame& frame(std::string_view id) const;
    const Picture& picture(std::string_view id) const;

    // Resolves a picture token as it appears in a signature ("AIV" names the rotated VIA).
    // Returns nullptr when the token names no picture.
    const Picture* find_token(std::string_view token, Orientation* orientation = nullptr) const;

    // Canonical document text; parse(to_text()) reproduces the catalog.
    std::string to_text() const;

    void validate() const;

private:
    std::vector<Frame> frames_;
    std::vector<Picture> pictures_;
};

TileTemplate make_template(const Catalog& catalog, std::string_view picture_id, Orientation orientation,
                           std::string_view frame_id);

// Same tile up to wall-respecting isomorphism, also allowing both walls of b to be inverted.
bool equivalent_templates(const TileTemplate& a, const TileTemplate& b);

// Every picture x orientation x frame combination, deduplicated; order follows the catalog.
std::vector<TileTemplate> enumerate_tiles(const Catalog& catalog);
// Same, restricted to the listed picture ids.
std::vector<TileTemplate> enumerate_tiles(const Catalog& catalog, const std::vector<std::string>& picture_ids);

}  // namespace tcc
