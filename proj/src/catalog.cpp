#include "tcc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include "tcc/error.hpp"

namespace tcc {

namespace {

constexpr std::size_t kPictureCount = 13;
constexpr std::array<std::string_view, 2> kFrameIds{"L", "dL"};

// --- document parsing ----------------------------------------------------------------

struct Value {
    std::variant<bool, std::string, std::vector<Value>> data;

    bool is_list() const { return std::holds_alternative<std::vector<Value>>(data); }
    const std::vector<Value>& list() const { return std::get<std::vector<Value>>(data); }
};

class ValueParser {
public:
    ValueParser(std::string_view text, std::size_t base, std::size_t line) : text_(text), base_(base), line_(line) {}

    Value parse() {
        Value v = value();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters after value");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("catalog line " + std::to_string(line_) + ": " + what, base_ + pos_);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Value value() {
        skip_space();
        if (pos_ >= text_.size()) fail("missing value");
        if (text_[pos_] == '[') {
            ++pos_;
            std::vector<Value> items;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                return {items};
            }
            while (true) {
                items.push_back(value());
                skip_space();
                if (pos_ >= text_.size()) fail("unterminated list");
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ']') {
                    ++pos_;
                    return {items};
                }
                fail("expected ',' or ']'");
            }
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail(std::string("unexpected character '") + text_[pos_] + "'");
        std::string word(text_.substr(start, pos_ - start));
        if (word == "true") return {true};
        if (word == "false") return {false};
        return {word};
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Entry {
    Value value;
    std::size_t line;
};

struct Section {
    std::string kind;
    std::string id;
    std::size_t line;
    std::map<std::string, Entry> entries;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int bracket_balance(std::string_view s) {
    int depth = 0;
    for (char c : s) depth += (c == '[') - (c == ']');
    return depth;
}

std::vector<Section> parse_sections(std::string_view text) {
    std::vector<Section> sections;
    std::size_t offset = 0, line_no = 0;
    std::string pending_key, pending_value;
    std::size_t pending_line = 0, pending_offset = 0;

    auto finish_pending = [&] {
        if (pending_key.empty()) return;
        ValueParser parser(pending_value, pending_offset, pending_line);
        auto& entries = sections.back().entries;
        if (entries.count(pending_key))
            throw ParseError("catalog line " + std::to_string(pending_line) + ": duplicate key '" + pending_key + "'",
                             pending_offset);
        entries.emplace(pending_key, Entry{parser.parse(), pending_line});
        pending_key.clear();
        pending_value.clear();
    };

    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view raw = text.substr(offset, end - offset);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);

        if (!pending_key.empty()) {
            pending_value += ' ';
            pending_value += line;
            if (bracket_balance(pending_value) <= 0) finish_pending();
        } else if (line.empty()) {
        } else if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string_view::npos) {
            std::istringstream header{std::string(line.substr(1, line.size() - 2))};
            Section s;
            s.line = line_no;
            if (!(header >> s.kind >> s.id) || (s.kind != "frame" && s.kind != "picture"))
                throw ParseError("catalog line " + std::to_string(line_no) + ": expected [frame <id>] or [picture <id>]",
                                 offset);
            std::string extra;
            if (header >> extra)
                throw ParseError("catalog line " + std::to_string(line_no) + ": trailing text in section header", offset);
            sections.push_back(std::move(s));
        } else {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("catalog line " + std::to_string(line_no) + ": expected key = value", offset);
            if (sections.empty())
                throw ParseError("catalog line " + std::to_string(line_no) + ": key outside of any section", offset);
            pending_key = std::string(trim(line.substr(0, eq)));
            pending_value = std::string(trim(line.substr(eq + 1)));
            pending_line = line_no;
            pending_offset = offset;
            if (bracket_balance(pending_value) <= 0) finish_pending();
        }
        offset = end + 1;
    }
    if (!pending_key.empty())
        throw ParseError("catalog line " + std::to_string(pending_line) + ": unterminated value for '" + pending_key + "'",
                         pending_offset);
    return sections;
}

[[noreturn]] void entry_error(const Section& s, const std::string& key, const std::string& what) {
    throw ValidationError(s.kind + " " + s.id + ": '" + key + "' " + what);
}

const Entry* lookup(const Section& s, const std::string& key, bool required) {
    auto it = s.entries.find(key);
    if (it == s.entries.end()) {
        if (required) entry_error(s, key, "is missing");
        return nullptr;
    }
    return &it->second;
}

std::vector<std::string> names(const Section& s, const std::string& key, bool required = true) {
    const Entry* e = lookup(s, key, required);
    if (!e) return {};
    if (!e->value.is_list()) entry_error(s, key, "must be a list of vertex names");
    std::vector<std::string> out;
    for (const auto& item : e->value.list()) {
        if (!std::holds_alternative<std::string>(item.data)) entry_error(s, key, "must be a list of vertex names");
        out.push_back(std::get<std::string>(item.data));
    }
    return out;
}

std::vector<LocalEdge> edge_list(const Section& s) {
    const Entry* e = lookup(s, "edges", true);
    if (!e->value.is_list()) entry_error(s, "edges", "must be a list of pairs");
    std::vector<LocalEdge> out;
    for (const auto& item : e->value.list()) {
        if (!item.is_list() || item.list().size() != 2) entry_error(s, "edges", "must be a list of pairs");
        const auto& pair = item.list();
        if (!std::holds_alternative<std::string>(pair[0].data) || !std::holds_alternative<std::string>(pair[1].data))
            entry_error(s, "edges", "must be a list of pairs");
        out.emplace_back(std::get<std::string>(pair[0].data), std::get<std::string>(pair[1].data));
    }
    return out;
}

template <std::size_t N>
std::array<std::string, N> fixed(const Section& s, const std::string& key) {
    auto list = names(s, key);
    if (list.size() != N) entry_error(s, key, "must list exactly " + std::to_string(N) + " vertices");
    std::array<std::string, N> out;
    std::copy(list.begin(), list.end(), out.begin());
    return out;
}

void check_keys(const Section& s, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, entry] : s.entries)
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("catalog line " + std::to_string(entry.line) + ": unknown key '" + key + "' in " + s.kind +
                                 " " + s.id,
                             0);
}

// --- picture ids ----------------------------------------------------------------------

struct PictureParts {
    char top = 0;
    bool identified = false;
    char bottom = 0;  // 0 when the picture has a single path
};

bool parse_picture_id(std::string_view id, PictureParts& parts) {
    if (id.empty()) return false;
    parts = {};
    parts.top = id[0];
    if (std::string_view("ABDHV").find(parts.top) == std::string_view::npos) return false;
    std::size_t i = 1;
    if (i < id.size() && id[i] == 'I') {
        parts.identified = true;
        ++i;
    }
    if (i < id.size()) {
        parts.bottom = id[i++];
        if (std::string_view("ABDV").find(parts.bottom) == std::string_view::npos) return false;
    }
    if (i != id.size()) return false;
    if (parts.top == 'H' && (parts.bottom || parts.identified)) return false;
    if (parts.identified && !parts.bottom) return false;
    return true;
}

std::size_t expected_mark_count(std::string_view id) {
    PictureParts parts;
    parse_picture_id(id, parts);
    std::size_t count = parts.top == 'H' ? 2 : 1;
    if (parts.bottom) ++count;
    if (id == "AIV" || id == "VIA") --count;
    return count;
}

// --- picture geometry ----------------------------------------------------------------

// Corner positions: 0 tl, 1 tr, 2 bl, 3 br. A half turn swaps tl<->br and tr<->bl.
constexpr std::array<int, 4> kRotatedCorner{3, 2, 1, 0};

std::string rotated_inner_name(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 't' || name[0] == 'b') &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return (name[0] == 't' ? "b" : "t") + name.substr(1);
    return name;
}

// Picture with its corners renamed to the given names, optionally turned by 180 degrees.
Picture placed_picture(const Picture& p, Orientation orientation, const Corners& target) {
    std::map<std::string, std::string> rename;
    for (const auto& v : p.vertices) rename[v] = orientation == Orientation::upright ? v : rotated_inner_name(v);
    for (int c = 0; c < 4; ++c) {
        const int to = orientation == Orientation::upright ? c : kRotatedCorner[c];
        rename[p.corners[c]] = target[to];
    }
    auto map_list = [&](const std::vector<std::string>& in) {
        std::vector<std::string> out;
        for (const auto& v : in) out.push_back(rename.at(v));
        return out;
    };
    Picture out;
    out.id = orientation == Orientation::upright ? p.id : rotated_picture_id(p.id);
    out.vertices = map_list(p.vertices);
    for (const auto& [a, b] : p.edges) out.edges.emplace_back(rename.at(a), rename.at(b));
    out.corners = target;
    out.marks = map_list(p.marks);
    out.rotation_symmetric = p.rotation_symmetric;
    if (orientation == Orientation::upright) {
        out.left_side = map_list(p.left_side);
        out.right_side = map_list(p.right_side);
        out.top_side = map_list(p.top_side);
        out.bottom_side = map_list(p.bottom_side);
    } else {
        out.left_side = map_list(p.right_side);
        out.right_side = map_list(p.left_side);
        out.top_side = map_list(p.bottom_side);
        out.bottom_side = map_list(p.top_side);
        for (auto* side : {&out.left_side, &out.right_side, &out.top_side, &out.bottom_side})
            std::reverse(side->begin(), side->end());
    }
    return out;
}

// The picture drawn in its square: explicit edges plus the four sides, subdivided where
// the picture says so.
std::vector<LocalEdge> picture_graph_edges(const Picture& p) {
    std::vector<LocalEdge> edges = p.edges;
    auto side = [&](const std::vector<std::string>& path, const std::string& from, const std::string& to) {
        if (path.empty()) {
            edges.emplace_back(from, to);
            return;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    };
    side(p.top_side, p.corners[0], p.corners[1]);
    side(p.bottom_side, p.corners[2], p.corners[3]);
    side(p.left_side, p.corners[0], p.corners[2]);
    side(p.right_side, p.corners[1], p.corners[3]);
    return edges;
}

struct IndexedGraph {
    std::vector<std::string> names;
    Multigraph graph;

    std::size_t index(const std::string& v) const {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), v) - names.begin());
    }
};

IndexedGraph index_graph(const std::vector<std::string>& vertices, const std::vector<LocalEdge>& edges) {
    IndexedGraph g{vertices, Multigraph(vertices.size())};
    for (const auto& [a, b] : edges)
        g.graph.add_edge(static_cast<Vertex>(g.index(a)), static_cast<Vertex>(g.index(b)));
    return g;
}

bool picture_rotation_symmetric(const Picture& p) {
    const Picture turned = placed_picture(p, Orientation::rotated180, p.corners);
    const IndexedGraph a = index_graph(p.vertices, picture_graph_edges(p));
    const IndexedGraph b = index_graph(turned.vertices, picture_graph_edges(turned));
    auto corner_walls = [](const IndexedGraph& g, const Corners& c) {
        WallPair w;
        w.left = {static_cast<Vertex>(g.index(c[2])), static_cast<Vertex>(g.index(c[0]))};
        w.right = {static_cast<Vertex>(g.index(c[3])), static_cast<Vertex>(g.index(c[1]))};
        return w;
    };
    return isomorphic(a.graph, corner_walls(a, p.corners), b.graph, corner_walls(b, p.corners));
}

void validate_frame(const Frame& f) {
    const std::string who = "frame " + f.id;
    std::set<std::string> vs(f.vertices.begin(), f.vertices.end());
    if (vs.size() != f.vertices.size()) throw ValidationError(who + ": duplicate vertex");
    auto known = [&](const std::string& v, const char* what) {
        if (!vs.count(v)) throw ValidationError(who + ": " + what + " names unknown vertex '" + v + "'");
    };
    for (const auto& [a, b] : f.edges) {
        known(a, "edge");
        known(b, "edge");
        if (a == b) throw ValidationError(who + ": loop at '" + a + "'");
    }
    for (const auto& c : f.corners) known(c, "corners");
    if (std::set<std::string>(f.corners.begin(), f.corners.end()).size() != 4)
        throw ValidationError(who + ": corners must be distinct");
    for (const auto& v : f.left_wall) known(v, "left_wall");
    for (const auto& v : f.right_wall) known(v, "right_wall");
    std::set<std::string> walls(f.left_wall.begin(), f.left_wall.end());
    walls.insert(f.right_wall.begin(), f.right_wall.end());
    if (walls.size() != 4) throw ValidationError(who + ": walls must be disjoint and duplicate-free");
    const IndexedGraph g = index_graph(f.vertices, f.edges);
    if (!is_connected(g.graph.simplified())) throw ValidationError(who + ": frame graph is not connected");
    for (const auto& [side_a, side_b] : {LocalEdge{f.corners[0], f.corners[2]}, LocalEdge{f.corners[1], f.corners[3]}})
        if (g.graph.multiplicity(static_cast<Vertex>(g.index(side_a)), static_cast<Vertex>(g.index(side_b))) == 0)
            throw ValidationError(who + ": square side " + side_a + "-" + side_b + " is missing");
}

void validate_picture(const Picture& p) {
    const std::string who = "picture " + p.id;
    PictureParts parts;
    if (!parse_picture_id(p.id, parts)) throw ValidationError(who + ": id is not a picture signature");
    std::set<std::string> vs(p.vertices.begin(), p.vertices.end());
    if (vs.size() != p.vertices.size()) throw ValidationError(who + ": duplicate vertex");
    auto known = [&](const std::string& v, const char* what) {
        if (!vs.count(v)) throw ValidationError(who + ": " + what + " names unknown vertex '" + v + "'");
    };
    for (const auto& c : p.corners) known(c, "corners");
    if (std::set<std::string>(p.corners.begin(), p.corners.end()).size() != 4)
        throw ValidationError(who + ": corners must be distinct");
    const std::set<std::string> corner_set(p.corners.begin(), p.corners.end());
    for (const auto& [a, b] : p.edges) {
        known(a, "edge");
        known(b, "edge");
        if (a == b) throw ValidationError(who + ": loop at '" + a + "'");
        const bool diagonal = (a == p.corners[0] && b == p.corners[3]) || (a == p.corners[3] && b == p.corners[0]) ||
                              (a == p.corners[1] && b == p.corners[2]) || (a == p.corners[2] && b == p.corners[1]);
        if (diagonal) throw ValidationError(who + ": diagonal edge " + a + "-" + b);
    }
    std::set<std::string> on_sides;
    auto check_side = [&](const std::vector<std::string>& side, const std::string& from, const std::string& to,
                          const char* key) {
        if (side.empty()) return;
        if (side.size() < 3 || side.front() != from || side.back() != to)
            throw ValidationError(who + ": " + key + " must run from " + from + " to " + to + " through new vertices");
        for (std::size_t i = 1; i + 1 < side.size(); ++i) {
            known(side[i], key);
            if (corner_set.count(side[i]) || !on_sides.insert(side[i]).second)
                throw ValidationError(who + ": " + key + " reuses vertex '" + side[i] + "'");
        }
    };
    check_side(p.left_side, p.corners[0], p.corners[2], "left_side");
    check_side(p.right_side, p.corners[1], p.corners[3], "right_side");
    check_side(p.top_side, p.corners[0], p.corners[1], "top_side");
    check_side(p.bottom_side, p.corners[2], p.corners[3], "bottom_side");

    if (p.marks.empty()) throw ValidationError(who + ": marks are missing");
    for (const auto& m : p.marks) known(m, "marks");
    if (p.marks.size() != expected_mark_count(p.id))
        throw ValidationError(who + ": expected " + std::to_string(expected_mark_count(p.id)) + " marks, found " +
                              std::to_string(p.marks.size()));
    const IndexedGraph g = index_graph(p.vertices, picture_graph_edges(p));
    const Graph simple = g.graph.simplified();
    if (!is_connected(simple)) throw ValidationError(who + ": picture graph is not connected");
    std::vector<Vertex> marks;
    for (const auto& m : p.marks) marks.push_back(static_cast<Vertex>(g.index(m)));
    if (!is_dominating(simple, make_vertex_set(marks)))
        throw ValidationError(who + ": marks do not dominate the picture");
    for (const auto& c : p.corners) {
        const Vertex v = static_cast<Vertex>(g.index(c));
        if (is_dominating(simple, std::vector<Vertex>{v}))
            throw ValidationError(who + ": corner '" + c + "' dominates the whole picture");
    }
    if (picture_rotation_symmetric(p) != p.rotation_symmetric)
        throw ValidationError(who + ": rotation_symmetric flag disagrees with the picture graph");
}

std::string join_names(const std::vector<std::string>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + "]";
}

std::string join_edges(const std::vector<LocalEdge>& edges) {
    std::string out = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) out += (i ? ", [" : "[") + edges[i].first + ", " + edges[i].second + "]";
    return out + "]";
}

}  // namespace

std::string_view to_string(Orientation o) { return o == Orientation::upright ? "upright" : "rotated180"; }

std::string rotated_picture_id(std::string_view id) {
    PictureParts parts;
    if (!parse_picture_id(id, parts) || !parts.bottom) return std::string(id);
    std::string out(1, parts.bottom);
    if (parts.identified) out += 'I';
    out += parts.top;
    return out;
}

// --- Catalog ----------------------------------------------------------------------------

Catalog Catalog::parse(std::string_view text) {
    Catalog catalog;
    for (const auto& s : parse_sections(text)) {
        if (s.kind == "frame") {
            check_keys(s, {"vertices", "edges", "corners", "left_wall", "right_wall"});
            Frame f;
            f.id = s.id;
            f.vertices = names(s, "vertices");
            f.edges = edge_list(s);
            f.corners = fixed<4>(s, "corners");
            f.left_wall = fixed<2>(s, "left_wall");
            f.right_wall = fixed<2>(s, "right_wall");
            catalog.frames_.push_back(std::move(f));
        } else {
            check_keys(s, {"vertices", "edges", "corners", "left_side", "right_side", "top_side", "bottom_side", "marks", "rotation_symmetric"});
            Picture p;
            p.id = s.id;
            p.vertices = names(s, "vertices");
            p.edges = edge_list(s);
            p.corners = fixed<4>(s, "corners");
            p.left_side = names(s, "left_side", false);
            p.right_side = names(s, "right_side", false);
            p.top_side = names(s, "top_side", false);
            p.bottom_side = names(s, "bottom_side", false);
            p.marks = names(s, "marks", false);
            const Entry* sym = lookup(s, "rotation_symmetric", true);
            if (!std::holds_alternative<bool>(sym->value.data))
                entry_error(s, "rotation_symmetric", "must be true or false");
            p.rotation_symmetric = std::get<bool>(sym->value.data);
            catalog.pictures_.push_back(std::move(p));
        }
    }
    catalog.validate();
    return catalog;
}

Catalog Catalog::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read catalog file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const Catalog& Catalog::bundled() {
    static const Catalog catalog = parse(bundled_text());
    return catalog;
}

void Catalog::validate() const {
    if (frames_.size() != kFrameIds.size())
        throw ValidationError("catalog must contain exactly 2 frames, found " + std::to_string(frames_.size()));
    for (auto id : kFrameIds)
        if (std::count_if(frames_.begin(), frames_.end(), [&](const Frame& f) { return f.id == id; }) != 1)
            throw ValidationError("catalog must contain exactly one frame " + std::string(id));
    for (const auto& f : frames_) validate_frame(f);
    for (const auto& f : frames_)
        if (f.corners != frames_.front().corners)
            throw ValidationError("frame " + f.id + ": corner names differ between frames");

    if (pictures_.size() != kPictureCount)
        throw ValidationError("catalog must contain exactly 13 pictures, found " + std::to_string(pictures_.size()));
    std::set<std::string> tokens;
    for (const auto& p : pictures_) {
        validate_picture(p);
        if (!tokens.insert(p.id).second) throw ValidationError("picture " + p.id + ": duplicate picture");
        const std::string turned = rotated_picture_id(p.id);
        if (turned != p.id && !tokens.insert(turned).second)
            throw ValidationError("picture " + p.id + ": rotated signature " + turned + " collides with another picture");
        for (const auto& v : p.vertices) {
            const bool corner = std::find(p.corners.begin(), p.corners.end(), v) != p.corners.end();
            for (const auto& f : frames_)
                if (!corner && std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end())
                    throw ValidationError("picture " + p.id + ": vertex '" + v + "' clashes with frame " + f.id);
        }
    }
}

const Frame& Catalog::frame(std::string_view id) const {
    for (const auto& f : frames_)
        if (f.id == id) return f;
    throw ValidationError("unknown frame '" + std::string(id) + "'");
}

const Picture& Catalog::picture(std::string_view id) const {
    for (const auto& p : pictures_)
        if (p.id == id) return p;
    throw ValidationError("unknown picture '" + std::string(id) + "'");
}

const Picture* Catalog::find_token(std::string_view token, Orientation* orientation) const {
    for (const auto& p : pictures_) {
        if (p.id == token) {
            if (orientation) *orientation = Orientation::upright;
            return &p;
        }
        if (rotated_picture_id(p.id) == token) {
            if (orientation) *orientation = Orientation::rotated180;
            return &p;
        }
    }
    return nullptr;
}

std::string Catalog::to_text() const {
    std::ostringstream out;
    for (const auto& f : frames_) {
        out << "[frame " << f.id << "]\n";
        out << "vertices = " << join_names(f.vertices) << "\n";
        out << "edges = " << join_edges(f.edges) << "\n";
        out << "corners = " << join_names({f.corners.begin(), f.corners.end()}) << "\n";
        out << "left_wall = " << join_names({f.left_wall.begin(), f.left_wall.end()}) << "\n";
        out << "right_wall = " << join_names({f.right_wall.begin(), f.right_wall.end()}) << "\n\n";
    }
    for (const auto& p : pictures_) {
        out << "[picture " << p.id << "]\n";
        out << "vertices = " << join_names(p.vertices) << "\n";
        out << "edges = " << join_edges(p.edges) << "\n";
        out << "corners = " << join_names({p.corners.begin(), p.corners.end()}) << "\n";
        if (!p.left_side.empty()) out << "left_side = " << join_names(p.left_side) << "\n";
        if (!p.right_side.empty()) out << "right_side = " << join_names(p.right_side) << "\n";
        if (!p.top_side.empty()) out << "top_side = " << join_names(p.top_side) << "\n";
        if (!p.bottom_side.empty()) out << "bottom_side = " << join_names(p.bottom_side) << "\n";
        out << "marks = " << join_names(p.marks) << "\n";
        out << "rotation_symmetric = " << (p.rotation_symmetric ? "true" : "false") << "\n\n";
    }
    return out.str();
}

// --- templates --------------------------------------------------------------------------

std::string TileTemplate::picture_signature() const {
    return orientation == Orientation::upright ? picture_id : rotated_picture_id(picture_id);
}

std::string TileTemplate::signature() const { return picture_signature() + frame_id; }

std::size_t TileTemplate::index_of(std::string_view vertex) const {
    auto it = std::find(vertices.begin(), vertices.end(), vertex);
    if (it == vertices.end()) throw ValidationError("template " + signature() + ": no vertex '" + std::string(vertex) + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

Multigraph TileTemplate::multigraph() const {
    Multigraph g(vertices.size());
    for (const auto& [a, b] : edges) g.add_edge(static_cast<Vertex>(index_of(a)), static_cast<Vertex>(index_of(b)));
    return g;
}

WallPair TileTemplate::walls() const {
    WallPair w;
    for (const auto& v : left_wall) w.left.push_back(static_cast<Vertex>(index_of(v)));
    for (const auto& v : right_wall) w.right.push_back(static_cast<Vertex>(index_of(v)));
    return w;
}

TileTemplate make_template(const Catalog& catalog, std::string_view picture_id, Orientation orientation,
                           std::string_view frame_id) {
    const Frame& frame = catalog.frame(frame_id);
    const Picture placed = placed_picture(catalog.picture(picture_id), orientation, frame.corners);

    TileTemplate t;
    t.picture_id = std::string(picture_id);
    t.orientation = orientation;
    t.frame_id = frame.id;
    t.vertices = frame.vertices;
    t.edges = frame.edges;
    t.left_wall = frame.left_wall;
    t.right_wall = frame.right_wall;
    t.marks = placed.marks;
    t.picture_vertices = placed.vertices;

    for (const auto& v : placed.vertices)
        if (std::find(t.vertices.begin(), t.vertices.end(), v) == t.vertices.end()) t.vertices.push_back(v);
    auto subdivide = [&](const std::vector<std::string>& side) {
        if (side.empty()) return;
        const LocalEdge a{side.front(), side.back()}, b{side.back(), side.front()};
        auto it = std::find_if(t.edges.begin(), t.edges.end(), [&](const LocalEdge& e) { return e == a || e == b; });
        if (it == t.edges.end())
            throw ValidationError("frame " + frame.id + " has no side " + side.front() + "-" + side.back() + " to subdivide");
        t.edges.erase(it);
        for (std::size_t i = 0; i + 1 < side.size(); ++i) t.edges.emplace_back(side[i], side[i + 1]);
    };
    subdivide(placed.left_side);
    subdivide(placed.right_side);
    subdivide(placed.top_side);
    subdivide(placed.bottom_side);
    t.edges.insert(t.edges.end(), placed.edges.begin(), placed.edges.end());
    return t;
}

bool equivalent_templates(const TileTemplate& a, const TileTemplate& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    const Multigraph ga = a.multigraph(), gb = b.multigraph();
    const WallPair wa = a.walls();
    WallPair wb = b.walls();
    if (isomorphic(ga, wa, gb, wb)) return true;
    std::reverse(wb.left.begin(), wb.left.end());
    std::reverse(wb.right.begin(), wb.right.end());
    return isomorphic(ga, wa, gb, wb);
}

std::vector<TileTemplate> enumerate_tiles(const Catalog& catalog) {
    std::vector<std::string> ids;
    for (const auto& p : catalog.pictures()) ids.push_back(p.id);
    return enumerate_tiles(catalog, ids);
}

std::vector<TileTemplate> enumerate_tiles(const Catalog& catalog, const std::vector<std::string>& picture_ids) {
    std::vector<TileTemplate> out;
    for (const auto& p : catalog.pictures()) {
        if (std::find(picture_ids.begin(), picture_ids.end(), p.id) == picture_ids.end()) continue;
        for (auto orientation : {Orientation::upright, Orientation::rotated180})
            for (const auto& f : catalog.frames()) {
                TileTemplate t = make_template(catalog, p.id, orientation, f.id);
                const bool seen = std::any_of(out.begin(), out.end(),
                                              [&](const TileTemplate& u) { return equivalent_templates(u, t); });
                if (!seen) out.push_back(std::move(t));
            }
    }
    return out;
}

}  // namespace tcc
