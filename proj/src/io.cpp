#include "ketool/io.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "ketool/errors.hpp"

namespace ke {

namespace {

struct Line {
    std::size_t number = 0;
    std::string key;
    std::vector<std::string> tokens;
};

// Strips '#' comments, splits on whitespace, and peels off the `key:` head.
std::vector<Line> scan_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) tokens.emplace_back(raw.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        Line line;
        line.number = number;
        if (tokens[0].back() != ':')
            throw ParseError(number, "expected a 'key:' directive, got '" + tokens[0] + "'");
        line.key = tokens[0].substr(0, tokens[0].size() - 1);
        line.tokens.assign(tokens.begin() + 1, tokens.end());
        out.push_back(std::move(line));
    }
    return out;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

// 53 random bits to a uniform double in [0, 1); avoids the
// implementation-defined std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ParsedSetSystem parse_setsystem(std::string_view text) {
    std::vector<std::string> ground_tokens;
    bool ground_declared = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> sets;
    for (const Line& line : scan_lines(text)) {
        if (line.key == "ground") {
            ground_declared = true;
            ground_tokens.insert(ground_tokens.end(), line.tokens.begin(), line.tokens.end());
        } else if (line.key == "set") {
            sets.emplace_back(line.number, line.tokens);
        } else {
            throw ParseError(line.number, "unknown directive '" + line.key + ":'");
        }
    }

    GroundSet ground;
    if (ground_declared) {
        ground = GroundSet(std::move(ground_tokens));
    } else {
        std::vector<std::string> all;
        for (const auto& [number, tokens] : sets) all.insert(all.end(), tokens.begin(), tokens.end());
        ground = GroundSet(std::move(all));
    }

    ParsedSetSystem out;
    std::vector<std::pair<ElementSet, std::size_t>> masks;  // mask, first line
    std::vector<ElementSet> members;
    for (const auto& [number, tokens] : sets) {
        ElementSet mask(ground.size());
        for (const auto& token : tokens) {
            auto idx = ground.index_of(token);
            if (!idx) throw ParseError(number, "unknown label '" + token + "'");
            mask.set(*idx);
        }
        auto dup = std::find_if(masks.begin(), masks.end(),
                                [&](const auto& entry) { return entry.first == mask; });
        if (dup != masks.end()) {
            out.warnings.push_back("line " + std::to_string(number) +
                                   ": duplicate set collapsed: {" + join(tokens) + "}");
            continue;
        }
        masks.emplace_back(mask, number);
        members.push_back(std::move(mask));
    }
    out.system = SetSystem(std::move(ground), std::move(members));
    return out;
}

ParsedGraph parse_graph(std::string_view text) {
    std::vector<std::string> vertex_tokens;
    bool vertices_declared = false;
    std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> edges;
    for (const Line& line : scan_lines(text)) {
        if (line.key == "vertices") {
            vertices_declared = true;
            vertex_tokens.insert(vertex_tokens.end(), line.tokens.begin(), line.tokens.end());
        } else if (line.key == "edge") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "edge needs exactly two endpoints");
            if (line.tokens[0] == line.tokens[1])
                throw ParseError(line.number,
                                 "loop edge '" + line.tokens[0] + " " + line.tokens[1] +
                                     "' not allowed");
            edges.emplace_back(line.number, std::make_pair(line.tokens[0], line.tokens[1]));
        } else {
            throw ParseError(line.number, "unknown directive '" + line.key + ":'");
        }
    }

    GroundSet vertices;
    if (vertices_declared) {
        vertices = GroundSet(std::move(vertex_tokens));
        for (const auto& [number, pair] : edges) {
            if (!vertices.index_of(pair.first))
                throw ParseError(number, "unknown vertex '" + pair.first + "'");
            if (!vertices.index_of(pair.second))
                throw ParseError(number, "unknown vertex '" + pair.second + "'");
        }
    } else {
        std::vector<std::string> all;
        for (const auto& [number, pair] : edges) {
            all.push_back(pair.first);
            all.push_back(pair.second);
        }
        vertices = GroundSet(std::move(all));
    }

    ParsedGraph out;
    std::vector<std::pair<std::size_t, std::size_t>> index_edges;
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [number, pair] : edges) {
        std::size_t u = *vertices.index_of(pair.first);
        std::size_t v = *vertices.index_of(pair.second);
        auto normalized = std::minmax(u, v);
        auto key = std::make_pair(normalized.first, normalized.second);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            out.warnings.push_back("line " + std::to_string(number) + ": duplicate edge collapsed: " +
                                   pair.first + " " + pair.second);
            continue;
        }
        seen.push_back(key);
        index_edges.push_back(key);
    }
    out.graph = Graph(std::move(vertices), std::move(index_edges));
    return out;
}

std::string render_setsystem(const SetSystem& family) {
    std::ostringstream out;
    out << "ground:";
    for (const auto& label : family.ground().labels()) out << ' ' << label;
    out << '\n';
    for (const auto& member : family.members()) {
        out << "set:";
        for (const auto& label : family.labels_of(member)) out << ' ' << label;
        out << '\n';
    }
    return out.str();
}

std::string render_graph(const Graph& graph) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& label : graph.vertices().labels()) out << ' ' << label;
    out << '\n';
    for (const auto& [u, v] : graph.edges()) {
        out << "edge: " << graph.vertices().label(u) << ' ' << graph.vertices().label(v) << '\n';
    }
    return out.str();
}

SetSystem random_setsystem(std::size_t members, std::size_t ground_size, double density,
                           std::uint64_t seed) {
    if (members < 1) throw PreconditionError("random_setsystem: need at least one member");
    if (ground_size < 1) throw PreconditionError("random_setsystem: need a non-empty ground set");
    if (!(density >= 0.0 && density <= 1.0))
        throw PreconditionError("random_setsystem: density must be in [0, 1]");

    std::size_t pad = std::to_string(ground_size).size();
    std::vector<std::string> labels;
    labels.reserve(ground_size);
    for (std::size_t i = 1; i <= ground_size; ++i) {
        std::string digits = std::to_string(i);
        labels.push_back("e" + std::string(pad - digits.size(), '0') + digits);
    }

    std::mt19937_64 rng(seed);
    std::vector<ElementSet> masks(members, ElementSet(ground_size));
    for (std::size_t i = 0; i < members; ++i)
        for (std::size_t e = 0; e < ground_size; ++e)
            if (unit_draw(rng) < density) masks[i].set(e);
    return SetSystem(GroundSet(std::move(labels)), std::move(masks));
}

Graph random_graph(std::size_t vertex_count, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0))
        throw PreconditionError("random_graph: density must be in [0, 1]");
    std::size_t pad = std::to_string(vertex_count == 0 ? 1 : vertex_count).size();
    std::vector<std::string> labels;
    labels.reserve(vertex_count);
    for (std::size_t i = 1; i <= vertex_count; ++i) {
        std::string digits = std::to_string(i);
        labels.push_back("v" + std::string(pad - digits.size(), '0') + digits);
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < vertex_count; ++u)
        for (std::size_t v = u + 1; v < vertex_count; ++v)
            if (unit_draw(rng) < density) edges.emplace_back(u, v);
    return Graph(GroundSet(std::move(labels)), std::move(edges));
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(std::string_view text) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(text);
    std::string out(16, '0');
    for (std::size_t i = 16; i-- > 0; h >>= 4) out[i] = digits[h & 15];
    return out;
}

}  // namespace ke
