#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ketool/graph.hpp"
#include "ketool/sets.hpp"

namespace ke {

struct ParsedSetSystem {
    SetSystem system;
    std::vector<std::string> warnings;
};

/// Line-oriented set-system format: `ground:` and `set:` directives,
/// whitespace-separated tokens, `#` comments. The ground set defaults to
/// the union of the members when not declared.
ParsedSetSystem parse_setsystem(std::string_view text);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// Edge-list format: `vertices:` and `edge:` directives. Loops are
/// rejected; duplicate edges collapse with a warning.
ParsedGraph parse_graph(std::string_view text);

/// Canonical rendering; parse(render(x)) == x.
std::string render_setsystem(const SetSystem& family);
std::string render_graph(const Graph& graph);

/// Random family: each element joins each member independently with the
/// given density. Deterministic for a fixed seed.
SetSystem random_setsystem(std::size_t members, std::size_t ground_size, double density,
                           std::uint64_t seed);

/// Random graph with the given edge density, for test corpora.
Graph random_graph(std::size_t vertex_count, double density, std::uint64_t seed);

/// FNV-1a 64-bit digest, printed as fixed-width hex elsewhere.
std::uint64_t fnv1a(std::string_view text);
std::string fnv1a_hex(std::string_view text);

}  // namespace ke
