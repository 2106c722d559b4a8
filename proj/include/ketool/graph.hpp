#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ketool/hke.hpp"
#include "ketool/sets.hpp"

namespace ke {

/// Simple undirected graph over a labeled vertex set. No loops, no parallel
/// edges; vertex order is the canonical ground order; the edge list is kept
/// sorted with each pair (u, v) normalized to u < v.
class Graph {
public:
    Graph() = default;
    Graph(GroundSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
          std::vector<std::string>* warnings = nullptr);

    static Graph from_labels(const std::vector<std::string>& vertex_labels,
                             const std::vector<std::pair<std::string, std::string>>& edge_labels,
                             std::vector<std::string>* warnings = nullptr);

    std::size_t vertex_count() const { return vertices_.size(); }
    const GroundSet& vertices() const { return vertices_; }
    std::span<const std::pair<std::size_t, std::size_t>> edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
    bool has_edge(std::size_t u, std::size_t v) const;

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    GroundSet vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<Bitset> adjacency_;
};

/// A set of pairwise vertex-disjoint edges, normalized and sorted.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const { return edges.size(); }
    Bitset covered(std::size_t vertex_count) const;
};

/// All maximum independent sets of a graph, as a set-system over the
/// graph's vertex ground set, together with the independence number.
struct OmegaFamily {
    SetSystem sets;
    std::uint64_t alpha = 0;
};

inline constexpr std::size_t kExactSearchVertexCap = 24;
inline constexpr std::size_t kMatchingCertifyEdgeCap = 20;

/// Branch-and-bound enumeration of every maximum independent set, seeded
/// with a greedy lower bound. Requires vertex_count <= cap.
OmegaFamily independence(const Graph& graph, std::size_t vertex_cap = kExactSearchVertexCap);

struct MatchingResult {
    std::uint64_t number = 0;
    Matching matching;
};

/// Maximum matching by memoized include/exclude search on the lowest
/// uncovered vertex. When the graph has at most kMatchingCertifyEdgeCap
/// edges the size is re-derived by an independent edge-subset search and a
/// mismatch throws TheoremViolation. Requires vertex_count <= cap.
MatchingResult matching_number(const Graph& graph, std::size_t vertex_cap = kExactSearchVertexCap);

/// alpha(G) + mu(G) == |V(G)|.
bool is_ke_graph(const Graph& graph, std::size_t vertex_cap = kExactSearchVertexCap);

/// Partition-oracle verdict on the family of all maximum independent sets,
/// cross-checked against the brute-force oracle when the family is small.
HkeVerdict omega_is_hke(const Graph& graph, std::size_t vertex_cap = kExactSearchVertexCap);

struct KeSubfamilyReport {
    bool applicable = false;  // the selected family satisfies the KE equality
    std::uint64_t union_size = 0;
    std::uint64_t intersection_size = 0;
    std::optional<HkeVerdict> partition_verdict;  // present when applicable
};

/// For a family of maximum independent sets: if it satisfies the KE
/// equality it must pass the partition oracle (a failure there throws
/// TheoremViolation); otherwise the report says not applicable.
KeSubfamilyReport ke_subfamily_implies_hke(const Graph& graph, const OmegaFamily& omega,
                                           const Bitset& subfamily);

/// Validating overload: every member of `family` must be a maximum
/// independent set of the graph.
KeSubfamilyReport ke_subfamily_implies_hke(const Graph& graph, const SetSystem& family);

/// A matching that uses only edges between `from` and `into` and covers
/// every vertex of `from`, or absent when none exists. The two vertex sets
/// must be disjoint. Decided exactly by alternating-path augmentation.
std::optional<Matching> saturating_matching(const Graph& graph, const Bitset& from,
                                            const Bitset& into);

/// A subfamily of the maximum independent sets that certifies KE-ness:
/// it passes the partition oracle and admits a matching saturating the
/// vertices outside its union into its intersection.
struct Certificate {
    Bitset subfamily;  // indices into the canonical order of the omega family
    std::uint64_t union_size = 0;
    std::uint64_t intersection_size = 0;
    std::uint64_t outside_size = 0;  // |V - union|
    Matching matching;
    bool partition_holds = false;
    std::optional<bool> pairs_holds;  // absent when the subfamily exceeds the pairs cap
};

struct CharacterizationReport {
    bool ke = false;
    std::uint64_t alpha = 0;
    std::uint64_t mu = 0;
    OmegaFamily omega;
    std::optional<Certificate> certificate;
    // True when the graph is not KE and every subfamily was confirmed
    // non-certifying; unset for KE graphs.
    std::optional<bool> converse_exhausted;
    bool full_omega_certifies = false;
};

/// Searches subfamilies of the maximum-independent-set family in increasing
/// size then lexicographic order for a certificate. A KE graph without a
/// certificate, or a certificate on a non-KE graph, throws TheoremViolation.
/// Requires the omega family to have at most `search_cap` members.
CharacterizationReport verify_characterization(const Graph& graph, std::size_t search_cap = 20,
                                               std::size_t vertex_cap = kExactSearchVertexCap);

}  // namespace ke
