#include "ketool/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>

#include "ketool/enumerate.hpp"
#include "ketool/errors.hpp"

namespace ke {

namespace {

void require_vertex_cap(const Graph& graph, std::size_t vertex_cap, const char* who) {
    if (graph.vertex_count() > vertex_cap)
        throw PreconditionError(std::string(who) + ": " + std::to_string(graph.vertex_count()) +
                                " vertices exceed the exact-search cap of " +
                                std::to_string(vertex_cap));
    if (graph.vertex_count() > 64)
        throw PreconditionError(std::string(who) + ": more than 64 vertices are not supported");
}

std::vector<std::uint64_t> adjacency_words(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [u, v] : graph.edges()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

// Exhaustive max matching over edge subsets; the certification route.
std::uint64_t max_matching_by_edge_subsets(std::span<const std::pair<std::size_t, std::size_t>> edges) {
    std::function<std::uint64_t(std::size_t, std::uint64_t)> go =
        [&](std::size_t i, std::uint64_t used) -> std::uint64_t {
        if (i == edges.size()) return 0;
        std::uint64_t best = go(i + 1, used);
        std::uint64_t bits =
            (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second);
        if ((used & bits) == 0) best = std::max(best, 1 + go(i + 1, used | bits));
        return best;
    };
    return go(0, 0);
}

}  // namespace

Graph::Graph(GroundSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::string>* warnings)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const std::size_t n = vertices_.size();
    for (auto& [u, v] : edges_) {
        if (u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u == v)
            throw PreconditionError("loop edge at '" + vertices_.label(u) + "' not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto first_dup = std::unique(edges_.begin(), edges_.end());
    if (first_dup != edges_.end() && warnings) {
        for (auto it = first_dup; it != edges_.end(); ++it)
            warnings->push_back("duplicate edge collapsed: " + vertices_.label(it->first) + " " +
                                vertices_.label(it->second));
    }
    edges_.erase(first_dup, edges_.end());
    adjacency_.assign(n, Bitset(n));
    for (const auto& [u, v] : edges_) {
        adjacency_[u].set(v);
        adjacency_[v].set(u);
    }
}

Graph Graph::from_labels(const std::vector<std::string>& vertex_labels,
                         const std::vector<std::pair<std::string, std::string>>& edge_labels,
                         std::vector<std::string>* warnings) {
    std::vector<std::string> all = vertex_labels;
    for (const auto& [a, b] : edge_labels) {
        all.push_back(a);
        all.push_back(b);
    }
    GroundSet vertices(std::move(all));
    if (!vertex_labels.empty()) {
        // Declared vertex list: every endpoint must be declared.
        GroundSet declared{std::vector<std::string>(vertex_labels)};
        for (const auto& [a, b] : edge_labels) {
            if (!declared.index_of(a)) throw PreconditionError("unknown vertex '" + a + "'");
            if (!declared.index_of(b)) throw PreconditionError("unknown vertex '" + b + "'");
        }
        vertices = std::move(declared);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(edge_labels.size());
    for (const auto& [a, b] : edge_labels)
        edges.emplace_back(*vertices.index_of(a), *vertices.index_of(b));
    return Graph(std::move(vertices), std::move(edges), warnings);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return u < vertex_count() && v < vertex_count() && adjacency_[u].test(v);
}

Bitset Matching::covered(std::size_t vertex_count) const {
    Bitset out(vertex_count);
    for (const auto& [u, v] : edges) {
        out.set(u);
        out.set(v);
    }
    return out;
}

OmegaFamily independence(const Graph& graph, std::size_t vertex_cap) {
    require_vertex_cap(graph, vertex_cap, "independence");
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint64_t> adj = adjacency_words(graph);
    std::vector<std::uint64_t> closed(n);
    for (std::size_t v = 0; v < n; ++v) closed[v] = adj[v] | (std::uint64_t{1} << v);

    const std::uint64_t everything = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    // Greedy min-degree seed, used purely as a pruning bound.
    std::size_t greedy = 0;
    for (std::uint64_t cand = everything; cand != 0;) {
        std::size_t pick = 64;
        int pick_degree = 65;
        for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            int degree = std::popcount(adj[v] & cand);
            if (degree < pick_degree) {
                pick_degree = degree;
                pick = v;
            }
        }
        ++greedy;
        cand &= ~closed[pick];
    }

    std::size_t best = greedy;
    std::vector<std::uint64_t> found;
    std::function<void(std::uint64_t, std::size_t, std::uint64_t)> dfs =
        [&](std::uint64_t current, std::size_t size, std::uint64_t cand) {
            if (cand == 0) {
                if (size > best) {
                    best = size;
                    found.clear();
                }
                if (size == best) found.push_back(current);
                return;
            }
            if (size + static_cast<std::size_t>(std::popcount(cand)) < best) return;
            std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
            dfs(current | (std::uint64_t{1} << v), size + 1, cand & ~closed[v]);
            dfs(current, size, cand & ~(std::uint64_t{1} << v));
        };
    dfs(0, 0, everything);

    std::vector<ElementSet> members;
    members.reserve(found.size());
    for (std::uint64_t word : found) {
        ElementSet set(n);
        for (std::uint64_t rest = word; rest != 0; rest &= rest - 1)
            set.set(static_cast<std::size_t>(std::countr_zero(rest)));
        members.push_back(std::move(set));
    }
    OmegaFamily omega;
    omega.sets = SetSystem(graph.vertices(), std::move(members));
    omega.alpha = best;
    return omega;
}

MatchingResult matching_number(const Graph& graph, std::size_t vertex_cap) {
    require_vertex_cap(graph, vertex_cap, "matching_number");
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint64_t> adj = adjacency_words(graph);
    const std::uint64_t everything = (n == 64) ? ~std::uint64_t{0}
                                               : (n == 0 ? 0 : ((std::uint64_t{1} << n) - 1));

    std::unordered_map<std::uint64_t, std::uint32_t> memo;
    std::function<std::uint32_t(std::uint64_t)> mu = [&](std::uint64_t avail) -> std::uint32_t {
        if (avail == 0) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        std::size_t v = static_cast<std::size_t>(std::countr_zero(avail));
        std::uint64_t without_v = avail & ~(std::uint64_t{1} << v);
        std::uint32_t best = mu(without_v);
        for (std::uint64_t rest = adj[v] & avail; rest != 0; rest &= rest - 1) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            best = std::max(best, 1 + mu(without_v & ~(std::uint64_t{1} << u)));
        }
        memo.emplace(avail, best);
        return best;
    };

    MatchingResult result;
    result.number = mu(everything);

    // Replay the optimal decisions to extract one maximum matching.
    std::uint64_t avail = everything;
    while (avail != 0) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(avail));
        std::uint64_t without_v = avail & ~(std::uint64_t{1} << v);
        if (mu(without_v) == mu(avail)) {
            avail = without_v;
            continue;
        }
        bool matched = false;
        for (std::uint64_t rest = adj[v] & avail; rest != 0; rest &= rest - 1) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(rest));
            if (1 + mu(without_v & ~(std::uint64_t{1} << u)) == mu(avail)) {
                result.matching.edges.emplace_back(v, u);
                avail = without_v & ~(std::uint64_t{1} << u);
                matched = true;
                break;
            }
        }
        if (!matched) throw TheoremViolation("matching reconstruction lost the optimum");
    }
    std::sort(result.matching.edges.begin(), result.matching.edges.end());

    if (result.matching.edges.size() != result.number)
        throw TheoremViolation("reconstructed matching has the wrong size");
    if (graph.edge_count() <= kMatchingCertifyEdgeCap) {
        if (max_matching_by_edge_subsets(graph.edges()) != result.number)
            throw TheoremViolation("matching number disagrees with the edge-subset search");
    }
    return result;
}

bool is_ke_graph(const Graph& graph, std::size_t vertex_cap) {
    return independence(graph, vertex_cap).alpha + matching_number(graph, vertex_cap).number ==
           graph.vertex_count();
}

HkeVerdict omega_is_hke(const Graph& graph, std::size_t vertex_cap) {
    OmegaFamily omega = independence(graph, vertex_cap);
    HkeVerdict verdict = hke_partition(omega.sets);
    if (omega.sets.member_count() <= 8) {
        HkeVerdict brute = hke_bruteforce(omega.sets);
        if (brute.holds != verdict.holds)
            throw TheoremViolation("partition oracle disagrees with brute force on omega");
    }
    return verdict;
}

KeSubfamilyReport ke_subfamily_implies_hke(const Graph& graph, const OmegaFamily& omega,
                                           const Bitset& subfamily) {
    if (!(omega.sets.ground() == graph.vertices()))
        throw PreconditionError("ke_subfamily_implies_hke: omega family belongs to another graph");
    SetSystem family = omega.sets.restrict(subfamily);
    KeSubfamilyReport report;
    Bitset all = family.full_subfamily();
    report.union_size = family_union(family, all).count();
    report.intersection_size = family_intersection(family, all).count();
    report.applicable = ke_check(family);
    if (report.applicable) {
        report.partition_verdict = hke_partition(family);
        if (!report.partition_verdict->holds)
            throw TheoremViolation(
                "a KE family of maximum independent sets failed the partition oracle");
    }
    return report;
}

KeSubfamilyReport ke_subfamily_implies_hke(const Graph& graph, const SetSystem& family) {
    if (family.member_count() == 0)
        throw PreconditionError("ke_subfamily_implies_hke: empty family");
    if (!(family.ground() == graph.vertices()))
        throw PreconditionError("ke_subfamily_implies_hke: family ground is not the vertex set");
    OmegaFamily omega = independence(graph);
    Bitset subfamily(omega.sets.member_count());
    for (const auto& member : family.members()) {
        auto members = omega.sets.members();
        auto it = std::lower_bound(members.begin(), members.end(), member);
        if (it == members.end() || !(*it == member))
            throw PreconditionError(
                "ke_subfamily_implies_hke: a member is not a maximum independent set");
        subfamily.set(static_cast<std::size_t>(it - members.begin()));
    }
    return ke_subfamily_implies_hke(graph, omega, subfamily);
}

std::optional<Matching> saturating_matching(const Graph& graph, const Bitset& from,
                                            const Bitset& into) {
    const std::size_t n = graph.vertex_count();
    if (from.width() != n || into.width() != n)
        throw PreconditionError("saturating_matching: vertex-set width mismatch");
    if (from.intersects(into))
        throw PreconditionError("saturating_matching: the two vertex sets overlap");

    std::vector<std::size_t> matched_from(n, Bitset::npos);  // into-vertex -> from-vertex
    std::vector<bool> visited(n, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) -> bool {
        Bitset candidates = graph.neighbors(x) & into;
        for (std::size_t y = candidates.find_first(); y != Bitset::npos;
             y = candidates.find_next(y)) {
            if (visited[y]) continue;
            visited[y] = true;
            if (matched_from[y] == Bitset::npos || augment(matched_from[y])) {
                matched_from[y] = x;
                return true;
            }
        }
        return false;
    };

    for (std::size_t x = from.find_first(); x != Bitset::npos; x = from.find_next(x)) {
        std::fill(visited.begin(), visited.end(), false);
        if (!augment(x)) return std::nullopt;
    }

    Matching matching;
    for (std::size_t y = 0; y < n; ++y) {
        if (matched_from[y] != Bitset::npos)
            matching.edges.emplace_back(std::min(matched_from[y], y), std::max(matched_from[y], y));
    }
    std::sort(matching.edges.begin(), matching.edges.end());
    return matching;
}

CharacterizationReport verify_characterization(const Graph& graph, std::size_t search_cap,
                                               std::size_t vertex_cap) {
    CharacterizationReport report;
    report.omega = independence(graph, vertex_cap);
    report.alpha = report.omega.alpha;
    report.mu = matching_number(graph, vertex_cap).number;
    report.ke = (report.alpha + report.mu == graph.vertex_count());

    const std::size_t m = report.omega.sets.member_count();
    if (m > search_cap)
        throw PreconditionError("verify_characterization: " + std::to_string(m) +
                                " maximum independent sets exceed the search cap of " +
                                std::to_string(search_cap));

    auto try_certificate = [&](const Bitset& subfamily) -> std::optional<Certificate> {
        SetSystem family = report.omega.sets.restrict(subfamily);
        HkeVerdict partition = hke_partition(family);
        if (!partition.holds) return std::nullopt;
        Bitset all = family.full_subfamily();
        ElementSet uni = family_union(family, all);
        ElementSet inter = family_intersection(family, all);
        Bitset outside = uni.complemented();
        auto matching = saturating_matching(graph, outside, inter);
        if (!matching) return std::nullopt;
        Certificate cert;
        cert.subfamily = subfamily;
        cert.union_size = uni.count();
        cert.intersection_size = inter.count();
        cert.outside_size = outside.count();
        cert.matching = std::move(*matching);
        cert.partition_holds = true;
        if (family.member_count() <= kPairsMemberCap) {
            HkeVerdict pairs = hke_pairs(family);
            if (!pairs.holds)
                throw TheoremViolation("pairs oracle fails on a family passing the partition oracle");
            cert.pairs_holds = true;
        }
        return cert;
    };

    report.full_omega_certifies = try_certificate(report.omega.sets.full_subfamily()).has_value();

    if (report.ke) {
        for_each_subfamily(m, [&](const std::vector<std::size_t>& idx) {
            auto cert = try_certificate(Bitset::from_indices(m, idx));
            if (cert) {
                report.certificate = std::move(*cert);
                return false;
            }
            return true;
        });
        if (!report.certificate) throw TheoremViolation("KE graph admits no certificate");
    } else {
        bool any = !for_each_subfamily(m, [&](const std::vector<std::size_t>& idx) {
            return !try_certificate(Bitset::from_indices(m, idx)).has_value();
        });
        if (any) throw TheoremViolation("certificate found on a graph that is not KE");
        report.converse_exhausted = true;
    }
    return report;
}

}  // namespace ke
