#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ketool/bitset.hpp"
#include "ketool/errors.hpp"

namespace ke {

/// The ambient universe a set-system draws its elements from. Labels are
/// opaque tokens; they are sorted lexicographically at construction and the
/// resulting order is the canonical index order for every mask.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> labels_;  // sorted, distinct
};

/// A subset of a GroundSet, as a membership mask in canonical ground order.
using ElementSet = Bitset;

/// A finite family of distinct subsets of a common ground set. Members are
/// stored ascending by mask value, so member indices are stable and every
/// derived output is deterministic. Duplicate members collapse at
/// construction; pass `warnings` to hear about it.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(GroundSet ground, std::vector<ElementSet> members,
              std::vector<std::string>* warnings = nullptr);

    /// Build from label lists. When `ground` is absent the ground set is the
    /// union of the given sets. Unknown labels (declared ground) throw.
    static SetSystem from_labels(const std::vector<std::vector<std::string>>& sets,
                                 std::optional<std::vector<std::string>> ground = std::nullopt,
                                 std::vector<std::string>* warnings = nullptr);

    const GroundSet& ground() const { return ground_; }
    std::size_t member_count() const { return members_.size(); }
    const ElementSet& member(std::size_t i) const { return members_[i]; }
    std::span<const ElementSet> members() const { return members_; }

    std::vector<std::string> labels_of(const ElementSet& set) const;

    /// Subfamily mask selecting every member.
    Bitset full_subfamily() const { return Bitset::full(members_.size()); }

    /// The family whose members are the selected subset, over the same ground.
    SetSystem restrict(const Bitset& subfamily) const;

    bool operator==(const SetSystem&) const = default;

private:
    GroundSet ground_;
    std::vector<ElementSet> members_;
};

/// The partition of the ground set by membership signature: an element's
/// signature is the set of member indices containing it. Only non-empty
/// cells are stored; querying an absent signature yields the empty set.
/// Cells are kept ascending by signature value.
class AtomProfile {
public:
    AtomProfile(std::size_t member_count, std::size_t ground_size,
                std::vector<std::pair<Bitset, ElementSet>> cells)
        : member_count_(member_count), ground_size_(ground_size), cells_(std::move(cells)) {}

    std::size_t member_count() const { return member_count_; }
    std::size_t ground_size() const { return ground_size_; }

    std::span<const std::pair<Bitset, ElementSet>> cells() const { return cells_; }

    /// Cell for a signature (a subfamily mask). Empty set when absent.
    ElementSet cell(const Bitset& signature) const;

private:
    std::size_t member_count_ = 0;
    std::size_t ground_size_ = 0;
    std::vector<std::pair<Bitset, ElementSet>> cells_;
};

/// Union of the selected members. The subfamily must be non-empty.
ElementSet family_union(const SetSystem& family, const Bitset& subfamily);

/// Intersection of the selected members. The subfamily must be non-empty.
ElementSet family_intersection(const SetSystem& family, const Bitset& subfamily);

/// Common member cardinality when the family is uniform with positive
/// member size, absent otherwise. The family must be non-empty.
std::optional<std::uint64_t> uniform_alpha(const SetSystem& family);

/// Whether |union| + |intersection| equals twice the common member size.
/// Requires a non-empty uniform family.
bool ke_check(const SetSystem& family);

/// Signature partition of the ground set. The family must be non-empty.
AtomProfile atom_profile(const SetSystem& family);

struct DualityResult {
    std::uint64_t lhs = 0;  // |intersection(g1) - union(g2)|
    std::uint64_t rhs = 0;  // |intersection(g2) - union(g1)|
    bool holds = false;
};

/// Evaluates both sides of the duality equality for two disjoint non-empty
/// subfamilies.
DualityResult duality_equality(const SetSystem& family, const Bitset& gamma1,
                               const Bitset& gamma2);

}  // namespace ke
