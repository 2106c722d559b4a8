#include "ketool/sets.hpp"

#include <algorithm>
#include <map>

namespace ke {

namespace {

std::string render_labels(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ' ';
        out += labels[i];
    }
    out += '}';
    return out;
}

void require_subfamily(const SetSystem& family, const Bitset& subfamily, const char* what) {
    if (subfamily.width() != family.member_count())
        throw PreconditionError(std::string(what) + ": subfamily mask width " +
                                std::to_string(subfamily.width()) + " does not match family size " +
                                std::to_string(family.member_count()));
    if (subfamily.none()) throw PreconditionError(std::string(what) + ": empty subfamily");
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

SetSystem::SetSystem(GroundSet ground, std::vector<ElementSet> members,
                     std::vector<std::string>* warnings)
    : ground_(std::move(ground)), members_(std::move(members)) {
    for (const auto& m : members_) {
        if (m.width() != ground_.size())
            throw PreconditionError("member mask width does not match ground size");
    }
    std::sort(members_.begin(), members_.end());
    auto first_dup = std::unique(members_.begin(), members_.end());
    if (first_dup != members_.end() && warnings) {
        for (auto it = first_dup; it != members_.end(); ++it)
            warnings->push_back("duplicate set collapsed: " + render_labels(labels_of(*it)));
    }
    members_.erase(first_dup, members_.end());
}

SetSystem SetSystem::from_labels(const std::vector<std::vector<std::string>>& sets,
                                 std::optional<std::vector<std::string>> ground,
                                 std::vector<std::string>* warnings) {
    GroundSet gs;
    if (ground) {
        gs = GroundSet(std::move(*ground));
    } else {
        std::vector<std::string> all;
        for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
        gs = GroundSet(std::move(all));
    }
    std::vector<ElementSet> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) {
        ElementSet mask(gs.size());
        for (const auto& label : s) {
            auto idx = gs.index_of(label);
            if (!idx) throw PreconditionError("unknown label '" + label + "'");
            mask.set(*idx);
        }
        masks.push_back(std::move(mask));
    }
    return SetSystem(std::move(gs), std::move(masks), warnings);
}

std::vector<std::string> SetSystem::labels_of(const ElementSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.count());
    for (std::size_t i = set.find_first(); i != Bitset::npos; i = set.find_next(i))
        out.push_back(ground_.label(i));
    return out;
}

SetSystem SetSystem::restrict(const Bitset& subfamily) const {
    require_subfamily(*this, subfamily, "restrict");
    std::vector<ElementSet> picked;
    picked.reserve(subfamily.count());
    for (std::size_t i = subfamily.find_first(); i != Bitset::npos; i = subfamily.find_next(i))
        picked.push_back(members_[i]);
    return SetSystem(ground_, std::move(picked));
}

ElementSet AtomProfile::cell(const Bitset& signature) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), signature,
                               [](const auto& entry, const Bitset& key) { return entry.first < key; });
    if (it != cells_.end() && it->first == signature) return it->second;
    return ElementSet(ground_size_);
}

ElementSet family_union(const SetSystem& family, const Bitset& subfamily) {
    require_subfamily(family, subfamily, "family_union");
    ElementSet out(family.ground().size());
    for (std::size_t i = subfamily.find_first(); i != Bitset::npos; i = subfamily.find_next(i))
        out |= family.member(i);
    return out;
}

ElementSet family_intersection(const SetSystem& family, const Bitset& subfamily) {
    require_subfamily(family, subfamily, "family_intersection");
    std::size_t first = subfamily.find_first();
    ElementSet out = family.member(first);
    for (std::size_t i = subfamily.find_next(first); i != Bitset::npos; i = subfamily.find_next(i))
        out &= family.member(i);
    return out;
}

std::optional<std::uint64_t> uniform_alpha(const SetSystem& family) {
    if (family.member_count() == 0) throw PreconditionError("uniform_alpha: empty family");
    std::uint64_t size = family.member(0).count();
    for (std::size_t i = 1; i < family.member_count(); ++i)
        if (family.member(i).count() != size) return std::nullopt;
    if (size == 0) return std::nullopt;  // a positive common cardinality is required
    return size;
}

bool ke_check(const SetSystem& family) {
    if (family.member_count() == 0) throw PreconditionError("ke_check: empty family");
    auto alpha = uniform_alpha(family);
    if (!alpha) throw PreconditionError("ke_check: family is not uniform with positive member size");
    Bitset all = family.full_subfamily();
    std::uint64_t total = family_union(family, all).count() + family_intersection(family, all).count();
    return total == 2 * *alpha;
}

AtomProfile atom_profile(const SetSystem& family) {
    if (family.member_count() == 0) throw PreconditionError("atom_profile: empty family");
    const std::size_t n = family.ground().size();
    const std::size_t m = family.member_count();
    std::map<Bitset, ElementSet> cells;
    for (std::size_t e = 0; e < n; ++e) {
        Bitset signature(m);
        for (std::size_t j = 0; j < m; ++j)
            if (family.member(j).test(e)) signature.set(j);
        auto [it, inserted] = cells.try_emplace(std::move(signature), ElementSet(n));
        it->second.set(e);
    }
    std::vector<std::pair<Bitset, ElementSet>> flat(cells.begin(), cells.end());
    return AtomProfile(m, n, std::move(flat));
}

DualityResult duality_equality(const SetSystem& family, const Bitset& gamma1, const Bitset& gamma2) {
    require_subfamily(family, gamma1, "duality_equality");
    require_subfamily(family, gamma2, "duality_equality");
    if (gamma1.intersects(gamma2))
        throw PreconditionError("duality_equality: subfamilies overlap");
    ElementSet left = family_intersection(family, gamma1) - family_union(family, gamma2);
    ElementSet right = family_intersection(family, gamma2) - family_union(family, gamma1);
    DualityResult r;
    r.lhs = left.count();
    r.rhs = right.count();
    r.holds = (r.lhs == r.rhs);
    return r;
}

}  // namespace ke
