#include "ketool/hke.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ketool/enumerate.hpp"
#include "ketool/errors.hpp"

namespace ke {

namespace {

// Nonuniform or all-empty families fail before any enumeration.
std::optional<Witness> uniformity_witness(const SetSystem& family) {
    const std::size_t m = family.member_count();
    std::uint64_t first_size = family.member(0).count();
    for (std::size_t j = 1; j < m; ++j) {
        std::uint64_t size_j = family.member(j).count();
        if (size_j != first_size) {
            return Witness{WitnessKind::Nonuniform, Bitset::of(m, {0}), Bitset::of(m, {j}),
                           first_size, size_j};
        }
    }
    if (first_size == 0)
        return Witness{WitnessKind::AlphaNotPositive, Bitset::full(m), Bitset(m), 0, 0};
    return std::nullopt;
}

HkeVerdict failing_verdict(const SetSystem& family, Oracle method, Witness witness) {
    HkeVerdict v;
    v.method = method;
    v.holds = false;
    v.witness = std::move(witness);
    if (!witness_is_violation(family, *v.witness))
        throw TheoremViolation("oracle produced a witness that does not replay");
    return v;
}

HkeVerdict holding_verdict(const SetSystem& family, Oracle method, std::uint64_t alpha) {
    if (alpha == 0) throw TheoremViolation("holding verdict with alpha 0");
    for (std::size_t i = 0; i < family.member_count(); ++i) {
        if (family.member(i).count() != alpha)
            throw TheoremViolation("holding verdict on a family with a member of size != alpha");
    }
    HkeVerdict v;
    v.method = method;
    v.holds = true;
    v.alpha = alpha;
    return v;
}

void require_nonempty(const SetSystem& family, const char* who) {
    if (family.member_count() == 0) throw PreconditionError(std::string(who) + ": empty family");
}

}  // namespace

std::string_view oracle_name(Oracle method) {
    switch (method) {
        case Oracle::BruteForce: return "brute-force";
        case Oracle::Pairs: return "pairs";
        case Oracle::Partition: return "partition";
    }
    return "?";
}

std::string_view witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Nonuniform: return "nonuniform";
        case WitnessKind::AlphaNotPositive: return "alpha-not-positive";
        case WitnessKind::Parity: return "parity";
        case WitnessKind::Subset: return "subset-violation";
        case WitnessKind::Pair: return "pair-violation";
    }
    return "?";
}

HkeVerdict hke_bruteforce(const SetSystem& family, std::size_t member_cap) {
    require_nonempty(family, "hke_bruteforce");
    const std::size_t m = family.member_count();
    if (m > member_cap)
        throw PreconditionError("hke_bruteforce: " + std::to_string(m) +
                                " members exceed the enumeration cap of " +
                                std::to_string(member_cap) + "; use hke_partition instead");
    if (auto w = uniformity_witness(family)) return failing_verdict(family, Oracle::BruteForce, *w);

    const std::uint64_t alpha = family.member(0).count();
    const std::size_t n = family.ground().size();
    ElementSet uni(n), inter(n);
    std::optional<Witness> found;
    for_each_subfamily(m, [&](const std::vector<std::size_t>& idx) {
        uni = family.member(idx[0]);
        inter = family.member(idx[0]);
        for (std::size_t t = 1; t < idx.size(); ++t) {
            uni |= family.member(idx[t]);
            inter &= family.member(idx[t]);
        }
        std::uint64_t total = uni.count() + inter.count();
        if (total != 2 * alpha) {
            found = Witness{WitnessKind::Subset, Bitset::from_indices(m, idx), Bitset(m), total,
                            2 * alpha};
            return false;
        }
        return true;
    });
    if (found) return failing_verdict(family, Oracle::BruteForce, *found);
    return holding_verdict(family, Oracle::BruteForce, alpha);
}

HkeVerdict hke_pairs(const SetSystem& family, std::size_t member_cap) {
    require_nonempty(family, "hke_pairs");
    const std::size_t m = family.member_count();
    if (m > member_cap)
        throw PreconditionError("hke_pairs: " + std::to_string(m) +
                                " members exceed the enumeration cap of " +
                                std::to_string(member_cap) + "; use hke_partition instead");
    if (auto w = uniformity_witness(family)) return failing_verdict(family, Oracle::Pairs, *w);

    const std::size_t n = family.ground().size();
    ElementSet inter1(n), inter2(n), uni1(n), uni2(n);
    std::optional<Witness> found;
    for_each_disjoint_pair(m, [&](const std::vector<std::size_t>& g1,
                                  const std::vector<std::size_t>& g2) {
        inter1 = family.member(g1[0]);
        uni1 = family.member(g1[0]);
        for (std::size_t t = 1; t < g1.size(); ++t) {
            inter1 &= family.member(g1[t]);
            uni1 |= family.member(g1[t]);
        }
        inter2 = family.member(g2[0]);
        uni2 = family.member(g2[0]);
        for (std::size_t t = 1; t < g2.size(); ++t) {
            inter2 &= family.member(g2[t]);
            uni2 |= family.member(g2[t]);
        }
        std::uint64_t lhs = (inter1 - uni2).count();
        std::uint64_t rhs = (inter2 - uni1).count();
        if (lhs != rhs) {
            found = Witness{WitnessKind::Pair, Bitset::from_indices(m, g1),
                            Bitset::from_indices(m, g2), lhs, rhs};
            return false;
        }
        return true;
    });
    if (found) return failing_verdict(family, Oracle::Pairs, *found);
    return holding_verdict(family, Oracle::Pairs, family.member(0).count());
}

HkeVerdict hke_partition(const SetSystem& family) {
    require_nonempty(family, "hke_partition");
    const std::size_t m = family.member_count();
    const Bitset all = family.full_subfamily();
    const std::uint64_t total =
        family_union(family, all).count() + family_intersection(family, all).count();
    if (total % 2 != 0) {
        return failing_verdict(family, Oracle::Partition,
                               Witness{WitnessKind::Parity, all, Bitset(m), total, 0});
    }
    const std::uint64_t alpha = total / 2;
    if (alpha == 0) {
        return failing_verdict(family, Oracle::Partition,
                               Witness{WitnessKind::AlphaNotPositive, all, Bitset(m), 0, 0});
    }

    // Every violation of |cell(S)| = |cell(complement)| shows up at some
    // non-empty cell, so scanning only the stored cells decides the whole
    // quantifier. The first offender in signature order wins.
    AtomProfile profile = atom_profile(family);
    const Bitset empty_signature(m);
    for (const auto& [signature, cell] : profile.cells()) {
        if (signature == empty_signature || signature == all) continue;
        Bitset complement = signature.complemented();
        std::uint64_t lhs = cell.count();
        std::uint64_t rhs = profile.cell(complement).count();
        if (lhs != rhs) {
            return failing_verdict(family, Oracle::Partition,
                                   Witness{WitnessKind::Pair, signature, complement, lhs, rhs});
        }
    }
    return holding_verdict(family, Oracle::Partition, alpha);
}

std::pair<std::uint64_t, std::uint64_t> replay_witness(const SetSystem& family,
                                                       const Witness& witness) {
    switch (witness.kind) {
        case WitnessKind::Nonuniform: {
            std::size_t i = witness.gamma1.find_first();
            std::size_t j = witness.gamma2.find_first();
            if (i == Bitset::npos || j == Bitset::npos)
                throw PreconditionError("replay_witness: nonuniform witness without members");
            return {family.member(i).count(), family.member(j).count()};
        }
        case WitnessKind::AlphaNotPositive: {
            std::uint64_t largest = 0;
            for (const auto& member : family.members())
                largest = std::max<std::uint64_t>(largest, member.count());
            return {largest, 0};
        }
        case WitnessKind::Parity: {
            std::uint64_t total = family_union(family, witness.gamma1).count() +
                                  family_intersection(family, witness.gamma1).count();
            return {total, 0};
        }
        case WitnessKind::Subset: {
            std::uint64_t total = family_union(family, witness.gamma1).count() +
                                  family_intersection(family, witness.gamma1).count();
            auto alpha = uniform_alpha(family);
            return {total, alpha ? 2 * *alpha : 0};
        }
        case WitnessKind::Pair: {
            DualityResult r = duality_equality(family, witness.gamma1, witness.gamma2);
            return {r.lhs, r.rhs};
        }
    }
    throw PreconditionError("replay_witness: unknown witness kind");
}

bool witness_is_violation(const SetSystem& family, const Witness& witness) {
    auto [lhs, rhs] = replay_witness(family, witness);
    if (lhs != witness.lhs || rhs != witness.rhs) return false;
    switch (witness.kind) {
        case WitnessKind::Nonuniform: return lhs != rhs;
        case WitnessKind::AlphaNotPositive: return lhs == 0;
        case WitnessKind::Parity: return lhs % 2 == 1;
        case WitnessKind::Subset: return lhs != rhs;
        case WitnessKind::Pair: return lhs != rhs;
    }
    return false;
}

EquivalenceReport equivalence_audit(const SetSystem& family) {
    auto timed = [&](auto&& oracle) {
        OracleRun run;
        auto start = std::chrono::steady_clock::now();
        run.verdict = oracle(family);
        run.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start);
        return run;
    };
    EquivalenceReport report;
    report.brute_force = timed([](const SetSystem& f) { return hke_bruteforce(f); });
    report.pairs = timed([](const SetSystem& f) { return hke_pairs(f); });
    report.partition = timed([](const SetSystem& f) { return hke_partition(f); });
    bool b = report.brute_force.verdict.holds;
    bool p = report.pairs.verdict.holds;
    bool q = report.partition.verdict.holds;
    if (b != p || b != q) {
        throw TheoremViolation(std::string("oracle disagreement: brute-force=") +
                               (b ? "holds" : "fails") + " pairs=" + (p ? "holds" : "fails") +
                               " partition=" + (q ? "holds" : "fails"));
    }
    report.holds = b;
    return report;
}

SetSystem generate_hke(std::size_t members, std::uint64_t cell_size_bound, std::uint64_t seed) {
    if (members < 1 || members > 16)
        throw PreconditionError("generate_hke: member count must be in [1, 16]");
    if (cell_size_bound < 1)
        throw PreconditionError("generate_hke: cell size bound must be positive");

    const std::uint64_t full = (members == 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << members) - 1);
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return rng() % (cell_size_bound + 1); };

    // One draw per unordered complement pair {S, ~S}; the representative is
    // the side containing member 0. Then the core (signature = everything).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sized_signatures;  // (signature, size)
    std::uint64_t per_member = 0;  // every member receives exactly one side of each pair
    for (std::uint64_t s = 1; s < full; ++s) {
        if ((s & 1) == 0) continue;
        std::uint64_t size = draw();
        per_member += size;
        if (size > 0) {
            sized_signatures.emplace_back(s, size);
            sized_signatures.emplace_back(full & ~s, size);
        }
    }
    std::uint64_t core = draw();
    if (per_member + core == 0) core = 1;  // alpha must be positive
    if (core > 0) sized_signatures.emplace_back(full, core);

    std::sort(sized_signatures.begin(), sized_signatures.end());

    std::uint64_t total = 0;
    for (const auto& [sig, size] : sized_signatures) total += size;
    if (total > 200000) throw PreconditionError("generate_hke: parameters give too many elements");

    std::size_t pad = std::to_string(total).size();
    std::vector<std::string> labels;
    labels.reserve(total);
    std::vector<ElementSet> member_masks(members, ElementSet(total));
    std::uint64_t next = 0;
    for (const auto& [sig, size] : sized_signatures) {
        for (std::uint64_t c = 0; c < size; ++c) {
            std::string digits = std::to_string(next + 1);
            labels.push_back("e" + std::string(pad - digits.size(), '0') + digits);
            for (std::size_t j = 0; j < members; ++j)
                if ((sig >> j) & 1) member_masks[j].set(next);
            ++next;
        }
    }
    return SetSystem(GroundSet(std::move(labels)), std::move(member_masks));
}

ExerciseReport exercise_identities(const SetSystem& family) {
    if (family.member_count() != 4)
        throw PreconditionError("exercise_identities: family must have exactly 4 members");
    HkeVerdict verdict = hke_partition(family);
    if (!verdict.holds)
        throw PreconditionError("exercise_identities: family does not pass the partition oracle");

    const ElementSet& a = family.member(0);
    const ElementSet& b = family.member(1);
    const ElementSet& c = family.member(2);
    const ElementSet& d = family.member(3);

    ExerciseReport report;
    report.difference_identity.lhs = (a - b - c).count();
    report.difference_identity.rhs = ((b & c) - a).count();
    report.difference_identity.holds =
        report.difference_identity.lhs == report.difference_identity.rhs;

    report.pair_difference_identity.lhs = ((a & b) - c - d).count();
    report.pair_difference_identity.rhs = ((c & d) - a - b).count();
    report.pair_difference_identity.holds =
        report.pair_difference_identity.lhs == report.pair_difference_identity.rhs;

    if (!report.difference_identity.holds || !report.pair_difference_identity.holds)
        throw TheoremViolation("four-member identity failed on a family passing the partition oracle");
    return report;
}

}  // namespace ke
