#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ketool/sets.hpp"

namespace ke {

enum class Oracle { BruteForce, Pairs, Partition };

std::string_view oracle_name(Oracle method);

enum class WitnessKind {
    Nonuniform,        // two members of unequal cardinality
    AlphaNotPositive,  // every member is empty, so no positive alpha exists
    Parity,            // |union| + |intersection| of the whole family is odd
    Subset,            // a subfamily whose union/intersection sum misses 2*alpha
    Pair,              // two disjoint subfamilies violating the duality equality
};

std::string_view witness_kind_name(WitnessKind kind);

/// Concrete evidence for a failed verdict. `gamma1`/`gamma2` are subfamily
/// masks; which are meaningful depends on the kind. `lhs`/`rhs` are the two
/// computed side values of the violated equality.
struct Witness {
    WitnessKind kind;
    Bitset gamma1;
    Bitset gamma2;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

/// Outcome of one oracle run. `alpha` is present exactly when the family
/// passes and equals the forced common member cardinality; `witness` is
/// present exactly when it fails.
struct HkeVerdict {
    bool holds = false;
    std::optional<std::uint64_t> alpha;
    std::optional<Witness> witness;
    Oracle method = Oracle::Partition;
};

inline constexpr std::size_t kBruteForceMemberCap = 24;
inline constexpr std::size_t kPairsMemberCap = 16;

/// Checks |union| + |intersection| = 2*alpha over every non-empty subfamily,
/// enumerated by increasing size then lexicographic index order; the first
/// violation becomes the witness. Requires member_count <= cap.
HkeVerdict hke_bruteforce(const SetSystem& family, std::size_t member_cap = kBruteForceMemberCap);

/// Checks the duality equality over every unordered pair of disjoint
/// non-empty subfamilies. Requires member_count <= cap.
HkeVerdict hke_pairs(const SetSystem& family, std::size_t member_cap = kPairsMemberCap);

/// The scalable oracle: checks |cell(S)| = |cell(complement)| over the atom
/// profile, which only ever touches the non-empty cells. No member cap.
HkeVerdict hke_partition(const SetSystem& family);

/// Recomputes the two side values a witness claims, straight from the
/// family. A valid witness reproduces (lhs, rhs) exactly.
std::pair<std::uint64_t, std::uint64_t> replay_witness(const SetSystem& family, const Witness& witness);

/// True when replaying the witness reproduces its side values and they
/// demonstrate a genuine violation.
bool witness_is_violation(const SetSystem& family, const Witness& witness);

struct OracleRun {
    HkeVerdict verdict;
    std::chrono::microseconds elapsed{0};
};

struct EquivalenceReport {
    OracleRun brute_force;
    OracleRun pairs;
    OracleRun partition;
    bool holds = false;
};

/// Runs all three oracles and requires them to agree on holds/fails.
/// Disagreement throws TheoremViolation: it can only mean a bug here.
EquivalenceReport equivalence_audit(const SetSystem& family);

/// Builds a family that passes all three oracles by drawing one size per
/// complement pair of signatures (both cells get the size) plus a core
/// size, then materializing fresh labels. Deterministic for a fixed seed.
SetSystem generate_hke(std::size_t members, std::uint64_t cell_size_bound, std::uint64_t seed);

struct ExerciseSides {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool holds = false;
};

/// Side values for the two four-member identities
///   |A-B-C| = |B∩C-A|   and   |A∩B-C-D| = |C∩D-A-B|
/// where A..D are the four members in canonical order.
struct ExerciseReport {
    ExerciseSides difference_identity;
    ExerciseSides pair_difference_identity;
};

/// Evaluates both identities by direct mask arithmetic. Requires a family
/// of exactly four members that passes hke_partition; an identity failing
/// under that precondition throws TheoremViolation.
ExerciseReport exercise_identities(const SetSystem& family);

}  // namespace ke
