#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perfectrep/decompose.hpp"
#include "perfectrep/mersenne.hpp"
#include "perfectrep/natural.hpp"

namespace perfectrep {

// Full 2^(2p-1) enumeration up to this exponent, meet-in-the-middle above.
inline constexpr unsigned kExhaustiveMaxP = 7;
inline constexpr unsigned kDefaultCountCeiling = 13;
// 64-bit masks and sums bound the search kernels regardless of overrides.
inline constexpr unsigned kHardCountCeiling = 32;
inline constexpr unsigned kHistogramMaxP = 13;

enum class CountStrategy { exhaustive, meet_in_the_middle };

const char* to_string(CountStrategy strategy) noexcept;

struct CountOptions {
    unsigned ceiling = kDefaultCountCeiling;
    // Number of threads used by the search; results do not depend on it.
    unsigned workers = 1;
};

struct RepReport {
    Natural m;
    std::uint64_t count = 0;
    CountStrategy strategy = CountStrategy::exhaustive;
    // Ascending by mask when enumeration was requested.
    std::optional<std::vector<DivisorSubset>> subsets;
};

/// Counts subsets of proper divisors summing to m by direct search. Never
/// consults predict_count. Throws RangeError for m outside [1, n] and
/// CapabilityError("count_ceiling") when p exceeds the ceiling.
RepReport count_representations(const Natural& m, const PerfectNumber& pn, bool enumerate,
                                const CountOptions& options = {});

/// Closed-form multiplicity: 2 for proper multiples of M_p below n, else 1.
unsigned predict_count(const Natural& m, const PerfectNumber& pn);

/// The second representation of m = j * M_p (1 <= j < 2^(p-1)): the
/// all-powers-of-two block of the canonical subset replaced by one more
/// M_p. Throws DomainError("no_alternate") when m is not a proper multiple
/// of M_p below n, or when `d` is not the canonical decomposition of d.m.
DivisorSubset alternate_representation(const Decomposition& d, const PerfectNumber& pn);

/// 2^(2p-1) - 1, the number of nonempty divisor combinations.
Natural total_subsets(const PerfectNumber& pn);

/// 2^(2p-1) - 1 - n == 2^(p-1) - 1.
bool verify_counting_identity(const PerfectNumber& pn);

/// Multiplicity of every sum over all 2^(2p-1) subsets.
struct SubsetSumHistogram {
    // counts[s] for s in [0, n], saturating at 255.
    std::vector<std::uint8_t> counts;
    // Nonempty subsets whose sum lies in [1, n].
    std::uint64_t in_range = 0;
    // Subsets whose sum exceeds n.
    std::uint64_t above_n = 0;
};

/// Gray-code walk over every subset. Throws CapabilityError for p above
/// kHistogramMaxP.
SubsetSumHistogram subset_sum_histogram(const PerfectNumber& pn);

}  // namespace perfectrep
