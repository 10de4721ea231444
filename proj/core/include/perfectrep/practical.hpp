#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perfectrep/natural.hpp"

namespace perfectrep {

inline constexpr std::uint64_t kDefaultPanCeiling = 10'000'000;

struct PanOptions {
    std::uint64_t ceiling = kDefaultPanCeiling;
};

/// Report on whether every m in [1, n] is a sum of distinct proper divisors
/// of n.
struct PanReport {
    std::uint64_t n = 0;
    bool is_panrepresentable = false;
    bool is_perfect = false;
    // Smallest unreachable m; present exactly when is_panrepresentable is false.
    std::optional<std::uint64_t> first_gap;
    // Representation of first_gap - 1 when that is at least 1.
    std::optional<std::vector<std::uint64_t>> witness;
};

/// Subset sums of a fixed divisor list, as a bit-parallel reachability table
/// over [0, limit]. Optionally remembers, for each reachable sum, the index
/// of the first divisor whose round made it reachable; this is enough to
/// rebuild a witness by walking back.
class ReachabilityTable {
public:
    ReachabilityTable(std::vector<std::uint64_t> divisors, std::uint64_t limit, bool track_witnesses);

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }

    bool reachable(std::uint64_t sum) const noexcept;

    /// Smallest s in [1, limit] that is unreachable, if any.
    std::optional<std::uint64_t> first_unreachable() const;

    /// Distinct divisors summing to `sum`, in increasing order, or nullopt.
    /// Requires witness tracking.
    std::optional<std::vector<std::uint64_t>> witness(std::uint64_t sum) const;

private:
    static constexpr std::uint16_t kUnreached = 0xffff;

    std::vector<std::uint64_t> divisors_;
    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint16_t> first_round_;
};

/// Proper divisors of n in increasing order (empty for n = 1).
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

/// sigma(n) == 2n. Throws DomainError for n = 0.
bool is_perfect(const Natural& n);

/// Throws DomainError for n = 0 and CapabilityError("pan_ceiling") above the
/// ceiling.
PanReport check_panrepresentable(std::uint64_t n, const PanOptions& options = {});

/// Some set of distinct proper divisors of n summing to m, or nullopt.
/// Throws RangeError unless 1 <= m <= n, plus the errors of
/// check_panrepresentable.
std::optional<std::vector<std::uint64_t>> represent(std::uint64_t m, std::uint64_t n, const PanOptions& options = {});

}  // namespace perfectrep
