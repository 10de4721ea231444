#include "perfectrep/practical.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "perfectrep/errors.hpp"
#include "perfectrep/mersenne.hpp"

namespace perfectrep {
namespace {

constexpr unsigned kWordBits = 64;

void require_n(std::uint64_t n, const PanOptions& options) {
    if (n == 0) throw DomainError("n_out_of_domain", "n must be >= 1");
    if (n > options.ceiling) {
        throw CapabilityError("pan_ceiling", "n = " + std::to_string(n) + " exceeds the ceiling " +
                                                 std::to_string(options.ceiling));
    }
}

std::uint64_t proper_sum(const std::vector<std::uint64_t>& divisors) {
    std::uint64_t total = 0;
    for (auto d : divisors) total += d;
    return total;
}

}  // namespace

ReachabilityTable::ReachabilityTable(std::vector<std::uint64_t> divisors, std::uint64_t limit, bool track_witnesses)
    : divisors_(std::move(divisors)), limit_(limit), words_(limit / kWordBits + 1, 0) {
    if (track_witnesses) {
        if (divisors_.size() >= kUnreached) throw std::length_error("too many divisors to track witnesses");
        first_round_.assign(limit_ + 1, kUnreached);
        first_round_[0] = 0;
    }
    words_[0] = 1;
    const std::size_t last = words_.size() - 1;
    const unsigned tail = static_cast<unsigned>(limit_ % kWordBits) + 1;
    const std::uint64_t tail_mask = tail == kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;

    for (std::size_t round = 0; round < divisors_.size(); ++round) {
        const std::uint64_t d = divisors_[round];
        if (d > limit_) continue;
        const std::size_t word_shift = d / kWordBits;
        const unsigned bit_shift = static_cast<unsigned>(d % kWordBits);
        // 0/1 knapsack step words |= words << d, in place from the top down
        // so every read sees the previous round.
        for (std::size_t i = last + 1; i-- > word_shift;) {
            const std::size_t src = i - word_shift;
            std::uint64_t shifted = words_[src] << bit_shift;
            if (bit_shift != 0 && src > 0) shifted |= words_[src - 1] >> (kWordBits - bit_shift);
            if (i == last) shifted &= tail_mask;
            std::uint64_t fresh = shifted & ~words_[i];
            words_[i] |= shifted;
            if (!track_witnesses) continue;
            while (fresh != 0) {
                const auto bit = static_cast<unsigned>(std::countr_zero(fresh));
                first_round_[i * kWordBits + bit] = static_cast<std::uint16_t>(round);
                fresh &= fresh - 1;
            }
        }
    }
}

bool ReachabilityTable::reachable(std::uint64_t sum) const noexcept {
    if (sum > limit_) return false;
    return (words_[sum / kWordBits] >> (sum % kWordBits)) & 1U;
}

std::optional<std::uint64_t> ReachabilityTable::first_unreachable() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t missing = ~words_[i];
        if (i == 0) missing &= ~std::uint64_t{1};
        if (missing == 0) continue;
        const std::uint64_t sum = i * kWordBits + static_cast<unsigned>(std::countr_zero(missing));
        if (sum <= limit_) return sum;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> ReachabilityTable::witness(std::uint64_t sum) const {
    if (first_round_.empty()) throw std::logic_error("reachability table built without witness tracking");
    if (!reachable(sum)) return std::nullopt;
    std::vector<std::uint64_t> out;
    // Each step uses the divisor of the round that first reached `sum`; the
    // remainder was reachable strictly earlier, so rounds strictly decrease.
    while (sum != 0) {
        const std::uint64_t d = divisors_[first_round_[sum]];
        out.push_back(d);
        sum -= d;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("n_out_of_domain", "n must be >= 1");
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    low.pop_back();  // n itself
    return low;
}

bool is_perfect(const Natural& n) { return sigma(n) == 2 * n; }

PanReport check_panrepresentable(std::uint64_t n, const PanOptions& options) {
    require_n(n, options);
    auto divisors = proper_divisors(n);
    const std::uint64_t limit = std::min(n, proper_sum(divisors));
    const ReachabilityTable table(std::move(divisors), limit, true);

    PanReport report;
    report.n = n;
    report.is_perfect = is_perfect(Natural(n));
    auto gap = table.first_unreachable();
    if (!gap && limit < n) gap = limit + 1;
    report.is_panrepresentable = !gap.has_value();
    if (gap) {
        report.first_gap = *gap;
        if (*gap > 1) report.witness = table.witness(*gap - 1);
    }
    if (n % 2 == 0 && report.is_perfect && !report.is_panrepresentable) {
        throw std::logic_error("even perfect number " + std::to_string(n) + " failed the panrepresentability scan");
    }
    return report;
}

std::optional<std::vector<std::uint64_t>> represent(std::uint64_t m, std::uint64_t n, const PanOptions& options) {
    require_n(n, options);
    if (m < 1 || m > n) {
        throw RangeError("m_out_of_range", "m = " + std::to_string(m) + " is outside [1, " + std::to_string(n) + "]");
    }
    auto divisors = proper_divisors(n);
    const std::uint64_t limit = std::min(n, proper_sum(divisors));
    if (m > limit) return std::nullopt;
    const ReachabilityTable table(std::move(divisors), limit, true);
    return table.witness(m);
}

}  // namespace perfectrep
