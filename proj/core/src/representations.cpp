#include "perfectrep/representations.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <utility>

#include "perfectrep/errors.hpp"

namespace perfectrep {
namespace {

using Mask = std::uint64_t;

struct Search {
    std::uint64_t count = 0;
    std::vector<Mask> masks;
};

// Divisors in canonical bit order as machine words; valid for p <= 32.
std::vector<std::uint64_t> word_divisors(const PerfectNumber& pn) {
    std::vector<std::uint64_t> out;
    out.reserve(pn.divisor_count());
    for (unsigned bit = 0; bit < 2 * pn.p() - 1; ++bit) {
        out.push_back(static_cast<std::uint64_t>(pn.divisor_at_bit(bit)));
    }
    return out;
}

std::uint64_t mask_sum(Mask mask, const std::vector<std::uint64_t>& divisors, unsigned offset = 0) {
    std::uint64_t sum = 0;
    while (mask != 0) {
        sum += divisors[offset + static_cast<unsigned>(std::countr_zero(mask))];
        mask &= mask - 1;
    }
    return sum;
}

// Runs body(begin, end, out) over `workers` contiguous slices of [first, last)
// and concatenates the per-slice results in slice order.
template <typename Body>
Search partitioned(Mask first, Mask last, unsigned workers, Body body) {
    const Mask span = last - first;
    workers = static_cast<unsigned>(std::clamp<Mask>(workers, 1, std::max<Mask>(span, 1)));
    std::vector<Search> parts(workers);
    auto slice_begin = [&](unsigned i) { return first + span / workers * i + std::min<Mask>(i, span % workers); };

    if (workers == 1) {
        body(first, last, parts[0]);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            threads.emplace_back([&, i] { body(slice_begin(i), slice_begin(i + 1), parts[i]); });
        }
    }

    Search merged;
    for (auto& part : parts) {
        merged.count += part.count;
        merged.masks.insert(merged.masks.end(), part.masks.begin(), part.masks.end());
    }
    return merged;
}

Search search_exhaustive(std::uint64_t target, const std::vector<std::uint64_t>& divisors, bool enumerate,
                         unsigned workers) {
    const Mask limit = Mask{1} << divisors.size();
    return partitioned(1, limit, workers, [&](Mask begin, Mask end, Search& out) {
        for (Mask mask = begin; mask < end; ++mask) {
            if (mask_sum(mask, divisors) != target) continue;
            ++out.count;
            if (enumerate) out.masks.push_back(mask);
        }
    });
}

Search search_meet_in_the_middle(std::uint64_t target, const std::vector<std::uint64_t>& divisors, bool enumerate,
                                 unsigned workers) {
    const auto width = static_cast<unsigned>(divisors.size());
    const unsigned low_width = width / 2;
    const unsigned high_width = width - low_width;

    // (sum, mask) over the low bit positions, sorted so that equal sums are
    // contiguous and ordered by mask.
    std::vector<std::pair<std::uint64_t, Mask>> low;
    low.reserve(std::size_t{1} << low_width);
    for (Mask mask = 0; mask < (Mask{1} << low_width); ++mask) {
        low.emplace_back(mask_sum(mask, divisors), mask);
    }
    std::sort(low.begin(), low.end());

    return partitioned(0, Mask{1} << high_width, workers, [&](Mask begin, Mask end, Search& out) {
        for (Mask high = begin; high < end; ++high) {
            const std::uint64_t high_sum = mask_sum(high, divisors, low_width);
            if (high_sum > target) continue;
            const std::uint64_t need = target - high_sum;
            auto lo = std::lower_bound(low.begin(), low.end(), std::pair<std::uint64_t, Mask>{need, 0});
            auto hi = lo;
            while (hi != low.end() && hi->first == need) ++hi;
            out.count += static_cast<std::uint64_t>(hi - lo);
            if (enumerate) {
                // Ascending low masks under a fixed high part keep the
                // concatenated output sorted.
                for (auto it = lo; it != hi; ++it) out.masks.push_back((high << low_width) | it->second);
            }
        }
    });
}

void require_in_range(const Natural& m, const PerfectNumber& pn) {
    if (m < 1 || m > pn.n()) {
        throw RangeError("m_out_of_range", "m = " + to_decimal(m) + " is outside [1, " + to_decimal(pn.n()) + "]");
    }
}

}  // namespace

const char* to_string(CountStrategy strategy) noexcept {
    switch (strategy) {
        case CountStrategy::exhaustive: return "exhaustive";
        case CountStrategy::meet_in_the_middle: return "meet_in_the_middle";
    }
    return "unknown";
}

RepReport count_representations(const Natural& m, const PerfectNumber& pn, bool enumerate,
                                const CountOptions& options) {
    require_in_range(m, pn);
    const unsigned ceiling = std::min(options.ceiling, kHardCountCeiling);
    if (pn.p() > ceiling) {
        throw CapabilityError("count_ceiling", "representation counting is limited to p <= " +
                                                   std::to_string(ceiling) + ", got p = " + std::to_string(pn.p()));
    }

    const auto divisors = word_divisors(pn);
    const auto target = static_cast<std::uint64_t>(m);
    RepReport report;
    report.m = m;
    Search found;
    if (pn.p() <= kExhaustiveMaxP) {
        report.strategy = CountStrategy::exhaustive;
        found = search_exhaustive(target, divisors, enumerate, options.workers);
    } else {
        report.strategy = CountStrategy::meet_in_the_middle;
        found = search_meet_in_the_middle(target, divisors, enumerate, options.workers);
    }
    report.count = found.count;
    if (enumerate) {
        std::vector<DivisorSubset> subsets;
        subsets.reserve(found.masks.size());
        for (Mask mask : found.masks) subsets.emplace_back(pn.p(), Natural(mask));
        report.subsets = std::move(subsets);
    }
    return report;
}

unsigned predict_count(const Natural& m, const PerfectNumber& pn) {
    require_in_range(m, pn);
    return (m % pn.mersenne() == 0 && m != pn.n()) ? 2 : 1;
}

DivisorSubset alternate_representation(const Decomposition& d, const PerfectNumber& pn) {
    if (d.subset.owner_p() != pn.p()) {
        throw DomainError("owner_mismatch", "decomposition belongs to a different exponent");
    }
    const BlockSplit split = split_k_r(d.m, pn);
    const Decomposition canonical = decompose(d.m, pn);
    if (d.k != split.k || d.r != split.r || !(d.subset == canonical.subset)) {
        throw DomainError("not_canonical", "decomposition of m = " + to_decimal(d.m) + " is not canonical");
    }
    if (split.r != pn.mersenne() || d.m == pn.n()) {
        throw DomainError("no_alternate",
                          "m = " + to_decimal(d.m) + " is not a multiple of M_p strictly below n; its representation is unique");
    }
    // m = (k + 1) M_p: drop 1 + 2 + ... + 2^(p-1) and spell k + 1 in the M_p block.
    return DivisorSubset(pn.p(), (split.k + 1) << pn.p());
}

Natural total_subsets(const PerfectNumber& pn) { return pow2(2 * pn.p() - 1) - 1; }

bool verify_counting_identity(const PerfectNumber& pn) {
    return total_subsets(pn) - pn.n() == pow2(pn.p() - 1) - 1;
}

SubsetSumHistogram subset_sum_histogram(const PerfectNumber& pn) {
    if (pn.p() > kHistogramMaxP) {
        throw CapabilityError("histogram_ceiling", "subset-sum histogram is limited to p <= " +
                                                       std::to_string(kHistogramMaxP));
    }
    const auto divisors = word_divisors(pn);
    const auto n = static_cast<std::uint64_t>(pn.n());

    SubsetSumHistogram hist;
    hist.counts.assign(n + 1, 0);
    hist.counts[0] = 1;

    const Mask limit = Mask{1} << divisors.size();
    Mask gray = 0;
    std::uint64_t sum = 0;
    for (Mask i = 1; i < limit; ++i) {
        const auto bit = static_cast<unsigned>(std::countr_zero(i));
        gray ^= Mask{1} << bit;
        if (gray & (Mask{1} << bit)) {
            sum += divisors[bit];
        } else {
            sum -= divisors[bit];
        }
        if (sum > n) {
            ++hist.above_n;
            continue;
        }
        ++hist.in_range;
        if (hist.counts[sum] != 255) ++hist.counts[sum];
    }
    return hist;
}

}  // namespace perfectrep
