#include "perfectrep/decompose.hpp"

#include <string>

#include "perfectrep/errors.hpp"

namespace perfectrep {
namespace {

void require_owner(const DivisorSubset& subset, const PerfectNumber& pn) {
    if (subset.owner_p() != pn.p()) {
        throw DomainError("owner_mismatch", "subset belongs to p = " + std::to_string(subset.owner_p()) +
                                                ", perfect number has p = " + std::to_string(pn.p()));
    }
}

}  // namespace

DivisorSubset::DivisorSubset(unsigned owner_p, Natural mask) : owner_p_(owner_p), mask_(std::move(mask)) {
    if (owner_p_ < 2) {
        throw DomainError("p_out_of_domain", "subset owner exponent must be >= 2");
    }
    if (mask_ < 0 || mask_ >= pow2(width())) {
        throw DomainError("mask_out_of_range", "mask has bits outside width " + std::to_string(width()));
    }
}

bool DivisorSubset::test(unsigned bit) const {
    return bit < width() && boost::multiprecision::bit_test(mask_, bit);
}

std::size_t DivisorSubset::size() const {
    std::size_t count = 0;
    for (unsigned bit = 0; bit < width(); ++bit) count += test(bit) ? 1 : 0;
    return count;
}

std::string DivisorSubset::mask_hex() const { return to_hex(mask_, (width() + 3) / 4); }

BlockSplit split_k_r(const Natural& m, const PerfectNumber& pn) {
    if (m < 1 || m > pn.n()) {
        throw RangeError("m_out_of_range", "m = " + to_decimal(m) + " is outside [1, " + to_decimal(pn.n()) + "]");
    }
    const Natural& mp = pn.mersenne();
    Natural k = (m - 1) / mp;
    Natural r = m - k * mp;
    return {std::move(k), std::move(r)};
}

Decomposition decompose(const Natural& m, const PerfectNumber& pn) {
    BlockSplit split = split_k_r(m, pn);
    // r <= M_p = 2^p - 1 occupies the low p bits; k <= 2^(p-1) - 1 the high p - 1.
    Natural mask = split.r | (split.k << pn.p());
    return {m, std::move(split.k), std::move(split.r), DivisorSubset(pn.p(), std::move(mask))};
}

Natural subset_value(const DivisorSubset& subset, const PerfectNumber& pn) {
    require_owner(subset, pn);
    Natural total = 0;
    for (unsigned bit = 0; bit < subset.width(); ++bit) {
        if (subset.test(bit)) total += pn.divisor_at_bit(bit);
    }
    return total;
}

std::vector<Natural> subset_divisors(const DivisorSubset& subset, const PerfectNumber& pn) {
    require_owner(subset, pn);
    std::vector<Natural> out;
    for (unsigned bit = 0; bit < subset.width(); ++bit) {
        if (subset.test(bit)) out.push_back(pn.divisor_at_bit(bit));
    }
    return out;
}

}  // namespace perfectrep
