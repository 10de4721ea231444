#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "perfectrep/mersenne.hpp"
#include "perfectrep/natural.hpp"

namespace perfectrep {

/// A set of proper divisors of the perfect number with exponent owner_p,
/// stored as a 2p - 1 bit mask in canonical order: bit i (i < p) is 2^i,
/// bit p + j (j < p - 1) is 2^j * M_p.
class DivisorSubset {
public:
    /// Throws DomainError when the mask has bits at or above 2p - 1.
    DivisorSubset(unsigned owner_p, Natural mask);

    unsigned owner_p() const noexcept { return owner_p_; }
    unsigned width() const noexcept { return 2 * owner_p_ - 1; }
    const Natural& mask() const noexcept { return mask_; }

    bool test(unsigned bit) const;
    std::size_t size() const;
    bool empty() const { return mask_ == 0; }

    /// ceil(width / 4) lower-case hex digits.
    std::string mask_hex() const;

    friend bool operator==(const DivisorSubset& a, const DivisorSubset& b) {
        return a.owner_p_ == b.owner_p_ && a.mask_ == b.mask_;
    }
    /// Orders by owner, then by mask read as an unsigned integer.
    friend bool operator<(const DivisorSubset& a, const DivisorSubset& b) {
        if (a.owner_p_ != b.owner_p_) return a.owner_p_ < b.owner_p_;
        return a.mask_ < b.mask_;
    }

private:
    unsigned owner_p_;
    Natural mask_;
};

/// m = k * M_p + r with 1 <= r <= M_p; m lies in the block
/// S_k = {1 + k M_p, ..., (k + 1) M_p}.
struct BlockSplit {
    Natural k;
    Natural r;
};

struct Decomposition {
    Natural m;
    Natural k;
    Natural r;
    DivisorSubset subset;
};

/// Throws RangeError("m_out_of_range") unless 1 <= m <= n.
BlockSplit split_k_r(const Natural& m, const PerfectNumber& pn);

/// Canonical decomposition: the binary digits of r select powers of two,
/// the binary digits of k select the 2^j * M_p divisors.
Decomposition decompose(const Natural& m, const PerfectNumber& pn);

/// Sum of the denoted divisors; 0 for the empty subset. Throws DomainError
/// when the subset belongs to a different exponent.
Natural subset_value(const DivisorSubset& subset, const PerfectNumber& pn);

/// Denoted divisors in ascending order.
std::vector<Natural> subset_divisors(const DivisorSubset& subset, const PerfectNumber& pn);

}  // namespace perfectrep
