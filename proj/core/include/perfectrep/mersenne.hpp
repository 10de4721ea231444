#pragma once

#include <cstddef>
#include <vector>

#include "perfectrep/natural.hpp"

namespace perfectrep {

/// Deterministic primality test for 2^p - 1. p = 2 is accepted by special
/// case; composite p is rejected without running the recurrence.
/// Throws DomainError for p < 2.
bool lucas_lehmer(unsigned p);

/// Sum of all divisors of n, n itself included, by trial division up to
/// sqrt(n). Deliberately independent of any closed form. Throws DomainError
/// for n = 0.
Natural sigma(const Natural& n);

/// An exponent p >= 2 for which 2^p - 1 is prime.
class MersenneExponent {
public:
    /// Throws DomainError("not_mersenne") unless lucas_lehmer(p) holds.
    static MersenneExponent make(unsigned p);

    unsigned p() const noexcept { return p_; }
    const Natural& value() const noexcept { return value_; }

private:
    MersenneExponent(unsigned p, Natural value) : p_(p), value_(std::move(value)) {}

    unsigned p_;
    Natural value_;
};

/// Even perfect number n = 2^(p-1) * (2^p - 1) together with its 2p - 1
/// proper divisors in increasing order.
///
/// The increasing order coincides with the canonical subset bit order:
/// bit i < p is 2^i and bit p + j is 2^j * M_p, and 2^(p-1) < M_p.
class PerfectNumber {
public:
    const MersenneExponent& exponent() const noexcept { return exponent_; }
    unsigned p() const noexcept { return exponent_.p(); }
    const Natural& mersenne() const noexcept { return exponent_.value(); }
    const Natural& n() const noexcept { return n_; }
    const std::vector<Natural>& proper_divisors() const noexcept { return divisors_; }
    std::size_t divisor_count() const noexcept { return divisors_.size(); }

    /// Divisor denoted by canonical bit `bit` (< 2p - 1).
    Natural divisor_at_bit(unsigned bit) const;

    friend PerfectNumber make_perfect(unsigned p);

private:
    PerfectNumber(MersenneExponent exponent, Natural n, std::vector<Natural> divisors)
        : exponent_(std::move(exponent)), n_(std::move(n)), divisors_(std::move(divisors)) {}

    MersenneExponent exponent_;
    Natural n_;
    std::vector<Natural> divisors_;
};

/// Builds and validates the even perfect number for exponent p. Re-checks
/// primality of 2^p - 1 and every structural invariant; throws
/// DomainError("not_mersenne") when p is not a Mersenne exponent.
PerfectNumber make_perfect(unsigned p);

/// Mersenne exponents p with 2 <= p <= max_p, ascending.
std::vector<unsigned> mersenne_exponents_up_to(unsigned max_p);

}  // namespace perfectrep
