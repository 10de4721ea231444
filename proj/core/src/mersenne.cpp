#include "perfectrep/mersenne.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "perfectrep/errors.hpp"

namespace perfectrep {
namespace {

bool is_prime_small(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d) {
        if (value % d == 0) return false;
    }
    return true;
}

// x mod (2^p - 1) without division: fold the high bits onto the low ones.
Natural mersenne_mod(Natural x, unsigned p, const Natural& mp) {
    while (x > mp) {
        x = (x & mp) + (x >> p);
    }
    return x == mp ? Natural(0) : x;
}

std::uint64_t sigma_u64(std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        const std::uint64_t q = n / d;
        total += d;
        if (q != d) total += q;
    }
    return total;
}

}  // namespace

bool lucas_lehmer(unsigned p) {
    if (p < 2) {
        throw DomainError("p_out_of_domain", "Lucas-Lehmer requires p >= 2, got " + std::to_string(p));
    }
    if (p == 2) return true;
    // 2^(ab) - 1 is divisible by 2^a - 1.
    if (!is_prime_small(p)) return false;

    const Natural mp = pow2(p) - 1;
    Natural s = 4;
    for (unsigned i = 0; i < p - 2; ++i) {
        // s >= 0 throughout, so s*s + (mp - 2) keeps the value non-negative.
        s = mersenne_mod(s * s + mp - 2, p, mp);
    }
    return s == 0;
}

Natural sigma(const Natural& n) {
    if (n <= 0) {
        throw DomainError("n_out_of_domain", "sigma requires n >= 1");
    }
    // sigma(n) / n < 8 for every n < 2^60 (Robin's bound), so the sum fits.
    if (n < pow2(60)) {
        return sigma_u64(static_cast<std::uint64_t>(n));
    }
    Natural total = 0;
    for (Natural d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const Natural q = n / d;
        total += d;
        if (q != d) total += q;
    }
    return total;
}

MersenneExponent MersenneExponent::make(unsigned p) {
    if (p < 2 || !lucas_lehmer(p)) {
        throw DomainError("not_mersenne",
                          "p = " + std::to_string(p) + " is not a Mersenne exponent: 2^p - 1 failed the Lucas-Lehmer primality check");
    }
    return MersenneExponent(p, pow2(p) - 1);
}

Natural PerfectNumber::divisor_at_bit(unsigned bit) const {
    const unsigned p = exponent_.p();
    if (bit >= 2 * p - 1) {
        throw DomainError("bit_out_of_range", "bit " + std::to_string(bit) + " exceeds subset width");
    }
    return bit < p ? pow2(bit) : pow2(bit - p) * exponent_.value();
}

PerfectNumber make_perfect(unsigned p) {
    MersenneExponent exponent = MersenneExponent::make(p);
    const Natural& mp = exponent.value();
    Natural n = pow2(p - 1) * mp;

    std::vector<Natural> divisors;
    divisors.reserve(2 * p - 1);
    for (unsigned i = 0; i < p; ++i) divisors.push_back(pow2(i));
    for (unsigned i = 0; i + 1 < p; ++i) divisors.push_back(pow2(i) * mp);

    Natural sum = 0;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i > 0 && !(divisors[i - 1] < divisors[i])) {
            throw std::logic_error("proper divisors not strictly increasing");
        }
        if (n % divisors[i] != 0) throw std::logic_error("proper divisor does not divide n");
        sum += divisors[i];
    }
    if (sum != n) throw std::logic_error("proper divisors do not sum to n");

    return PerfectNumber(std::move(exponent), std::move(n), std::move(divisors));
}

std::vector<unsigned> mersenne_exponents_up_to(unsigned max_p) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= max_p; ++p) {
        if (lucas_lehmer(p)) out.push_back(p);
    }
    return out;
}

}  // namespace perfectrep
