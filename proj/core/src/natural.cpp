#include "perfectrep/natural.hpp"

#include <limits>

#include "perfectrep/errors.hpp"

namespace perfectrep {

Natural pow2(unsigned exponent) {
    Natural result = 0;
    boost::multiprecision::bit_set(result, exponent);
    return result;
}

std::string to_decimal(const Natural& value) { return value.str(); }

Natural parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw DomainError("invalid_number", "expected a decimal natural, got an empty string");
    }
    Natural result = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw DomainError("invalid_number",
                              "expected a decimal natural, got '" + std::string(text) + "'");
        }
        result *= 10;
        result += c - '0';
    }
    return result;
}

std::string to_hex(const Natural& value, std::size_t digits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    Natural rest = value;
    while (rest != 0) {
        out.push_back(kDigits[static_cast<unsigned>(rest & 0xf)]);
        rest >>= 4;
    }
    while (out.size() < digits) out.push_back('0');
    return {out.rbegin(), out.rend()};
}

std::optional<std::uint64_t> to_u64(const Natural& value) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return static_cast<std::uint64_t>(value);
}

}  // namespace perfectrep
