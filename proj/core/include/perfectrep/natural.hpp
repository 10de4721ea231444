#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace perfectrep {

using Natural = boost::multiprecision::cpp_int;

Natural pow2(unsigned exponent);

std::string to_decimal(const Natural& value);

// Accepts only non-empty runs of ASCII digits; anything else is a
// DomainError with code "invalid_number".
Natural parse_decimal(std::string_view text);

// Lower-case hex, zero-padded on the left to `digits`.
std::string to_hex(const Natural& value, std::size_t digits);

std::optional<std::uint64_t> to_u64(const Natural& value);

}  // namespace perfectrep
