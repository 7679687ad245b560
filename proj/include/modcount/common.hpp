#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcount {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Error taxonomy mirrored by the CLI exit codes:
//   invalid_input -> 2, cap_exceeded -> 3, math_error -> 4.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

inline constexpr u64 kDefaultBlockSize = u64{1} << 20;
inline constexpr u64 kDefaultSumCap = 1'000'000'000ull;
inline constexpr u64 kDefaultOracleCap = 1'000'000ull;

}  // namespace modcount
