#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclolc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Size guards for the desk-scale algorithms. `period` bounds the sequence
// length p^n (and with it the O(N^2) bit-level work); `degree` bounds the
// GF(2^k) extension degree. Both are overridable, period up to 2^24 and
// degree up to 128 (exponent arithmetic uses 128-bit integers).
struct Caps {
    u64 period = u64{1} << 20;
    unsigned degree = 128;
};

inline constexpr u64 kPeriodCapCeiling = u64{1} << 24;
inline constexpr unsigned kDegreeCapCeiling = 128;

// Thrown when a requested computation exceeds the configured caps.
class SizeError : public std::runtime_error {
  public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclolc
