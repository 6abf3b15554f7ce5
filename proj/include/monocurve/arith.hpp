#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace monocurve {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the total convention C(a, b) = 0 for b < 0 or
/// a < b, and C(a, 0) = 1 for a >= 0.
BigInt binomial(long a, long b);

/// Same convention, for arguments known to keep the result within 64 bits.
std::uint64_t binomial_u64(long a, long b);

/// floor(sqrt(n)) and ceil(sqrt(n)), exact on integers.
std::uint64_t isqrt_floor(std::uint64_t n);
std::uint64_t isqrt_ceil(std::uint64_t n);

}  // namespace monocurve
