#include "monocurve/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace monocurve {

BigInt binomial(long a, long b)
{
    if (b < 0 || a < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long k = 1; k <= b; ++k) {
        result *= a - b + k;
        result /= k;
    }
    return result;
}

std::uint64_t binomial_u64(long a, long b)
{
    if (b < 0 || a < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    unsigned __int128 result = 1;
    for (long k = 1; k <= b; ++k) {
        result = result * static_cast<unsigned __int128>(a - b + k) / static_cast<unsigned __int128>(k);
        if (result > UINT64_MAX)
            throw std::overflow_error("binomial_u64: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t isqrt_floor(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t isqrt_ceil(std::uint64_t n)
{
    std::uint64_t r = isqrt_floor(n);
    return r * r == n ? r : r + 1;
}

}  // namespace monocurve
