// antimagic/exact_math.hpp - integer helpers for floors involving sqrt(2)

#pragma once

#include <cstdint>

namespace antimagic {

// Largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

// Floor division rounding toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) noexcept {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

// floor(q * sqrt(2)) for any integer q.
std::int64_t floor_times_sqrt2(std::int64_t q);

}  // namespace antimagic
