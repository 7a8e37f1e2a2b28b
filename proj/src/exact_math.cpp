// exact_math.cpp

#include "antimagic/exact_math.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "antimagic/error.hpp"

namespace antimagic {

std::uint64_t isqrt(std::uint64_t n) noexcept {
    if (n < 2) return n;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    // long double can still be off by one near 2^64; settle with exact products.
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t floor_times_sqrt2(std::int64_t q) {
    if (q == 0) return 0;
    constexpr std::int64_t limit = 3'000'000'000LL;  // keeps 2*q*q inside uint64
    if (q > limit || q < -limit) {
        throw Error(ErrorKind::out_of_domain, "floor_times_sqrt2 argument too large");
    }
    const auto mag = static_cast<std::uint64_t>(q < 0 ? -q : q);
    const auto root = static_cast<std::int64_t>(isqrt(2 * mag * mag));
    // 2*q*q is never a perfect square for q != 0, so the negative side rounds down past it.
    return q > 0 ? root : -root - 1;
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_parameters: return "invalid-parameters";
        case ErrorKind::malformed_partition: return "malformed-partition";
        case ErrorKind::invalid_labeling: return "invalid-labeling";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::out_of_domain: return "out-of-domain";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::internal_consistency: return "internal-consistency";
        case ErrorKind::refuse_to_run: return "refuse-to-run";
        case ErrorKind::io_error: return "io-error";
    }
    return "unknown";
}

}  // namespace antimagic
