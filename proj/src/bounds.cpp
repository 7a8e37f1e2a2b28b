// bounds.cpp

#include "antimagic/bounds.hpp"

#include <algorithm>

#include "antimagic/error.hpp"
#include "antimagic/exact_math.hpp"

namespace antimagic {

namespace {

void require_pair(int a, int b) {
    if (a < 1 || b < a) {
        throw Error(ErrorKind::invalid_parameters,
                    "need 1 <= a <= b (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
}

void require_m(std::int64_t m) {
    if (m < 2) throw Error(ErrorKind::out_of_domain, "tau_0 needs m >= 2");
    if (m > 1'000'000'000) throw Error(ErrorKind::out_of_domain, "m too large for exact evaluation");
}

}  // namespace

std::int64_t tau_zero(std::int64_t m) {
    require_m(m);
    // (1+sqrt 2)(m - 3/2) = (q + q sqrt 2) / 2 with q = 2m - 3 > 0.
    const std::int64_t q = 2 * m - 3;
    return floor_div(q + floor_times_sqrt2(q), 2) - 1;
}

std::int64_t tau_zero_alt(std::int64_t m) {
    require_m(m);
    const auto disc = static_cast<std::uint64_t>(8 * m * m - 24 * m + 17);
    return floor_div(2 * m - 5 + static_cast<std::int64_t>(isqrt(disc)), 2);
}

std::string case_name(int attained_case) { return "tau_" + std::to_string(attained_case); }

int cap_index(int a, int b) {
    require_pair(a, b);
    if (a <= 2) return 1;
    if (a <= 6) return a - 1;
    if (a == 7 && b <= 21) return 5;
    return 6;
}

TauResult tau_double_star(int a, int b) {
    const int i = cap_index(a, b);
    const std::int64_t m = std::int64_t{a} + b + 1;
    TauResult r;
    r.tau0 = tau_zero(m);
    r.cap_index = i;
    r.tau_cap = 2 * m + i;
    r.value = std::min(r.tau0, r.tau_cap);
    r.attained_case = r.tau0 < r.tau_cap ? 0 : i;
    return r;
}

std::int64_t beta(const Forest& g) {
    if (g.has_degenerate_component()) {
        throw Error(ErrorKind::out_of_domain, "beta is undefined with isolated vertices or K2 components");
    }
    const std::int64_t n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    const std::int64_t d = m - n;
    // Doubled first term: (6d + 2m + 1) + (4d + 2m + 1) sqrt 2.
    const std::int64_t rational = 6 * d + 2 * m + 1;
    const std::int64_t irrational = 4 * d + 2 * m + 1;
    const std::int64_t first = floor_div(rational + floor_times_sqrt2(irrational), 2);
    const std::int64_t second = 2 * m + 5 * (std::int64_t{g.internal_edge_count()} - g.p3_count()) + 1;
    return std::min(first, second);
}

BoundReport lemma_upper_bounds(int a, int b) {
    require_pair(a, b);
    const std::int64_t m = std::int64_t{a} + b + 1;
    BoundReport r;
    r.beta = beta(make_double_star(a, b));
    if (a == 1) {
        r.lemma_upb2 = 2 * m + 1;
    } else if (a <= 6) {
        r.lemma_upb3 = 2 * m + a - 1;
    } else if (a == 7 && b <= 21) {
        r.lemma_upb3 = 2 * m + 5;
    }
    return r;
}

}  // namespace antimagic
