#ifndef CYCLICBOUND_NUMTHEORY_HPP
#define CYCLICBOUND_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace cyclicbound::nt {

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

// q = p^a with p prime, or nullopt.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    std::uint32_t a = 0;
    while (q > 1) {
        q /= f[0];
        ++a;
    }
    return std::make_pair(static_cast<std::uint32_t>(f[0]), a);
}

// Multiplicative order of q modulo n; requires gcd(q, n) = 1. Order modulo 1 is 1.
inline std::uint32_t mult_order(std::uint64_t q, std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    std::uint32_t s = 1;
    while (x != 1) {
        x = x * q % n;
        ++s;
    }
    return s;
}

// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
inline std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t qt = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
    }
    if (r0 != 1) return std::nullopt;
    return mod(s0, n);
}

// Units modulo n in increasing order; {0} for n = 1.
inline std::vector<std::uint32_t> units(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n == 1) return {0};
    for (std::uint32_t w = 1; w < n; ++w)
        if (std::gcd(w, n) == 1) out.push_back(w);
    return out;
}

// p^m, or 0 if it exceeds limit.
inline std::uint64_t checked_pow(std::uint64_t p, std::uint64_t m, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        v *= p;
        if (v > limit) return 0;
    }
    return v;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace cyclicbound::nt

#endif
