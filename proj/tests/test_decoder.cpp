#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclicbound/decoder.hpp"
#include "oracles.hpp"

using namespace cyclicbound;

namespace {

Word random_codeword(const CyclicCodeSpec& c, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, c.q - 1);
    Word m(c.k);
    for (auto& x : m) x = d(rng);
    return encode(c, m);
}

std::vector<std::uint32_t> random_positions(std::uint32_t n, std::uint32_t t, std::mt19937& rng) {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(t);
    std::sort(all.begin(), all.end());
    return all;
}

void round_trip(const CyclicCodeSpec& c, const LocatorSpec& loc, std::uint32_t trials, std::uint32_t seed) {
    const auto cert = mu_search(c.defining_set, c.n, loc);
    const auto ctx = build_context(c, cert.locator, cert);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> nz(1, c.q - 1);
    for (std::uint32_t t = 1; t <= ctx.capability(); ++t)
        for (std::uint32_t i = 0; i < trials; ++i) {
            const auto cw = random_codeword(c, rng);
            auto r = cw;
            const auto pos = random_positions(c.n, t, rng);
            for (auto p : pos) r[p] = (r[p] + nz(rng)) % c.q;
            const auto res = decode(ctx, r);
            CAPTURE(t);
            REQUIRE(res.status == DecodeStatus::Success);
            CHECK(res.corrected == cw);
            CHECK(res.positions == pos);
            CHECK(res.lambda_degree == static_cast<int>(t * cert.locator.d_l));
            CHECK(res.omega_degree < res.lambda_degree);
        }
}

}  // namespace

TEST_SUITE("decoder") {

TEST_CASE("codewords have zero syndromes") {
    const auto c = build_code(2, 21, {1, 3, 7, 9});
    const auto cert = mu_search(c.defining_set, 21, spc_locator(2, 5), {false});
    const auto ctx = build_context(c, cert.locator, cert);
    CHECK(ctx.capability() == 3);
    CHECK(ctx.field->element_order(ctx.alpha) == 21);
    CHECK(ctx.field->element_order(ctx.beta) == 5);
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto w = random_codeword(c, rng);
        CHECK(syndromes(ctx, w).is_zero());
        CHECK(syndromes_vanish(ctx, w));
        const auto res = decode(ctx, w);
        CHECK(res.status == DecodeStatus::Success);
        CHECK(res.positions.empty());
    }
}

TEST_CASE("round trip, binary length 21 with SPC(5)") { round_trip(build_code(2, 21, {1, 3, 7, 9}), spc_locator(2, 5), 30, 2); }

TEST_CASE("round trip, binary length 65 with SPC(3)") { round_trip(build_code(2, 65, {1, 5}), spc_locator(2, 3), 10, 3); }

TEST_CASE("round trip, GF(4) code with a single error") {
    const auto c = build_code(4, 21, {1, 2});
    round_trip(c, trivial_locator(4), 40, 4);
}

TEST_CASE("round trip, GF(5) code with an RS locator") {
    const auto c = code_from_defining_set(5, 13, {3, 5, 11, 13, -3, -5, -11, -13});
    round_trip(c, rs_locator(5, 1, 4, 2), 20, 5);
}

TEST_CASE("round trip, Hamming locator") {
    const auto c = code_from_defining_set(2, 45, {1, 7, 9, 11, 15});
    round_trip(c, hamming_locator(), 10, 6);
}

TEST_CASE("key equation smallest instance") {
    const auto f = build_field(2, 4);
    const auto s = Poly(f, {5});
    // S already has degree below (mu-1)/2: no division, Lambda = 1, which locates nothing
    const auto sol = solve_key_equation(s, 3);
    CHECK(sol.lambda == Poly::constant(f, 1));
    CHECK(sol.omega == s);
    // a true single error: S_1 = X S_0, one division
    const auto one = solve_key_equation(Poly(f, {5, f->mul(5, 7)}), 3);
    CHECK(one.lambda.degree() == 1);
    CHECK(one.lambda.coeff(0) == 1);
    CHECK(one.lambda.eval(f->inv(7)) == 0);
}

TEST_CASE("length mismatch is a failure, not an exception") {
    const auto c = build_code(2, 21, {1, 3, 7, 9});
    const auto cert = mu_search(c.defining_set, 21, spc_locator(2, 5), {false});
    const auto ctx = build_context(c, cert.locator, cert);
    const auto res = decode(ctx, Word(20, 0));
    CHECK(res.status == DecodeStatus::Failure);
    CHECK(res.failure == ErrorCode::LengthMismatch);
}

TEST_CASE("too many errors never yields a false success") {
    const auto c = build_code(2, 21, {1, 3, 7, 9});
    const auto cert = mu_search(c.defining_set, 21, spc_locator(2, 5), {false});
    const auto ctx = build_context(c, cert.locator, cert);
    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        auto r = random_codeword(c, rng);
        for (auto p : random_positions(21, 5, rng)) r[p] ^= 1;
        const auto res = decode(ctx, r);
        if (res.status == DecodeStatus::Success) CHECK(is_codeword(c, res.corrected));
    }
}

TEST_CASE("classical reduction matches a textbook BCH decoder") {
    for (auto [n, reps] : std::vector<std::pair<std::uint32_t, std::vector<std::int64_t>>>{
             {21, {1, 3, 7, 9}}, {31, {1, 3, 5}}, {15, {1, 3}}, {45, {1, 7, 9, 11, 15}}}) {
        const auto c = n == 45 ? code_from_defining_set(2, n, reps) : build_code(2, n, reps);
        const auto cert = mu_search(c.defining_set, n, trivial_locator(2));
        const auto ctx = build_context(c, cert.locator, cert);
        std::uint64_t g = 0;
        for (std::size_t i = 0; i < c.generator.size(); ++i)
            if (c.generator[i]) g |= std::uint64_t{1} << i;
        const oracle::Gf2 f(oracle::ord2(n));
        const auto alpha = oracle::anchor_root(f, n, g, c.defining_set);
        REQUIRE(alpha);
        const std::uint32_t t = (cert.mu - 1) / 2;
        std::mt19937 rng(n);
        for (int i = 0; i < 40; ++i) {
            const auto cw = random_codeword(c, rng);
            auto r = cw;
            const std::uint32_t errs = 1 + rng() % t;
            for (auto p : random_positions(n, errs, rng)) r[p] ^= 1;
            std::uint64_t rb = 0;
            for (std::uint32_t k = 0; k < n; ++k)
                if (r[k]) rb |= std::uint64_t{1} << k;
            const auto ref = oracle::bch_decode(f, n, *alpha, cert.e, cert.w, t, rb);
            const auto res = decode(ctx, r);
            REQUIRE(ref);
            REQUIRE(res.status == DecodeStatus::Success);
            std::uint64_t got = 0;
            for (std::uint32_t k = 0; k < n; ++k)
                if (res.corrected[k]) got |= std::uint64_t{1} << k;
            CHECK(got == *ref);
        }
    }
}

}  // TEST_SUITE
