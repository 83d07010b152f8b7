#include <doctest.h>

#include <random>

#include "cyclicbound/error.hpp"
#include "cyclicbound/field.hpp"
#include "cyclicbound/numtheory.hpp"
#include "oracles.hpp"

using namespace cyclicbound;

TEST_SUITE("gf") {

TEST_CASE("multiplication agrees with schoolbook products for every field up to 2^10") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        for (std::uint32_t m = 1; nt::checked_pow(p, m, 1u << 20) <= 1024; ++m) {
            const auto f = build_field(p, m);
            CAPTURE(p);
            CAPTURE(m);
            const auto& prim = f->spec().prim_poly;
            REQUIRE(prim.size() == m + 1);
            REQUIRE(prim.back() == 1);
            REQUIRE(is_primitive_polynomial(p, prim));
            bool ok = true;
            for (Element a = 0; a < f->size() && ok; ++a)
                for (Element b = 0; b < f->size(); ++b)
                    if (f->mul(a, b) != oracle::naive_mul(p, prim, a, b)) {
                        ok = false;
                        break;
                    }
            CHECK(ok);
            // addition is digitwise mod p
            bool add_ok = true;
            for (Element a = 0; a < f->size(); a += 7)
                for (Element b = 0; b < f->size(); b += 3) {
                    Element x = a, y = b, s = 0, pw = 1;
                    for (std::uint32_t i = 0; i < m; ++i, x /= p, y /= p, pw *= p) s += ((x % p + y % p) % p) * pw;
                    add_ok = add_ok && f->add(a, b) == s;
                }
            CHECK(add_ok);
        }
    }
}

TEST_CASE("log and antilog are inverse") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 8}, {3, 5}, {2, 12}, {5, 3}, {2, 16}}) {
        const auto f = build_field(p, m);
        bool ok = true;
        for (Element x = 1; x < f->size(); ++x) ok = ok && f->exp(f->log(x)) == x;
        for (std::uint32_t i = 0; i < f->order(); ++i) ok = ok && f->log(f->exp(i)) == i;
        CHECK(ok);
    }
}

TEST_CASE("log(xy) = log x + log y") {
    const auto f = build_field(3, 7);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Element> d(1, f->size() - 1);
    for (int i = 0; i < 5000; ++i) {
        const Element x = d(rng), y = d(rng);
        CHECK(f->log(f->mul(x, y)) == (f->log(x) + f->log(y)) % f->order());
    }
}

TEST_CASE("build_field picks the lexicographically smallest primitive polynomial") {
    // brute force over all monic degree-m polynomials, low coefficient most significant
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 6}, {3, 3}, {5, 2}, {2, 8}}) {
        std::vector<std::uint32_t> best;
        const std::uint32_t count = nt::checked_pow(p, m, 1u << 20);
        for (std::uint32_t v = 0; v < count && best.empty(); ++v) {
            std::vector<std::uint32_t> c(m + 1, 0);
            std::uint32_t x = v;
            for (std::uint32_t i = m; i-- > 0;) {
                c[i] = x % p;
                x /= p;
            }
            c[m] = 1;
            // c[0] is the most significant digit of v, so v walks the order
            if (is_primitive_polynomial(p, c)) best = c;
        }
        CHECK(build_field(p, m)->spec().prim_poly == best);
    }
}

TEST_CASE("known smallest primitive polynomials") {
    CHECK(build_field(2, 3)->spec().prim_poly == std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK(build_field(2, 4)->spec().prim_poly == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
    CHECK(build_field(3, 2)->spec().prim_poly == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(build_field(7, 1)->spec().prim_poly == std::vector<std::uint32_t>{2, 1});  // root -2 = 5, primitive mod 7
}

TEST_CASE("generator has full order") {
    const auto f = build_field(2, 4);
    CHECK(f->element_order(f->generator()) == 15);
    CHECK(build_field(2, 1)->size() == 2);
    CHECK(build_field(2, 1)->mul(1, 1) == 1);
}

TEST_CASE("roots of unity") {
    const auto f6 = build_field(2, 6);
    const auto a = nth_root_of_unity(*f6, 21);
    CHECK(f6->element_order(a) == 21);
    for (std::uint32_t k = 1; k < 21; ++k) CHECK(f6->pow(a, k) != 1);
    CHECK(f6->pow(a, 21) == 1);
    const auto f4 = build_field(2, 4);
    CHECK(nth_root_of_unity(*f4, 5) == f4->exp(3));
    CHECK(nth_root_of_unity(*f4, 1) == 1);
    CHECK_THROWS_AS(nth_root_of_unity(*f4, 7), Error);
}

TEST_CASE("extension degrees") {
    CHECK(min_extension_degree(2, 21) == 6);
    CHECK(min_extension_degree(2, 5) == 4);
    CHECK(min_extension_degree(2, 1) == 1);
    CHECK(combined_degree(6, 1, 4) == 12);
    CHECK(combined_degree(12, 2, 1) == 12);
    CHECK(combined_degree(1, 1, 1) == 1);
    try {
        min_extension_degree(2, 6);
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCoprime);
    }
}

TEST_CASE("field construction errors") {
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Ok;
    };
    CHECK(code_of([] { build_field(4, 2); }) == ErrorCode::CompositeCharacteristic);
    CHECK(code_of([] { build_field(2, 21); }) == ErrorCode::FieldTooLarge);
    CHECK(code_of([] { build_field(2, 20); }) == ErrorCode::Ok);
}

TEST_CASE("base field embedding preserves arithmetic") {
    // GF(4) inside GF(16) and GF(64): digit arithmetic matches build_field(2, 2)
    const auto small = build_field(2, 2);
    for (std::uint32_t m : {4u, 6u, 12u}) {
        const auto big = build_field(2, m);
        BaseFieldMap map(big, 4);
        for (std::uint32_t a = 0; a < 4; ++a)
            for (std::uint32_t b = 0; b < 4; ++b) {
                CHECK(map.digit(big->mul(map.element(a), map.element(b))) == small->mul(a, b));
                CHECK(map.digit(big->add(map.element(a), map.element(b))) == small->add(a, b));
            }
        CHECK(map.contains(map.element(3)));
    }
    const auto f9 = build_field(3, 2);
    const auto f81 = build_field(3, 4);
    BaseFieldMap m9(f81, 9);
    for (std::uint32_t a = 0; a < 9; ++a)
        for (std::uint32_t b = 0; b < 9; ++b) CHECK(m9.digit(f81->mul(m9.element(a), m9.element(b))) == f9->mul(a, b));
}

TEST_CASE("Gf2 oracle agrees on orders") {
    const oracle::Gf2 g(6);
    const auto f = build_field(2, 6);
    CHECK(oracle::roots_of_order(g, 21).size() == 12);
    CHECK(f->element_order(nth_root_of_unity(*f, 21)) == 21);
}

}  // TEST_SUITE
