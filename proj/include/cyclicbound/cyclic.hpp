#ifndef CYCLICBOUND_CYCLIC_HPP
#define CYCLICBOUND_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicbound/field.hpp"
#include "cyclicbound/poly.hpp"

namespace cyclicbound {

// Words and generator polynomials are stored as base-q digits, coefficient of x^0 first.
// For q = p^a a digit d with base-p expansion (c_0, ..., c_{a-1}) stands for sum c_i delta^i (see BaseFieldMap).
using Word = std::vector<std::uint32_t>;

struct CyclicCodeSpec {
    std::string name;
    std::uint32_t q = 2;
    std::uint32_t n = 1;
    std::vector<std::uint32_t> defining_set;  // sorted, coset-closed
    std::vector<std::uint32_t> coset_reps;    // smallest element of each coset in the defining set
    std::uint32_t k = 1;
    // Empty when the splitting field GF(q^s) is above the table limit.
    Word generator;

    bool contains(std::uint32_t i) const;
    bool has_generator() const { return !generator.empty(); }
    // membership flags indexed by exponent
    std::vector<char> membership() const;
};

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t n, std::uint32_t q, std::uint32_t r);
// All cosets modulo n, ordered by their smallest element.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n, std::uint32_t q);

CyclicCodeSpec build_code(std::uint32_t q, std::uint32_t n, const std::vector<std::int64_t>& coset_reps,
                          std::string name = {});
// Canonicalizes indices mod n and closes the set under multiplication by q. *was_closed reports
// whether the input already was a union of cosets.
CyclicCodeSpec code_from_defining_set(std::uint32_t q, std::uint32_t n, const std::vector<std::int64_t>& defining_set,
                                      std::string name = {}, bool* was_closed = nullptr);

// Splitting field GF(q^s) used for generator polynomials: build_field(p, a*s) for q = p^a, s = ord_n(q).
FieldPtr canonical_field(std::uint32_t q, std::uint32_t n);

// The primitive n-th root of unity in `field` that plays the role of alpha for length-n codes over GF(q).
// In the canonical field this is gamma^{(q^s-1)/n}. In any other field containing GF(q) and the n-th roots
// of unity it is the root gamma^{j (|field|-1)/n} with the smallest unit j that is a zero of the canonical
// minimal polynomial of alpha, so digit words mean the same code in every field.
Element code_root(const FieldPtr& field, std::uint32_t q, std::uint32_t n);

// Digits -> elements and back via BaseFieldMap.
std::vector<Element> to_elements(const BaseFieldMap& map, const Word& w);
Word to_digits(const BaseFieldMap& map, const std::vector<Element>& v);

// m(x) g(x); message has k digits.
Word encode(const CyclicCodeSpec& code, const Word& message);
// Every defining-set syndrome vanishes.
bool is_codeword(const CyclicCodeSpec& code, const Word& word);
std::size_t hamming_weight(const Word& w);

struct BchWitness {
    std::uint32_t value = 1;  // l + 1
    std::uint32_t b = 0;
    std::uint32_t m1 = 1;
};
// A zero-dimensional code (full defining set) is reported as n + 1.
BchWitness bch_bound(const CyclicCodeSpec& code);

struct HtWitness {
    std::uint32_t value = 1;  // d0 + nu
    std::uint32_t b1 = 0;
    std::uint32_t m1 = 1;
    std::uint32_t m2 = 1;
    std::uint32_t d0 = 1;
    std::uint32_t nu = 0;
};
struct HtOptions {
    std::uint32_t max_n = 255;
    // Enumerate (m1, m2) pairs directly instead of normalizing m2 to 1.
    bool full_search = false;
};
HtWitness ht_bound(const CyclicCodeSpec& code, const HtOptions& opts = {});
// Template {b1 + i1 m1 + i2 m2} for 0 <= i1 <= d0-2, 0 <= i2 <= nu lies inside the defining set.
bool ht_template_holds(const CyclicCodeSpec& code, const HtWitness& w);

enum class DistanceMethod { Oracle, GcdTest, WeightThreeConstruction };
const char* distance_method_name(DistanceMethod m);

struct DistanceWitness {
    std::uint32_t d_true = 0;
    std::optional<Word> codeword;
    DistanceMethod method = DistanceMethod::Oracle;
};

struct OracleOptions {
    std::uint64_t cap = std::uint64_t{1} << 24;
    unsigned threads = 0;  // 0: CYCLIC_BOUND_THREADS or hardware concurrency
};
// Exhaustive minimum weight over nonzero messages. Among minimum-weight codewords the one whose message
// has the smallest value sum m_i q^i is returned. A zero-dimensional code reports d = n + 1.
DistanceWitness min_distance_oracle(const CyclicCodeSpec& code, const OracleOptions& opts = {});

unsigned default_thread_count();

// Binary codes: d = 2 iff gcd(n, reps) > 1 (for a nonempty defining set).
bool has_distance_two(std::uint32_t n, const std::vector<std::uint32_t>& coset_reps);

// Weight-3 codeword 1 + x^{u/r} + x^{u b/r} of a binary code whose reps all lie in C_r modulo 2^g - 1.
DistanceWitness distance_three_witness(std::uint32_t n, const std::vector<std::uint32_t>& coset_reps, std::uint32_t g,
                                       std::uint32_t r);

// Binary code of length a*g with defining set {0, g, ..., (a-1)g}.
CyclicCodeSpec lowest_rate_d2_code(std::uint32_t a, std::uint32_t g);
// Union of the cosets C_i modulo a*g with gcd(i, g) > 1, the set the construction argument selects.
std::vector<std::uint32_t> lowest_rate_d2_proof_set(std::uint32_t a, std::uint32_t g);
// Binary code of length a(2^g-1) with defining set {r i mod n : i = j(2^g-1) + 2^t}.
CyclicCodeSpec lowest_rate_d3_code(std::uint32_t a, std::uint32_t g, std::uint32_t r);

}  // namespace cyclicbound

#endif
