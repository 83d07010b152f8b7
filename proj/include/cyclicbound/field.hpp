#ifndef CYCLICBOUND_FIELD_HPP
#define CYCLICBOUND_FIELD_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cyclicbound/error.hpp"

namespace cyclicbound {

// Polynomial-basis encoding: sum c_i p^i for coefficients c_i of the residue modulo the primitive polynomial.
using Element = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::vector<std::uint32_t> prim_poly;  // m+1 coefficients, low degree first, monic

    std::uint32_t size() const;
};

// GF(p^m) with discrete-log tables for the generator x mod prim_poly.
// Immutable after construction; share it through FieldPtr.
class Field {
public:
    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.m; }
    std::uint32_t size() const { return size_; }
    std::uint32_t order() const { return size_ - 1; }  // of the multiplicative group

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element generator() const { return exp(1); }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const;
    Element pow(Element a, std::int64_t e) const;

    // Discrete log base the generator; requires a != 0.
    std::uint32_t log(Element a) const;
    // generator^e, any integer e.
    Element exp(std::int64_t e) const;

    // Image of an integer in the prime subfield.
    Element from_int(std::int64_t v) const;

    // Order of a nonzero element.
    std::uint32_t element_order(Element a) const;

    bool contains_subfield(std::uint32_t q) const;
    // a lies in the subfield of size q (a^q == a).
    bool in_subfield(Element a, std::uint32_t q) const { return pow(a, q) == a; }

    // Field of the same order built from a given primitive polynomial; no primitivity search.
    static std::shared_ptr<const Field> from_spec(FieldSpec spec);

private:
    explicit Field(FieldSpec spec);

    FieldSpec spec_;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<Element> exp_;         // doubled, length 2*order
    std::vector<std::int64_t> zech_;   // odd p: log(1 + g^k), -1 when 1 + g^k = 0
};

using FieldPtr = std::shared_ptr<const Field>;

// Lexicographically smallest primitive polynomial (coefficients compared low degree first).
// Results are cached per (p, m); the returned context is shared.
FieldPtr build_field(std::uint32_t p, std::uint32_t m);

// Polynomial over GF(p) given low-degree-first is primitive of degree coeffs.size()-1.
bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

// Smallest s >= 1 with n | q^s - 1.
std::uint32_t min_extension_degree(std::uint64_t q, std::uint64_t n);

// lcm(s, u * s_l).
std::uint32_t combined_degree(std::uint32_t s, std::uint32_t u, std::uint32_t s_l);

// generator^((p^m - 1) / n): an element of order exactly n.
Element nth_root_of_unity(const Field& field, std::uint32_t n);

// Embedding of GF(q) into a field of the same characteristic as base-q digits.
// Digit d with base-p expansion (c_0, ..., c_{a-1}) maps to sum c_i delta^i, where delta is the root of the
// primitive polynomial of build_field(p, a) with the smallest discrete log. For prime q this is d -> d.
class BaseFieldMap {
public:
    BaseFieldMap(FieldPtr field, std::uint32_t q);

    std::uint32_t q() const { return static_cast<std::uint32_t>(to_elem_.size()); }
    Element element(std::uint32_t digit) const { return to_elem_.at(digit); }
    // Throws ValueOutsideBaseField when x is not in GF(q).
    std::uint32_t digit(Element x) const;
    bool contains(Element x) const;
    const std::vector<Element>& elements() const { return to_elem_; }

private:
    FieldPtr field_;
    std::vector<Element> to_elem_;
    std::unordered_map<Element, std::uint32_t> to_digit_;
};

}  // namespace cyclicbound

#endif
