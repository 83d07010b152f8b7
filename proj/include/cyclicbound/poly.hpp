#ifndef CYCLICBOUND_POLY_HPP
#define CYCLICBOUND_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "cyclicbound/field.hpp"

namespace cyclicbound {

// Univariate polynomial over a shared field context. Coefficients are stored low degree first and
// kept trimmed, so the leading stored coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    // Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Element> coeffs);

    static Poly constant(FieldPtr field, Element c);
    static Poly monomial(FieldPtr field, Element c, std::size_t degree);
    // prod (x - r) over the given roots
    static Poly from_roots(FieldPtr field, std::span<const Element> roots);

    const FieldPtr& field() const { return field_; }
    const Field& ctx() const { return *field_; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Element lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::size_t weight() const;

    Element eval(Element x) const;
    // Formal derivative; i * P_i is reduced modulo the characteristic.
    Poly derivative() const;
    // P(c x)
    Poly scaled_argument(Element c) const;
    Poly scaled(Element c) const;
    Poly monic() const;
    // P mod x^n
    Poly truncated(std::size_t n) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Element> coeffs_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct EuclidStep {
    Poly remainder;  // r_j
    Poly u;          // cofactor of B
    Poly v;          // cofactor of A; u*B + v*A = r_j
};

// Remainder sequence r_{-1} = A, r_0 = B, r_{j+1} = r_{j-1} mod r_j, with cofactors, up to the last
// nonzero remainder.
std::vector<EuclidStep> euclid_trace(const Poly& a, const Poly& b);

struct EuclidResult {
    Poly remainder;
    Poly cofactor;  // u with u*B == remainder mod A
};

// First (r_j, u_j) with deg r_j < stop_degree. If the sequence ends first, the last nonzero remainder
// (the gcd up to a unit) is returned. Requires deg A > deg B >= 0.
EuclidResult extended_euclid_step_sequence(const Poly& a, const Poly& b, int stop_degree);

}  // namespace cyclicbound

#endif
