#include "cyclicbound/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cyclicbound/error.hpp"
#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Product of a and b modulo the monic polynomial f, all over GF(p).
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t d = prod.size(); d-- > m;) {
        const std::uint64_t t = prod[d];
        if (!t) continue;
        for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - t) * f[i]) % p;
    }
    Coeffs out(m, 0);
    for (std::size_t i = 0; i < m && i < prod.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

Coeffs powmod_x(std::uint64_t e, const Coeffs& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    Coeffs result(m, 0);
    result[0] = 1 % p;
    Coeffs base(m, 0);
    if (m == 1) {
        base[0] = (p - f[0]) % p;  // x = -f0 mod (x + f0)
    } else {
        base[1] = 1;
    }
    while (e) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Coeffs& c) {
    if (c.empty() || c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i]) return false;
    return true;
}

}  // namespace

std::uint32_t FieldSpec::size() const {
    return static_cast<std::uint32_t>(nt::checked_pow(p, m, kMaxFieldSize));
}

bool is_primitive_polynomial(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    if (coeffs.size() < 2 || coeffs.back() != 1 || coeffs[0] % p == 0) return false;
    const std::uint64_t size = nt::checked_pow(p, coeffs.size() - 1, std::uint64_t{1} << 62);
    const std::uint64_t order = size - 1;
    if (!is_one(powmod_x(order, coeffs, p))) return false;
    // x has order exactly p^m - 1, so the quotient ring has p^m - 1 units and is a field.
    for (std::uint64_t l : nt::prime_factors(order))
        if (is_one(powmod_x(order / l, coeffs, p))) return false;
    return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p;
    const std::uint32_t m = spec_.m;
    size_ = spec_.size();
    const std::uint32_t n = order();
    log_.assign(size_, 0);
    exp_.assign(2 * std::size_t{n}, 0);

    std::vector<std::uint64_t> pw(m, 1);
    for (std::uint32_t i = 1; i < m; ++i) pw[i] = pw[i - 1] * p;

    Coeffs digits(m, 0);
    digits[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        Element enc = 0;
        for (std::uint32_t i = 0; i < m; ++i) enc += static_cast<Element>(digits[i] * pw[i]);
        exp_[k] = enc;
        exp_[k + n] = enc;
        log_[enc] = k;
        // multiply by x modulo prim_poly
        const std::uint32_t top = digits[m - 1];
        for (std::uint32_t i = m - 1; i > 0; --i)
            digits[i] = static_cast<std::uint32_t>((digits[i - 1] + std::uint64_t{p - top} * spec_.prim_poly[i]) % p);
        digits[0] = static_cast<std::uint32_t>(std::uint64_t{p - top} * spec_.prim_poly[0] % p);
    }

    if (p != 2) {
        zech_.assign(n, -1);
        for (std::uint32_t k = 0; k < n; ++k) {
            const Element e = exp_[k];
            const Element plus1 = (e % p == p - 1) ? e - (p - 1) : e + 1;
            zech_[k] = plus1 == 0 ? -1 : std::int64_t{log_[plus1]};
        }
    }
}

std::shared_ptr<const Field> Field::from_spec(FieldSpec spec) {
    if (!nt::is_prime(spec.p)) fail(ErrorCode::CompositeCharacteristic, "characteristic must be prime");
    if (spec.m < 1 || spec.prim_poly.size() != spec.m + 1)
        fail(ErrorCode::InvalidArgument, "primitive polynomial must have m+1 coefficients");
    if (nt::checked_pow(spec.p, spec.m, kMaxFieldSize) == 0)
        fail(ErrorCode::FieldTooLarge, "field size exceeds 2^20");
    return std::shared_ptr<const Field>(new Field(std::move(spec)));
}

Element Field::add(Element a, Element b) const {
    if (spec_.p == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t n = order();
    const std::uint32_t la = log_[a];
    const std::uint32_t d = (log_[b] + n - la) % n;
    const std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
}

Element Field::neg(Element a) const {
    if (spec_.p == 2 || a == 0) return a;
    return exp_[log_[a] + order() / 2];
}

Element Field::inv(Element a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

Element Field::div(Element a, Element b) const {
    if (b == 0) fail(ErrorCode::DivisionByZero, "division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + (order() - log_[b]) % order()];
}

Element Field::pow(Element a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) fail(ErrorCode::DivisionByZero, "negative power of zero");
        return 0;
    }
    const std::int64_t n = order();
    return exp_[static_cast<std::size_t>(nt::mod(nt::mod(e, n) * log_[a], n))];
}

std::uint32_t Field::log(Element a) const {
    if (a == 0 || a >= size_) fail(ErrorCode::InvalidArgument, "log of zero or out-of-range element");
    return log_[a];
}

Element Field::exp(std::int64_t e) const { return exp_[static_cast<std::size_t>(nt::mod(e, order()))]; }

Element Field::from_int(std::int64_t v) const { return static_cast<Element>(nt::mod(v, spec_.p)); }

std::uint32_t Field::element_order(Element a) const {
    if (a == 0) fail(ErrorCode::InvalidArgument, "zero has no multiplicative order");
    return order() / std::gcd(order(), log_[a]);
}

bool Field::contains_subfield(std::uint32_t q) const {
    auto pp = nt::prime_power(q);
    return pp && pp->first == spec_.p && spec_.m % pp->second == 0;
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m) {
    if (!nt::is_prime(p)) fail(ErrorCode::CompositeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    const std::uint64_t size = nt::checked_pow(p, m, kMaxFieldSize);
    if (size == 0) {
        std::ostringstream os;
        os << "GF(" << p << "^" << m << ") exceeds the 2^20 table limit";
        fail(ErrorCode::FieldTooLarge, os.str());
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }

    // Enumerate (c_0, ..., c_{m-1}) with c_0 as the most significant digit.
    FieldPtr built;
    Coeffs poly(m + 1, 0);
    poly[m] = 1;
    for (std::uint64_t v = 0; v < size && !built; ++v) {
        std::uint64_t rest = v;
        for (std::uint32_t i = m; i-- > 0;) {
            poly[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_primitive_polynomial(p, poly)) built = Field::from_spec(FieldSpec{p, m, poly});
    }
    if (!built) fail(ErrorCode::Internal, "no primitive polynomial found");

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(p, m), built).first->second;
}

std::uint32_t min_extension_degree(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || q < 2) fail(ErrorCode::InvalidArgument, "need q >= 2 and n >= 1");
    if (std::gcd(q, n) != 1) fail(ErrorCode::NotCoprime, "gcd(n, q) != 1");
    return nt::mult_order(q, n);
}

std::uint32_t combined_degree(std::uint32_t s, std::uint32_t u, std::uint32_t s_l) {
    if (s < 1 || u < 1 || s_l < 1) fail(ErrorCode::InvalidArgument, "degrees must be positive");
    return std::lcm(s, u * s_l);
}

Element nth_root_of_unity(const Field& field, std::uint32_t n) {
    if (n == 0 || field.order() % n != 0) {
        std::ostringstream os;
        os << n << " does not divide " << field.order();
        fail(ErrorCode::OrderDoesNotDivide, os.str());
    }
    return field.exp(field.order() / n);
}

BaseFieldMap::BaseFieldMap(FieldPtr field, std::uint32_t q) : field_(std::move(field)) {
    auto pp = nt::prime_power(q);
    if (!pp) fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
    if (!field_->contains_subfield(q)) fail(ErrorCode::FieldMismatch, "field does not contain GF(" + std::to_string(q) + ")");
    const auto [p, a] = *pp;
    to_elem_.resize(q);
    if (a == 1) {
        for (std::uint32_t d = 0; d < q; ++d) to_elem_[d] = field_->from_int(d);
    } else {
        const auto& prim = build_field(p, a)->spec().prim_poly;
        const std::uint32_t step = field_->order() / (q - 1);
        Element delta = 0;
        for (std::uint32_t j = 1; j < q - 1 || q == 2; ++j) {
            if (std::gcd(j, q - 1) != 1) continue;
            const Element cand = field_->exp(std::int64_t{j} * step);
            Element acc = 0;
            for (std::size_t i = prim.size(); i-- > 0;) acc = field_->add(field_->mul(acc, cand), field_->from_int(prim[i]));
            if (acc == 0) {
                delta = cand;
                break;
            }
        }
        if (delta == 0) fail(ErrorCode::Internal, "no root of the base-field primitive polynomial");
        for (std::uint32_t d = 0; d < q; ++d) {
            Element acc = 0, pw = 1;
            for (std::uint32_t rest = d; rest; rest /= p) {
                acc = field_->add(acc, field_->mul(field_->from_int(rest % p), pw));
                pw = field_->mul(pw, delta);
            }
            to_elem_[d] = acc;
        }
    }
    for (std::uint32_t d = 0; d < q; ++d) to_digit_.emplace(to_elem_[d], d);
}

std::uint32_t BaseFieldMap::digit(Element x) const {
    auto it = to_digit_.find(x);
    if (it == to_digit_.end()) fail(ErrorCode::ValueOutsideBaseField, "element outside GF(" + std::to_string(q()) + ")");
    return it->second;
}

bool BaseFieldMap::contains(Element x) const { return to_digit_.count(x) != 0; }

}  // namespace cyclicbound
