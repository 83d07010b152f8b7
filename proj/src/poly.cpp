#include "cyclicbound/poly.hpp"

#include <algorithm>

#include "cyclicbound/error.hpp"

namespace cyclicbound {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (a.field() == b.field()) return;
    const auto& x = a.field()->spec();
    const auto& y = b.field()->spec();
    if (x.p != y.p || x.prim_poly != y.prim_poly)
        fail(ErrorCode::FieldMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(FieldPtr field, Element c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Element c, std::size_t degree) {
    std::vector<Element> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::from_roots(FieldPtr field, std::span<const Element> roots) {
    const Field& f = *field;
    std::vector<Element> c{1};
    for (Element r : roots) {
        std::vector<Element> next(c.size() + 1, 0);
        const Element nr = f.neg(r);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], c[i]);
            next[i] = f.add(next[i], f.mul(c[i], nr));
        }
        c = std::move(next);
    }
    return Poly(std::move(field), std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::weight() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Element c) { return c != 0; }));
}

Element Poly::eval(Element x) const {
    const Field& f = *field_;
    Element acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
    return acc;
}

Poly Poly::derivative() const {
    const Field& f = *field_;
    std::vector<Element> d(coeffs_.size() > 1 ? coeffs_.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
    return Poly(field_, std::move(d));
}

Poly Poly::scaled_argument(Element c) const {
    const Field& f = *field_;
    std::vector<Element> v(coeffs_.size(), 0);
    Element pw = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i] = f.mul(coeffs_[i], pw);
        pw = f.mul(pw, c);
    }
    return Poly(field_, std::move(v));
}

Poly Poly::scaled(Element c) const {
    const Field& f = *field_;
    std::vector<Element> v(coeffs_);
    for (auto& x : v) x = f.mul(x, c);
    return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::truncated(std::size_t n) const {
    std::vector<Element> v(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
    return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.ctx();
    std::vector<Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& f = a.ctx();
    std::vector<Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& f = a.ctx();
    std::vector<Element> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i]) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field& f = a.ctx();
    std::vector<Element> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(a.field()), a};
    std::vector<Element> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Element lead_inv = f.inv(b.lead());
    for (int d = a.degree(); d >= db; --d) {
        const Element t = r[static_cast<std::size_t>(d)];
        if (!t) continue;
        const Element c = f.mul(t, lead_inv);
        q[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& slot = r[static_cast<std::size_t>(d - db + i)];
            slot = f.sub(slot, f.mul(c, b.coeff(static_cast<std::size_t>(i))));
        }
    }
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<EuclidStep> euclid_trace(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const FieldPtr& fp = a.field();
    std::vector<EuclidStep> steps;
    steps.push_back({a, Poly(fp), Poly::constant(fp, 1)});
    steps.push_back({b, Poly::constant(fp, 1), Poly(fp)});
    while (!steps.back().remainder.is_zero()) {
        const EuclidStep& prev = steps[steps.size() - 2];
        const EuclidStep& cur = steps.back();
        auto [quot, rem] = divmod(prev.remainder, cur.remainder);
        if (rem.is_zero()) break;
        EuclidStep next{rem, prev.u - quot * cur.u, prev.v - quot * cur.v};
        steps.push_back(std::move(next));
    }
    return steps;
}

EuclidResult extended_euclid_step_sequence(const Poly& a, const Poly& b, int stop_degree) {
    check_same_field(a, b);
    if (b.is_zero() || a.degree() <= b.degree())
        fail(ErrorCode::PreconditionViolated, "extended Euclid needs deg A > deg B >= 0");
    const FieldPtr& fp = a.field();
    Poly r_prev = a, r_cur = b;
    Poly u_prev(fp), u_cur = Poly::constant(fp, 1);
    while (r_cur.degree() >= stop_degree) {
        auto [quot, rem] = divmod(r_prev, r_cur);
        if (rem.is_zero()) break;
        Poly u_next = u_prev - quot * u_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    return {std::move(r_cur), std::move(u_cur)};
}

}  // namespace cyclicbound
