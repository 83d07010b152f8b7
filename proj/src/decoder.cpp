#include "cyclicbound/decoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

// 1 - x c
Poly one_minus(const FieldPtr& f, Element c) { return Poly(f, {1, f->neg(c)}); }

Element eval_word(const Field& f, const std::vector<Element>& word, Element x) {
    Element acc = 0;
    for (std::size_t i = word.size(); i-- > 0;) acc = f.add(f.mul(acc, x), word[i]);
    return acc;
}

std::vector<Element> received_elements(const DecoderContext& ctx, const Word& received) {
    if (received.size() != ctx.code.n) {
        std::ostringstream os;
        os << "received word has " << received.size() << " symbols, code length is " << ctx.code.n;
        fail(ErrorCode::LengthMismatch, os.str());
    }
    return to_elements(*ctx.base_map, received);
}

}  // namespace

DecoderContext build_context(const CyclicCodeSpec& code, const LocatorSpec& locator, const NzlCertificate& cert) {
    std::string why;
    if (cert.locator.n_l != locator.n_l || cert.locator.defining_set != locator.defining_set ||
        cert.locator.d_l != locator.d_l)
        fail(ErrorCode::PreconditionViolated, "certificate was issued for a different locator");
    NzlCertificate c = cert;
    c.locator = locator;
    if (!verify_certificate(code.defining_set, code.n, c, &why)) fail(ErrorCode::PreconditionViolated, "invalid certificate: " + why);
    if (locator.q != code.q) fail(ErrorCode::FieldMismatch, "locator is defined over a different base field");

    DecoderContext ctx;
    ctx.code = code;
    ctx.locator = locator;
    ctx.cert = c;

    auto pp = nt::prime_power(code.q);
    const auto [p, a] = *pp;
    const std::uint32_t s = min_extension_degree(code.q, code.n);
    ctx.r = combined_degree(s, locator.u, locator.s_l());
    ctx.field = build_field(p, a * ctx.r);
    const FieldPtr& f = ctx.field;
    ctx.base_map = std::make_shared<const BaseFieldMap>(f, code.q);

    ctx.alpha = code_root(f, code.q, code.n);
    ctx.beta = locator.n_l == 1 ? 1 : code_root(f, locator.q_l(), locator.n_l);
    ctx.alpha_w = f->pow(ctx.alpha, c.w);

    BaseFieldMap lmap(f, locator.q_l());
    const auto& z = locator.support;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Element az = lmap.element(locator.coeffs[i]);
        ctx.a_twisted.push_back(f->mul(az, f->pow(ctx.beta, std::int64_t{c.t} * z[i])));
    }
    for (std::uint32_t j = 0; j + 1 < c.mu; ++j) {
        Element acc = 0;
        for (std::size_t i = 0; i < z.size(); ++i) acc = f->add(acc, f->mul(ctx.a_twisted[i], f->pow(ctx.beta, std::int64_t{z[i]} * j)));
        ctx.a_values.push_back(acc);
    }

    ctx.f = Poly::constant(f, 1);
    for (auto zi : z) ctx.f = ctx.f * one_minus(f, f->pow(ctx.beta, zi));
    ctx.h = Poly(f);
    for (std::size_t i = 0; i < z.size(); ++i) {
        Poly term = Poly::constant(f, ctx.a_twisted[i]);
        for (std::size_t l = 0; l < z.size(); ++l)
            if (l != i) term = term * one_minus(f, f->pow(ctx.beta, z[l]));
        ctx.h = ctx.h + term;
    }

    ctx.kappa = z.front();
    ctx.root = f->pow(ctx.beta, -std::int64_t{ctx.kappa});
    if (ctx.f.degree() != static_cast<int>(locator.d_l) || ctx.h.degree() >= static_cast<int>(locator.d_l))
        fail(ErrorCode::Internal, "unexpected degrees of f or h");
    if (ctx.f.eval(ctx.root) != 0) fail(ErrorCode::Internal, "f(beta^-kappa) != 0");
    ctx.f_prime = ctx.f.derivative().eval(ctx.root);
    ctx.h_at_root = ctx.h.eval(ctx.root);
    if (ctx.f_prime == 0 || ctx.h_at_root == 0) fail(ErrorCode::Internal, "f' or h vanishes at beta^-kappa");

    // p -> beta^-kappa alpha'^-p must be injective on [0, n)
    std::set<Element> seen;
    for (std::uint32_t pos = 0; pos < code.n; ++pos)
        if (!seen.insert(f->mul(ctx.root, f->pow(ctx.alpha_w, -std::int64_t{pos}))).second)
            fail(ErrorCode::Internal, "error-position map is not injective");
    return ctx;
}

Poly syndromes(const DecoderContext& ctx, const Word& received) {
    const auto r = received_elements(ctx, received);
    const Field& f = *ctx.field;
    const auto n = static_cast<std::int64_t>(ctx.code.n);
    std::vector<Element> s(ctx.a_values.size(), 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (ctx.a_values[j] == 0) continue;
        const std::int64_t ex = nt::mod(std::int64_t{ctx.cert.w} * static_cast<std::int64_t>(j) + ctx.cert.e, n);
        s[j] = f.mul(eval_word(f, r, f.pow(ctx.alpha, ex)), ctx.a_values[j]);
    }
    return Poly(ctx.field, std::move(s));
}

KeyEquationSolution solve_key_equation(const Poly& s, std::uint32_t mu) {
    if (s.is_zero()) fail(ErrorCode::ZeroSyndrome, "zero syndrome");
    if (mu < 2 || s.degree() > static_cast<int>(mu) - 2) fail(ErrorCode::InvalidArgument, "syndrome degree exceeds mu - 2");
    const FieldPtr& f = s.field();
    // t errors give deg Lambda = t d_l with 2 t d_l <= (d*-1) d_l < mu, so 2 deg Lambda <= mu - 1.
    // Stop at the first remainder with 2 deg r < mu - 1.
    const int stop = static_cast<int>(mu / 2);
    auto res = extended_euclid_step_sequence(Poly::monomial(f, 1, mu - 1), s, stop);
    const Element c0 = res.cofactor.coeff(0);
    if (c0 == 0) fail(ErrorCode::InconsistentLocator, "locator candidate has Lambda(0) = 0");
    const Element scale = f->inv(c0);
    return {res.cofactor.scaled(scale), res.remainder.scaled(scale)};
}

std::vector<std::uint32_t> find_error_positions(const DecoderContext& ctx, const Poly& lambda) {
    const Field& f = *ctx.field;
    if (lambda.coeff(0) != 1) fail(ErrorCode::InvalidArgument, "Lambda(0) must be 1");
    std::vector<std::uint32_t> pos;
    for (std::uint32_t p = 0; p < ctx.code.n; ++p)
        if (lambda.eval(f.mul(ctx.root, f.pow(ctx.alpha_w, -std::int64_t{p}))) == 0) pos.push_back(p);
    if (pos.size() * ctx.locator.d_l != static_cast<std::size_t>(std::max(lambda.degree(), 0))) {
        std::ostringstream os;
        os << "found " << pos.size() << " positions for deg Lambda = " << lambda.degree() << " and d_l = " << ctx.locator.d_l;
        fail(ErrorCode::InconsistentLocator, os.str());
    }
    // Lambda must contain every factor f(x alpha'^p), not just one root of each.
    for (auto p : pos)
        for (auto z : ctx.locator.support) {
            const Element x = f.mul(f.pow(ctx.beta, -std::int64_t{z}), f.pow(ctx.alpha_w, -std::int64_t{p}));
            if (lambda.eval(x) != 0) fail(ErrorCode::InconsistentLocator, "Lambda lacks a root of f(x alpha'^" + std::to_string(p) + ")");
        }
    return pos;
}

Word error_values(const DecoderContext& ctx, const Poly& lambda, const Poly& omega, const std::vector<std::uint32_t>& positions) {
    const Field& f = *ctx.field;
    const Poly dl = lambda.derivative();
    Word out;
    for (auto p : positions) {
        const Element g = f.mul(ctx.root, f.pow(ctx.alpha_w, -std::int64_t{p}));
        const Element num = f.mul(f.mul(omega.eval(g), f.pow(ctx.alpha_w, p)), ctx.f_prime);
        const Element den = f.mul(f.mul(dl.eval(g), f.pow(ctx.alpha, std::int64_t{p} * ctx.cert.e)), ctx.h_at_root);
        if (den == 0) fail(ErrorCode::EvaluatorSingular, "zero denominator at position " + std::to_string(p));
        const Element v = f.div(num, den);
        if (v == 0) fail(ErrorCode::InconsistentLocator, "zero error value at position " + std::to_string(p));
        if (!ctx.base_map->contains(v))
            fail(ErrorCode::ValueOutsideBaseField, "error value at position " + std::to_string(p) + " is outside GF(q)");
        out.push_back(ctx.base_map->digit(v));
    }
    return out;
}

bool syndromes_vanish(const DecoderContext& ctx, const Word& word) {
    const auto c = received_elements(ctx, word);
    const Field& f = *ctx.field;
    for (auto i : ctx.code.defining_set)
        if (eval_word(f, c, f.pow(ctx.alpha, i)) != 0) return false;
    return true;
}

DecodeResult decode(const DecoderContext& ctx, const Word& received) {
    DecodeResult res;
    try {
        const Field& f = *ctx.field;
        res.corrected = received;
        const Poly s = syndromes(ctx, received);
        if (!s.is_zero()) {
            const auto [lambda, omega] = solve_key_equation(s, ctx.cert.mu);
            res.lambda_degree = lambda.degree();
            res.omega_degree = omega.degree();
            if (omega.degree() >= lambda.degree())
                fail(ErrorCode::InconsistentLocator, "deg Omega >= deg Lambda; too many errors");
            res.positions = find_error_positions(ctx, lambda);
            res.values = error_values(ctx, lambda, omega, res.positions);
            for (std::size_t i = 0; i < res.positions.size(); ++i) {
                const auto p = res.positions[i];
                const Element v = f.sub(ctx.base_map->element(received[p]), ctx.base_map->element(res.values[i]));
                res.corrected[p] = ctx.base_map->digit(v);
            }
        } else {
            res.lambda_degree = 0;
        }
        if (!syndromes_vanish(ctx, res.corrected))
            fail(s.is_zero() ? ErrorCode::ZeroSyndrome : ErrorCode::InconsistentLocator,
                 "corrected word is not a codeword; more errors than the decoding radius");
    } catch (const Error& e) {
        res.status = DecodeStatus::Failure;
        res.failure = e.code();
        res.reason = e.what();
        res.positions.clear();
        res.values.clear();
        res.corrected = received;
    }
    return res;
}

}  // namespace cyclicbound
