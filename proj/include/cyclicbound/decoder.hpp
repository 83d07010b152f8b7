#ifndef CYCLICBOUND_DECODER_HPP
#define CYCLICBOUND_DECODER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclicbound/cyclic.hpp"
#include "cyclicbound/error.hpp"
#include "cyclicbound/nzl.hpp"

namespace cyclicbound {

// Everything the decoder needs for one (code, locator, certificate) triple, computed in GF(q^r) with
// r = lcm(s, u s_l). With alpha' = alpha^w and a'_z = a_z beta^{t z}:
//   f(x) = prod_{z in Z} (1 - x beta^z),  h(x) = sum_z a'_z prod_{l != z} (1 - x beta^l).
struct DecoderContext {
    CyclicCodeSpec code;
    LocatorSpec locator;
    NzlCertificate cert;
    FieldPtr field;
    std::shared_ptr<const BaseFieldMap> base_map;  // GF(q) inside field
    std::uint32_t r = 1;  // degree over GF(q)
    Element alpha = 1;
    Element beta = 1;
    Element alpha_w = 1;
    std::vector<Element> a_twisted;  // parallel to locator.support
    std::vector<Element> a_values;   // a(beta^{j+t}) for j in [0, mu-2]
    Poly f;
    Poly h;
    std::uint32_t kappa = 0;
    Element root = 1;      // beta^{-kappa}
    Element f_prime = 0;   // f'(beta^{-kappa})
    Element h_at_root = 0; // h(beta^{-kappa})

    DecoderContext() : f(nullptr), h(nullptr) {}
    // Errors the certificate guarantees to correct.
    std::uint32_t capability() const { return (cert.d_star - 1) / 2; }
};

DecoderContext build_context(const CyclicCodeSpec& code, const LocatorSpec& locator, const NzlCertificate& cert);

// S_j = r(alpha^{w j + e}) a(beta^{j + t}), j = 0..mu-2.
Poly syndromes(const DecoderContext& ctx, const Word& received);

struct KeyEquationSolution {
    Poly lambda;
    Poly omega;
};
// EEA on (x^{mu-1}, S) up to the first remainder of degree < (mu-1)/2; Lambda(0) = 1.
KeyEquationSolution solve_key_equation(const Poly& s, std::uint32_t mu);

// Positions p with Lambda(beta^{-kappa} alpha'^{-p}) = 0, checked against deg Lambda = |E| d_l.
std::vector<std::uint32_t> find_error_positions(const DecoderContext& ctx, const Poly& lambda);

// e_p = Omega(g_p) alpha'^p f'(beta^{-kappa}) / (Lambda'(g_p) alpha^{p e} h(beta^{-kappa})), g_p = beta^{-kappa} alpha'^{-p}.
// Returned as base-q digits, parallel to positions.
Word error_values(const DecoderContext& ctx, const Poly& lambda, const Poly& omega, const std::vector<std::uint32_t>& positions);

enum class DecodeStatus { Success, Failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Success;
    ErrorCode failure = ErrorCode::Ok;
    std::string reason;
    std::vector<std::uint32_t> positions;
    Word values;
    Word corrected;
    int lambda_degree = Poly::kZeroDegree;
    int omega_degree = Poly::kZeroDegree;
};

// Never throws for decoding problems; they come back as Failure.
DecodeResult decode(const DecoderContext& ctx, const Word& received);

// All defining-set syndromes of the word vanish, evaluated in the decoder field.
bool syndromes_vanish(const DecoderContext& ctx, const Word& word);

}  // namespace cyclicbound

#endif
