#ifndef CYCLICBOUND_NZL_HPP
#define CYCLICBOUND_NZL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicbound/cyclic.hpp"

namespace cyclicbound {

enum class LocatorKind { Trivial, Spc, Rs, Hamming, LowestRateD2, LowestRateD3, Custom };
const char* locator_kind_name(LocatorKind k);
std::optional<LocatorKind> parse_locator_kind(std::string_view s);

// Non-zero-locator code L over GF(q^u) of length n_l with a minimum-weight codeword a(x).
// Coefficients are base-q_l digits; beta is anchored with code_root(field, q_l, n_l), so they are valid
// in any field that contains GF(q_l) and the n_l-th roots of unity.
struct LocatorSpec {
    LocatorKind kind = LocatorKind::Trivial;
    std::uint32_t q = 2;  // base field of the codes it is paired with
    std::uint32_t u = 1;
    std::uint32_t n_l = 1;
    std::uint32_t k_l = 1;
    std::uint32_t d_l = 1;
    std::vector<std::uint32_t> defining_set;
    std::vector<std::uint32_t> support;  // Z, increasing
    Word coeffs;                         // a_z for z in Z
    std::string label;

    std::uint32_t q_l() const;
    // ord_{n_l}(q^u)
    std::uint32_t s_l() const;
};

struct MinWeightCodeword {
    std::vector<std::uint32_t> support;
    Word coeffs;
    std::uint32_t weight = 0;
};
// SPC: 1 - x. RS: prod_{i < n_l - k_l} (x - beta^i). Other kinds: exhaustive search, q_l^{k_l} <= 2^20.
MinWeightCodeword min_weight_codeword(LocatorKind kind, std::uint32_t q, std::uint32_t u, std::uint32_t n_l,
                                      const std::vector<std::uint32_t>& defining_set);

LocatorSpec trivial_locator(std::uint32_t q);
// Length n_l parity check over GF(q^u), u = ord_{n_l}(q).
LocatorSpec spc_locator(std::uint32_t q, std::uint32_t n_l);
// Cyclic RS(q^u; m; k; 0) with defining set {0, ..., m-k-1}; needs m | q^u - 1.
LocatorSpec rs_locator(std::uint32_t q, std::uint32_t u, std::uint32_t m, std::uint32_t k);
LocatorSpec hamming_locator();
LocatorSpec lowest_rate_d2_locator(std::uint32_t a, std::uint32_t g);
LocatorSpec lowest_rate_d3_locator(std::uint32_t a, std::uint32_t g, std::uint32_t r);
// Any coset-closed defining set over GF(q^u); d_l comes from the oracle.
LocatorSpec custom_locator(std::uint32_t q, std::uint32_t u, std::uint32_t n_l, const std::vector<std::int64_t>& defining_set);

// |Z| = d_l and a(beta^j) = 0 for j in D_L, checked in the locator's own splitting field.
bool locator_codeword_valid(const LocatorSpec& loc);

struct NzlCertificate {
    std::uint32_t e = 0;
    std::uint32_t w = 1;
    std::uint32_t t = 0;  // locator shift
    std::uint32_t mu = 1;
    std::uint32_t d_star = 1;
    LocatorSpec locator;
};

struct MuSearchOptions {
    bool search_w = true;
    // w is only searched for n up to this length
    std::uint32_t search_w_max_n = 255;
};

// Maximal mu over e, t and (optionally) w. Ties: smaller e, then t, then w.
NzlCertificate mu_search(const std::vector<std::uint32_t>& defining_set, std::uint32_t n, const LocatorSpec& locator,
                         const MuSearchOptions& opts = {});

// Independent direct scan of a certificate. On failure *why says what broke.
bool verify_certificate(const std::vector<std::uint32_t>& defining_set, std::uint32_t n, const NzlCertificate& cert,
                        std::string* why = nullptr);

std::uint32_t nzl_bound(std::uint32_t mu, std::uint32_t d_l);
std::uint32_t spc_closed_form(std::uint32_t d0, std::uint32_t nu);
std::uint32_t rs_closed_form(std::uint32_t d0, std::uint32_t nu, std::uint32_t m);
// d0 > m - nu + 1 with nu > 0; exactly the cells where rs_closed_form beats d0 + nu.
bool ht_improvement_predicate(std::uint32_t d0, std::uint32_t nu, std::uint32_t m);

// {b + i1 m + i2 : 0 <= i1 <= d0-2, 0 <= i2 <= nu} mod n, sorted.
std::vector<std::uint32_t> ht_pattern_set(std::uint32_t n, std::int64_t b, std::uint32_t d0, std::uint32_t nu,
                                          std::uint32_t m);

struct CandidateLimits {
    std::uint32_t max_n_l = 16;
    std::uint32_t max_u = 4;
    std::vector<LocatorKind> kinds{LocatorKind::Trivial, LocatorKind::Spc,          LocatorKind::Rs,
                                   LocatorKind::Hamming, LocatorKind::LowestRateD3, LocatorKind::LowestRateD2};
    bool allows(LocatorKind k) const;
};

// Locators usable with length-n codes over GF(q), deduplicated by (n_l, D_L), in a fixed order.
std::vector<LocatorSpec> candidate_locators(std::uint32_t n, std::uint32_t q, const CandidateLimits& limits = {});

struct BestBoundOptions {
    CandidateLimits limits;
    MuSearchOptions mu;
    HtOptions ht;
    unsigned threads = 0;
};

struct BestBound {
    NzlCertificate cert;
    BchWitness bch;
    std::optional<HtWitness> ht;  // absent when n exceeds the HT search cap
    std::size_t candidates = 0;
};

// Maximal d* over the candidates. Ties: smaller d_l, smaller n_l, then e, t, w, then candidate order.
BestBound best_bound(const CyclicCodeSpec& code, const BestBoundOptions& opts = {});

struct RatioRow {
    std::uint32_t nu = 0;
    std::uint32_t d0 = 0;
    std::uint32_t m = 0;
    std::uint32_t d_star = 0;
    std::uint32_t ht = 0;
    double ratio = 1.0;
};

// m ranges over [nu + lo, nu + hi]; lo >= 2.
struct MRule {
    std::uint32_t lo = 2;
    std::uint32_t hi = 2;
};

std::vector<RatioRow> ratio_grid(std::uint32_t nu_lo, std::uint32_t nu_hi, std::uint32_t d0_lo, std::uint32_t d0_hi,
                                 const MRule& rule);
std::string ratio_grid_csv(const std::vector<RatioRow>& rows);

}  // namespace cyclicbound

#endif
