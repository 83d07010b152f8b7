#include "cyclicbound/cyclicbound.h"

#include <cstdlib>
#include <cstring>
#include <numeric>
#include <new>

#include "cyclicbound/numtheory.hpp"
#include "cyclicbound/paper_check.hpp"
#include "cyclicbound/report.hpp"

using namespace cyclicbound;

struct cb_code {
    CyclicCodeSpec spec;
};

struct cb_decoder {
    DecoderContext ctx;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <typename F>
int guarded(F&& f) {
    last_error.clear();
    try {
        f();
        return CB_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CB_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CB_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

ReportOptions to_report(const cb_bound_options* o) {
    cb_bound_options d;
    cb_bound_options_default(&d);
    if (!o) o = &d;
    ReportOptions r;
    r.bch = o->bch != 0;
    r.ht = o->ht != 0;
    r.nzl = o->nzl != 0;
    r.oracle = o->oracle != 0;
    r.bound.limits.max_n_l = o->max_n_l;
    r.bound.limits.max_u = o->max_u;
    r.bound.mu.search_w = o->search_w != 0;
    r.bound.ht.max_n = o->ht_max_n;
    r.bound.threads = o->threads;
    r.oracle_opts.cap = o->oracle_cap;
    r.oracle_opts.threads = o->threads;
    return r;
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "0.1.0"; }

const char* cb_last_error(void) { return last_error.c_str(); }

const char* cb_status_name(int status) {
    if (status < 0 || status > CB_INTERNAL) return "Unknown";
    return error_code_name(static_cast<ErrorCode>(status));
}

void cb_string_free(char* s) { std::free(s); }

void cb_bound_options_default(cb_bound_options* o) {
    if (!o) return;
    const ReportOptions r;
    o->bch = o->ht = o->nzl = o->oracle = 1;
    o->max_n_l = r.bound.limits.max_n_l;
    o->max_u = r.bound.limits.max_u;
    o->search_w = r.bound.mu.search_w ? 1 : 0;
    o->ht_max_n = r.bound.ht.max_n;
    o->oracle_cap = r.oracle_opts.cap;
    o->threads = 0;
}

int cb_code_from_reps(uint32_t q, uint32_t n, const int64_t* reps, size_t count, const char* name, cb_code** out) {
    return guarded([&] {
        need(out, "out");
        if (count) need(reps, "reps");
        std::vector<std::int64_t> r(reps, reps + count);
        *out = new cb_code{build_code(q, n, r, name ? name : "")};
    });
}

int cb_code_from_json(const char* json, cb_code** out, char** warnings) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        std::vector<std::string> w;
        auto spec = parse_code_spec(json, &w);
        if (warnings) *warnings = dup(Json(w).dump());
        *out = new cb_code{std::move(spec)};
    });
}

void cb_code_free(cb_code* code) { delete code; }

int cb_code_json(const cb_code* code, char** out) {
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        *out = dup(code_json(code->spec).dump());
    });
}

uint32_t cb_code_length(const cb_code* code) { return code ? code->spec.n : 0; }
uint32_t cb_code_dimension(const cb_code* code) { return code ? code->spec.k : 0; }

int cb_cosets_json(uint32_t n, uint32_t q, char** out) {
    return guarded([&] {
        need(out, "out");
        if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
        if (!nt::prime_power(q)) fail(ErrorCode::CompositeCharacteristic, "q must be a prime power");
        if (std::gcd(n, q) != 1) fail(ErrorCode::NotCoprime, "gcd(n, q) must be 1");
        Json arr = Json::array();
        for (const auto& c : cyclotomic_cosets(n, q)) arr.push_back(Json{{"rep", c.front()}, {"size", c.size()}, {"elements", c}});
        *out = dup(Json{{"n", n}, {"q", q}, {"cosets", arr}}.dump());
    });
}

int cb_bound_report_json(const cb_code* code, const cb_bound_options* opts, char** out) {
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        *out = dup(bound_report(code->spec, to_report(opts)).dump());
    });
}

int cb_decoder_new(const cb_code* code, const char* locator, const cb_bound_options* opts, cb_decoder** out) {
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        const auto ro = to_report(opts);
        NzlCertificate cert;
        if (!locator || !*locator) {
            cert = best_bound(code->spec, [&] {
                       auto b = ro.bound;
                       b.ht.max_n = 0;
                       return b;
                   }())
                       .cert;
        } else {
            const auto loc = parse_locator(locator, code->spec.q);
            cert = mu_search(code->spec.defining_set, code->spec.n, loc, ro.bound.mu);
        }
        auto* d = new cb_decoder;
        try {
            d->ctx = build_context(code->spec, cert.locator, cert);
        } catch (...) {
            delete d;
            throw;
        }
        *out = d;
    });
}

void cb_decoder_free(cb_decoder* dec) { delete dec; }

int cb_decoder_json(const cb_decoder* dec, char** out) {
    return guarded([&] {
        need(dec, "decoder");
        need(out, "out");
        *out = dup(decoder_json(dec->ctx).dump());
    });
}

int cb_decode_json(const cb_decoder* dec, const char* received, char** out) {
    return guarded([&] {
        need(dec, "decoder");
        need(received, "received");
        need(out, "out");
        const auto w = parse_word(received, dec->ctx.code.q);
        if (w.size() != dec->ctx.code.n)
            fail(ErrorCode::LengthMismatch, "received word has " + std::to_string(w.size()) + " symbols, code length is " +
                                                std::to_string(dec->ctx.code.n));
        const auto res = decode(dec->ctx, w);
        *out = dup(decode_result_json(dec->ctx, res).dump());
    });
}

int cb_encode(const cb_code* code, const char* message, char** out) {
    return guarded([&] {
        need(code, "code");
        need(message, "message");
        need(out, "out");
        const auto m = parse_word(message, code->spec.q);
        if (m.size() != code->spec.k)
            fail(ErrorCode::LengthMismatch, "message needs " + std::to_string(code->spec.k) + " symbols");
        *out = dup(format_word(encode(code->spec, m), code->spec.q));
    });
}

int cb_ratio_grid_csv(uint32_t nu_lo, uint32_t nu_hi, uint32_t d0_lo, uint32_t d0_hi, uint32_t m_lo, uint32_t m_hi, char** out) {
    return guarded([&] {
        need(out, "out");
        if (nu_lo > nu_hi || d0_lo > d0_hi || m_lo > m_hi) fail(ErrorCode::InvalidArgument, "empty range");
        if (d0_lo < 2) fail(ErrorCode::InvalidArgument, "d0 starts at 2");
        if (m_lo < 2) fail(ErrorCode::InvalidGeometry, "m must exceed nu + 1");
        *out = dup(ratio_grid_csv(ratio_grid(nu_lo, nu_hi, d0_lo, d0_hi, MRule{m_lo, m_hi})));
    });
}

int cb_paper_check_json(const char* only, char** out, int* passed) {
    return guarded([&] {
        need(out, "out");
        const auto res = run_paper_check(only ? only : "");
        if (passed) *passed = all_passed(res) ? 1 : 0;
        *out = dup(paper_check_json(res).dump());
    });
}

}  // extern "C"
