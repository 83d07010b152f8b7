#include "cyclicbound/report.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (s.empty() || ec != std::errc{} || ptr != e) fail(ErrorCode::ParseError, "bad integer '" + s + "' in " + what);
    return v;
}

std::uint32_t parse_u32(const std::string& s, const std::string& what) {
    const auto v = parse_int(s, what);
    if (v < 0 || v > 0xffffffffLL) fail(ErrorCode::ParseError, "value out of range in " + what + ": " + s);
    return static_cast<std::uint32_t>(v);
}

std::uint32_t json_u32(const Json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xffffffffLL)
        fail(ErrorCode::ParseError, std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::uint32_t>();
}

std::vector<std::int64_t> json_int_array(const Json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_array()) fail(ErrorCode::ParseError, std::string("'") + key + "' must be an array");
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) fail(ErrorCode::ParseError, std::string("'") + key + "' must hold integers");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

// smallest u with m | q^u - 1
std::uint32_t min_u(std::uint32_t q, std::uint32_t m) {
    if (std::gcd(q, m) != 1) fail(ErrorCode::NotCoprime, "locator length shares a factor with q");
    return nt::mult_order(q, m);
}

}  // namespace

CyclicCodeSpec code_spec_from_json(const Json& j, std::vector<std::string>* warnings) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "code spec must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "q" && key != "n" && key != "coset_reps" && key != "defining_set" && key != "name")
            fail(ErrorCode::ParseError, "unknown key '" + key + "'");
    const auto q = json_u32(j, "q");
    const auto n = json_u32(j, "n");
    if (n == 0) fail(ErrorCode::ParseError, "n must be positive");
    std::string name;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) fail(ErrorCode::ParseError, "'name' must be a string");
        name = j.at("name").get<std::string>();
    }
    const bool reps = j.contains("coset_reps");
    const bool dset = j.contains("defining_set");
    if (reps == dset) fail(ErrorCode::ParseError, "give exactly one of 'coset_reps' and 'defining_set'");
    if (reps) return build_code(q, n, json_int_array(j, "coset_reps"), name);
    bool closed = true;
    auto code = code_from_defining_set(q, n, json_int_array(j, "defining_set"), name, &closed);
    if (!closed && warnings)
        warnings->push_back("defining set was not a union of cyclotomic cosets; closed to " +
                            std::to_string(code.defining_set.size()) + " elements");
    return code;
}

CyclicCodeSpec parse_code_spec(const std::string& text, std::vector<std::string>* warnings) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    try {
        return code_spec_from_json(j, warnings);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

Json code_spec_file_json(const CyclicCodeSpec& code) {
    Json j;
    if (!code.name.empty()) j["name"] = code.name;
    j["q"] = code.q;
    j["n"] = code.n;
    j["coset_reps"] = code.coset_reps;
    return j;
}

LocatorSpec parse_locator(const std::string& text, std::uint32_t q) {
    const auto parts = split(text, ':');
    const auto& kind = parts[0];
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi) fail(ErrorCode::ParseError, "wrong number of fields in locator '" + text + "'");
    };
    if (kind == "trivial") {
        want(1, 1);
        return trivial_locator(q);
    }
    if (kind == "spc") {
        want(2, 2);
        return spc_locator(q, parse_u32(parts[1], text));
    }
    if (kind == "rs") {
        want(3, 4);
        const auto m = parse_u32(parts[1], text);
        const auto k = parse_u32(parts[2], text);
        const auto u = parts.size() == 4 ? parse_u32(parts[3], text) : min_u(q, m);
        return rs_locator(q, u, m, k);
    }
    if (kind == "hamming") {
        want(1, 1);
        if (q != 2) fail(ErrorCode::FieldMismatch, "the Hamming locator is binary");
        return hamming_locator();
    }
    if (kind == "d2") {
        want(3, 3);
        if (q != 2) fail(ErrorCode::FieldMismatch, "lowest-rate locators are binary");
        return lowest_rate_d2_locator(parse_u32(parts[1], text), parse_u32(parts[2], text));
    }
    if (kind == "d3") {
        want(4, 4);
        if (q != 2) fail(ErrorCode::FieldMismatch, "lowest-rate locators are binary");
        return lowest_rate_d3_locator(parse_u32(parts[1], text), parse_u32(parts[2], text), parse_u32(parts[3], text));
    }
    if (kind == "custom") {
        want(3, 4);
        const auto nl = parse_u32(parts[1], text);
        std::vector<std::int64_t> d;
        if (!parts[2].empty())
            for (const auto& s : split(parts[2], ',')) d.push_back(parse_int(s, text));
        const auto u = parts.size() == 4 ? parse_u32(parts[3], text) : 1;
        return custom_locator(q, u, nl, d);
    }
    fail(ErrorCode::ParseError, "unknown locator kind '" + kind + "'");
}

Word parse_word(const std::string& text, std::uint32_t q) {
    Word w;
    if (q > 16 || text.find(',') != std::string::npos) {
        for (const auto& s : split(text, ',')) w.push_back(parse_u32(s, "received word"));
    } else {
        for (char c : text) {
            const int lc = std::tolower(static_cast<unsigned char>(c));
            std::uint32_t v;
            if (lc >= '0' && lc <= '9') v = lc - '0';
            else if (lc >= 'a' && lc <= 'f') v = 10 + (lc - 'a');
            else fail(ErrorCode::ParseError, std::string("bad symbol '") + c + "' in received word");
            w.push_back(v);
        }
    }
    for (auto d : w)
        if (d >= q) fail(ErrorCode::ParseError, "symbol " + std::to_string(d) + " is not a digit of GF(" + std::to_string(q) + ")");
    return w;
}

std::string format_word(const Word& w, std::uint32_t q) {
    std::string s;
    if (q > 16) {
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s;
    }
    static const char* hex = "0123456789abcdef";
    for (auto d : w) s.push_back(hex[d]);
    return s;
}

Json code_json(const CyclicCodeSpec& code) {
    Json j;
    j["name"] = code.name;
    j["q"] = code.q;
    j["n"] = code.n;
    j["k"] = code.k;
    j["defining_set"] = code.defining_set;
    j["coset_reps"] = code.coset_reps;
    j["generator"] = code.has_generator() ? Json(code.generator) : Json(nullptr);
    return j;
}

Json locator_json(const LocatorSpec& loc) {
    Json j;
    j["kind"] = locator_kind_name(loc.kind);
    j["label"] = loc.label;
    j["q_l"] = loc.q_l();
    j["u"] = loc.u;
    j["n_l"] = loc.n_l;
    j["k_l"] = loc.k_l;
    j["d_l"] = loc.d_l;
    j["defining_set"] = loc.defining_set;
    j["support"] = loc.support;
    j["coeffs"] = loc.coeffs;
    return j;
}

Json certificate_json(const NzlCertificate& cert) {
    Json j;
    j["e"] = cert.e;
    j["w"] = cert.w;
    j["t_l"] = cert.t;
    j["mu"] = cert.mu;
    j["d_star"] = cert.d_star;
    j["locator"] = locator_json(cert.locator);
    return j;
}

Json bch_json(const BchWitness& w) {
    return Json{{"value", w.value}, {"witness", {{"b", w.b}, {"m1", w.m1}}}};
}

Json ht_json(const HtWitness& w) {
    return Json{{"value", w.value},
                {"witness", {{"b1", w.b1}, {"m1", w.m1}, {"m2", w.m2}, {"d0", w.d0}, {"nu", w.nu}}}};
}

Json bound_report(const CyclicCodeSpec& code, const ReportOptions& opts) {
    Json out;
    out["code"] = code_json(code);
    if (opts.bch) out["bch"] = bch_json(bch_bound(code));
    if (opts.ht) {
        try {
            out["ht"] = ht_json(ht_bound(code, opts.bound.ht));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchCapExceeded) throw;
            out["ht"] = Json{{"value", nullptr}, {"witness", nullptr}, {"skipped", e.what()}};
        }
    }
    if (opts.nzl) {
        BestBoundOptions bo = opts.bound;
        try {
            // best_bound also runs BCH/HT; only the certificate is used here
            bo.ht.max_n = 0;
            const auto bb = best_bound(code, bo);
            std::string why;
            if (!verify_certificate(code.defining_set, code.n, bb.cert, &why))
                fail(ErrorCode::Internal, "emitted certificate does not verify: " + why);
            out["nzl"] = Json{{"d_star", bb.cert.d_star},
                              {"certificate", certificate_json(bb.cert)},
                              {"verified", true},
                              {"candidates", bb.candidates}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateCover) throw;
            // zero-dimensional code, same convention as the BCH bound
            out["nzl"] = Json{{"d_star", code.n + 1}, {"certificate", nullptr}, {"verified", true}, {"note", e.what()}};
        }
    }
    if (opts.oracle) {
        try {
            const auto d = min_distance_oracle(code, opts.oracle_opts);
            out["oracle"] = Json{{"d", d.d_true},
                                 {"capped", false},
                                 {"method", distance_method_name(d.method)},
                                 {"codeword", d.codeword ? Json(format_word(*d.codeword, code.q)) : Json(nullptr)}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooManyCodewords) throw;
            out["oracle"] = Json{{"d", nullptr}, {"capped", true}, {"method", "oracle"}, {"codeword", nullptr}, {"note", e.what()}};
        }
    }
    return out;
}

Json decoder_json(const DecoderContext& ctx) {
    Json j;
    j["field"] = Json{{"p", ctx.field->characteristic()}, {"m", ctx.field->degree()}, {"r", ctx.r}};
    j["certificate"] = certificate_json(ctx.cert);
    j["capability"] = ctx.capability();
    j["kappa"] = ctx.kappa;
    return j;
}

Json decode_result_json(const DecoderContext& ctx, const DecodeResult& res) {
    Json j;
    const bool ok = res.status == DecodeStatus::Success;
    j["status"] = ok ? "success" : "failure";
    if (!ok) {
        j["failure"] = error_code_name(res.failure);
        j["reason"] = res.reason;
    }
    j["positions"] = res.positions;
    j["values"] = res.values;
    j["corrected"] = format_word(res.corrected, ctx.code.q);
    j["lambda_degree"] = res.lambda_degree;
    j["omega_degree"] = res.omega_degree;
    j["decoder"] = decoder_json(ctx);
    return j;
}

}  // namespace cyclicbound
