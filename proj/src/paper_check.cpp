#include "cyclicbound/paper_check.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

template <typename T>
std::string str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}
template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
std::string str(bool b) { return b ? "true" : "false"; }

std::string ht_str(const HtWitness& w) {
    std::ostringstream os;
    os << w.value << " (b1=" << w.b1 << ", m1=" << w.m1 << ", m2=" << w.m2 << ", d0=" << w.d0 << ", nu=" << w.nu << ")";
    return os.str();
}

std::string cert_str(const NzlCertificate& c) {
    std::ostringstream os;
    os << "mu=" << c.mu << " d*=" << c.d_star << " (e=" << c.e << ", w=" << c.w << ", t=" << c.t << ", " << c.locator.label
       << ")";
    return os.str();
}

struct Recorder {
    FixtureResult& out;

    template <typename A, typename B>
    void eq(const std::string& claim, const A& expected, const B& computed, std::string note = {}) {
        const auto e = str(expected), c = str(computed);
        out.items.push_back({claim, e, c, e == c ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
    }
    void that(const std::string& claim, bool ok, const std::string& computed, std::string note = {}) {
        out.items.push_back({claim, "true", computed, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
    }
    void deviation(const std::string& claim, const std::string& expected, const std::string& computed, std::string note) {
        out.items.push_back({claim, expected, computed, CheckStatus::Deviation, std::move(note)});
    }
};

NzlCertificate fixed_w(const CyclicCodeSpec& c, const LocatorSpec& loc) { return mu_search(c.defining_set, c.n, loc, {false}); }
NzlCertificate any_w(const CyclicCodeSpec& c, const LocatorSpec& loc) { return mu_search(c.defining_set, c.n, loc, {true}); }

bool decodes(const CyclicCodeSpec& code, const NzlCertificate& cert, const std::vector<std::uint32_t>& pos) {
    const auto ctx = build_context(code, cert.locator, cert);
    Word msg(code.k, 0);
    for (std::uint32_t i = 0; i < code.k; i += 3) msg[i] = 1;
    const Word c = encode(code, msg);
    Word r = c;
    for (auto p : pos) r[p] = (r[p] + 1) % code.q;
    const auto res = decode(ctx, r);
    return res.status == DecodeStatus::Success && res.corrected == c && res.positions == pos;
}

void fx_gf(Recorder& r) {
    r.eq("smallest s with 21 | 2^s - 1", 6, min_extension_degree(2, 21));
    r.eq("smallest s with 5 | 2^s - 1", 4, min_extension_degree(2, 5));
    const auto f = build_field(2, 6);
    r.eq("GF(2^6) holds an element of order 21", 21, f->element_order(nth_root_of_unity(*f, 21)));
    const auto f4 = build_field(2, 4);
    r.eq("GF(2^4) holds an element of order 5", 5, f4->element_order(nth_root_of_unity(*f4, 5)));
}

void fx_example1(Recorder& r) {
    const auto c = build_code(2, 21, {1, 3, 7, 9}, "C(2;21,7,8)");
    r.eq("defining set", str(std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18}), str(c.defining_set));
    r.eq("dimension", 7, c.k);
    r.eq("coset of 9 mod 21", str(std::vector<int>{9, 15, 18}), str(cyclotomic_coset(21, 2, 9)));
    r.eq("coset of 7 mod 21", str(std::vector<int>{7, 14}), str(cyclotomic_coset(21, 2, 7)));
    r.eq("BCH bound", 5, bch_bound(c).value);
    const auto ht = ht_bound(c);
    r.eq("HT bound", 6, ht.value);
    HtWitness quoted{6, 1, 5, 1, 5, 1};
    HtWitness swapped{6, 1, 1, 5, 5, 1};
    const bool literal = ht_template_holds(c, quoted);
    const bool exchanged = ht_template_holds(c, swapped);
    if (literal) {
        r.that("HT witness (b1=1,m1=5,m2=1,d0=5,nu=1) is a valid template", true, "valid");
    } else {
        r.deviation("HT witness (b1=1,m1=5,m2=1,d0=5,nu=1)", "valid template",
                    std::string("literal template invalid (17 not in D); with m1,m2 exchanged ") + (exchanged ? "valid" : "invalid") +
                        "; search returns " + ht_str(ht),
                    "the stated tuple fits the template only with the roles of m1 and m2 exchanged");
    }
    r.that("exchanged HT witness matches the search", exchanged && ht.b1 == 1 && ht.d0 == 5 && ht.nu == 1 && ht.m1 == 1 && ht.m2 == 5,
           ht_str(ht));
    const auto cert = fixed_w(c, spc_locator(2, 5));
    r.eq("SPC(5) zero run mu-1", 13, cert.mu - 1);
    r.eq("SPC(5) offsets (e, t)", "0,0", str(cert.e) + "," + str(cert.t));
    r.eq("SPC(5) d*", 7, cert.d_star);
    r.eq("ceil(14/2)", 7, nzl_bound(14, 2));
    r.eq("best d* over candidates", 7, best_bound(c).cert.d_star);
    r.eq("minimum distance", 8, min_distance_oracle(c).d_true);
    r.that("decodes 3 errors with d*=7", decodes(c, cert, {2, 9, 20}), "positions {2,9,20}");
}

void fx_sec42(Recorder& r) {
    const auto c = build_code(2, 65, {1, 5}, "C(2;65,41,8)");
    r.eq("dimension", 41, c.k);
    HtWitness quoted{6, 60, 3, 1, 5, 1};  // b2 = -5, m = 3
    r.that("HT template b2=-5, m=3, d0=5, nu=1 lies in D", ht_template_holds(c, quoted), "d >= 6");
    const auto ht = ht_bound(c);
    if (ht.value == 6) {
        r.eq("HT search", 6, ht.value);
    } else {
        r.deviation("HT bound", "6", ht_str(ht) + (ht_template_holds(c, ht) ? ", template verified" : ", template INVALID"),
                    "the quoted parameters give 6; the maximum over all templates is larger");
    }
    const auto cands = candidate_locators(65, 2);
    const bool has_spc3 = std::any_of(cands.begin(), cands.end(), [](const LocatorSpec& l) {
        return l.kind == LocatorKind::Spc && l.n_l == 3 && l.q_l() == 4;
    });
    r.that("candidates include P(3,2,2) over GF(4)", has_spc3, str(cands.size()) + " candidates");
    const auto loc = spc_locator(2, 3);
    r.eq("SPC(3) extension degree u", 2, loc.u);
    const auto cert = fixed_w(c, loc);
    r.eq("SPC(3) d*", 7, cert.d_star);
    r.eq("ceil(5 + 1(5-1)/2)", 7, spc_closed_form(5, 1));
    r.eq("RS closed form, m = nu+2", 7, rs_closed_form(5, 1, 3));
    r.eq("improvement predicate (5,1,3)", true, ht_improvement_predicate(5, 1, 3));
    r.eq("best d* over candidates", 7, best_bound(c).cert.d_star);
    r.that("decodes 3 errors", decodes(c, cert, {0, 30, 64}), "positions {0,30,64}");
    bool capped = false;
    try {
        min_distance_oracle(c);
    } catch (const Error& e) {
        capped = e.code() == ErrorCode::TooManyCodewords;
    }
    r.that("oracle refuses 2^41 codewords", capped, capped ? "capped" : "ran");
}

void fx_table4(Recorder& r) {
    const auto c = build_code(2, 65, {1, 5, 7}, "table4");
    r.that("-1,-5,-7 follow from 1,5,7 (reversible)", c.contains(64) && c.contains(60) && c.contains(58), str(c.defining_set.size()) + " elements");
    const auto cert = any_w(c, spc_locator(2, 3));
    r.eq("P(3,2,2): mu", 22, cert.mu);
    r.eq("P(3,2,2): d*", 11, cert.d_star);
    r.that("certificate verifies", verify_certificate(c.defining_set, c.n, cert), cert_str(cert));
}

void fx_table5(Recorder& r) {
    const auto c = code_from_defining_set(2, 45, {1, 7, 9, 11, 15}, "table5");
    r.eq("dimension", 15, c.k);
    const auto loc = hamming_locator();
    r.eq("Hamming locator defining set", str(std::vector<int>{3, 5, 6}), str(loc.defining_set));
    const auto cert = any_w(c, loc);
    r.eq("Hamming: mu", 21, cert.mu);
    r.eq("Hamming: d*", 7, cert.d_star);
    r.eq("ceil(21/3)", 7, nzl_bound(21, 3));
    const auto d = min_distance_oracle(c).d_true;
    r.that("oracle distance >= d*", d >= cert.d_star, "d = " + str(d));
}

void fx_table6(Recorder& r) {
    // RS of length 4 needs 4 | q^u - 1: q = 5, n = 13
    const auto c = code_from_defining_set(5, 13, {3, 5, 11, 13, -3, -5, -11, -13}, "table6");
    r.eq("dimension", 4, c.k);
    const auto loc = rs_locator(5, 1, 4, 2);
    r.eq("RS(q_l;4,2,0) defining set", str(std::vector<int>{0, 1}), str(loc.defining_set));
    r.eq("RS(q_l;4,2,0) d_l", 3, loc.d_l);
    const auto cands = candidate_locators(13, 5);
    r.that("candidates include RS(5;4,2,0)", std::any_of(cands.begin(), cands.end(), [](const LocatorSpec& l) {
               return l.kind == LocatorKind::Rs && l.n_l == 4 && l.k_l == 2;
           }),
           str(cands.size()) + " candidates");
    NzlCertificate stride;
    {
        // step 2 from -17, as in the sequence c(alpha^{-17+2j}) a(beta^j)
        stride.e = static_cast<std::uint32_t>(nt::mod(-17, 13));
        stride.w = 2;
        stride.t = 0;
        stride.mu = 19;
        stride.d_star = nzl_bound(19, 3);
        stride.locator = loc;
        std::string why;
        r.that("e=-17, step 2, mu=19 verifies", verify_certificate(c.defining_set, c.n, stride, &why), why.empty() ? "ok" : why);
    }
    const auto cert = any_w(c, loc);
    r.eq("RS: mu", 19, cert.mu);
    r.eq("RS: d*", 7, cert.d_star);
    r.eq("ceil(19/3)", 7, nzl_bound(19, 3));
    const auto d = min_distance_oracle(c).d_true;
    r.that("oracle distance >= d*", d >= cert.d_star, "d = " + str(d));
}

void fx_example3(Recorder& r) {
    const std::vector<std::uint32_t> reps{1, 11, 51};
    r.eq("gcd(1,11,51)", 1, std::gcd(std::gcd(1u, 11u), 51u));
    for (auto i : reps) r.that("rep " + str(i) + " lies in C_1 mod 7", (i % 7 == 1 || i % 7 == 2 || i % 7 == 4), str(i % 7));
    r.eq("has distance two", false, has_distance_two(119, reps));
    const auto c = build_code(2, 119, {1, 11, 51});
    r.eq("dimension", 68, c.k);
    const auto w = distance_three_witness(119, reps, 3, 1);
    r.eq("witness weight", 3, hamming_weight(*w.codeword));
    // The generator needs GF(2^24). The support sits on multiples of 17, so c(x) = c'(x^17) and c vanishes on D
    // exactly when c' is in the length-7 code with zeros D mod 7 = {1,2,4}.
    bool folded = true;
    Word c7(7, 0);
    for (std::size_t j = 0; j < w.codeword->size(); ++j)
        if ((*w.codeword)[j]) {
            folded = folded && j % 17 == 0;
            c7[(j / 17) % 7] ^= 1;
        }
    const auto h7 = build_code(2, 7, {1});
    r.that("folded witness lies in the (7,4) code with zeros {1,2,4}", folded && is_codeword(h7, c7), format_word(c7, 2));
    r.eq("certified distance", 3, w.d_true);
}

void fx_example4(Recorder& r) {
    const auto c = lowest_rate_d3_code(17, 3, 1);
    r.eq("length", 119, c.n);
    r.eq("dimension", 68, c.k);
    r.eq("rate", "68/119", str(c.k) + "/" + str(c.n));
    const auto ex3 = build_code(2, 119, {1, 11, 51});
    r.that("same defining set as C_1 u C_11 u C_51", c.defining_set == ex3.defining_set, str(c.coset_reps));
    const std::vector<std::uint32_t> listed{1, 2, 4, 8, 9, 11, 15, 16, 18, 22, 116};
    const std::vector<std::uint32_t> gaps{0, 3, 5, 6, 7, 10, 12, 13, 14, 17, 19, 20, 21, 117, 118};
    bool ok = true;
    for (auto i : listed) ok = ok && c.contains(i);
    for (auto i : gaps) ok = ok && !c.contains(i);
    r.that("listed members and gaps", ok, str(c.defining_set.size()) + " elements");
    bool rep = true;
    for (std::uint32_t i = 0; i < c.n; ++i) rep = rep && (c.contains(i) == (i % 7 == 1 || i % 7 == 2 || i % 7 == 4));
    r.that("repetition of the Hamming pattern {1,2,4}", rep, rep ? "yes" : "no");
}

void fx_prop2(Recorder& r) {
    for (auto [a, g] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 3}, {5, 3}, {3, 5}, {3, 7}}) {
        const auto c = lowest_rate_d2_code(a, g);
        r.eq("k = a(g-1) for (" + str(a) + "," + str(g) + ")", a * (g - 1), c.k);
        r.eq("d for (" + str(a) + "," + str(g) + ")", 2, min_distance_oracle(c).d_true);
    }
}

void fx_closed_forms(Recorder& r) {
    r.eq("ceil(14/2)", 7, nzl_bound(14, 2));
    r.eq("ceil(19/3)", 7, nzl_bound(19, 3));
    r.eq("SPC closed form (5,1)", 7, spc_closed_form(5, 1));
    r.eq("RS closed form (5,1,3)", 7, rs_closed_form(5, 1, 3));
    r.eq("predicate (5,1,3)", true, ht_improvement_predicate(5, 1, 3));
    bool none = true;
    for (std::uint32_t nu = 1; nu <= 6; ++nu) none = none && !ht_improvement_predicate(3, nu, nu + 2);
    r.eq("predicate (3,nu,nu+2) for nu=1..6", false, !none);
}

void fx_fig1(Recorder& r) {
    const auto rows = ratio_grid(1, 6, 2, 20, {2, 2});
    r.eq("grid size", 6 * 19, rows.size());
    bool ok = true;
    for (const auto& row : rows) ok = ok && ((row.ratio > 1.0) == (row.d0 > 3));
    r.that("ratio > 1 iff d0 > 3", ok, ok ? "all cells" : "mismatch");
}

void fx_fig2(Recorder& r) {
    const auto rows = ratio_grid(6, 6, 2, 20, {2, 6});
    bool mono = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].d0 == rows[i - 1].d0 && rows[i].m > rows[i - 1].m) mono = mono && rows[i].d_star <= rows[i - 1].d_star;
    r.that("d* non-increasing in m at fixed d0 (nu=6)", mono, str(rows.size()) + " cells");
}

void fx_decoding(Recorder& r) {
    const auto c = build_code(2, 21, {1, 3, 7, 9});
    const auto cert = mu_search(c.defining_set, c.n, trivial_locator(2));
    const auto ctx = build_context(c, cert.locator, cert);
    const auto& f = ctx.field;
    r.that("a(x)=1 gives f(x) = 1 - x", ctx.f == Poly(f, {1, f->neg(1)}), "deg " + str(ctx.f.degree()));
    r.that("a(x)=1 gives h(x) = 1", ctx.h == Poly::constant(f, 1), "deg " + str(ctx.h.degree()));
    const auto spc = fixed_w(c, spc_locator(2, 5));
    const auto sctx = build_context(c, spc.locator, spc);
    bool zero = true;
    for (std::uint32_t m = 1; m < (1u << c.k); m += 7) {
        Word msg(c.k);
        for (std::uint32_t i = 0; i < c.k; ++i) msg[i] = (m >> i) & 1;
        zero = zero && syndromes(sctx, encode(c, msg)).is_zero();
    }
    r.that("codewords have zero syndrome", zero, zero ? "zero" : "nonzero");
}

using FixtureFn = void (*)(Recorder&);
struct Fixture {
    const char* id;
    const char* title;
    FixtureFn fn;
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"gf", "extension degrees and roots of unity", fx_gf},
        {"example1", "binary code of length 21", fx_example1},
        {"sec42", "binary reversible code of length 65 with P(3,2,2)", fx_sec42},
        {"table4", "family with a single parity check locator", fx_table4},
        {"table5", "family with the binary Hamming locator", fx_table5},
        {"table6", "family with an RS(q_l;4,2,0) locator", fx_table6},
        {"example3", "length 119 code with distance three", fx_example3},
        {"example4", "lowest-rate distance-three code of length 119", fx_example4},
        {"prop2", "lowest-rate distance-two codes", fx_prop2},
        {"closed_forms", "closed-form bounds", fx_closed_forms},
        {"fig1", "ratio grid with SPC locators", fx_fig1},
        {"fig2", "ratio grid with RS locators, nu = 6", fx_fig2},
        {"decoding", "syndrome definition", fx_decoding},
    };
    return all;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Deviation: return "deviation";
    }
    return "?";
}

CheckStatus FixtureResult::status() const {
    CheckStatus s = CheckStatus::Pass;
    for (const auto& i : items) {
        if (i.status == CheckStatus::Fail) return CheckStatus::Fail;
        if (i.status == CheckStatus::Deviation) s = CheckStatus::Deviation;
    }
    return s;
}

std::vector<std::string> paper_fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& f : fixtures()) ids.emplace_back(f.id);
    return ids;
}

std::vector<FixtureResult> run_paper_check(const std::string& only) {
    std::vector<FixtureResult> out;
    for (const auto& f : fixtures()) {
        if (!only.empty() && only != f.id) continue;
        FixtureResult res{f.id, f.title, {}, 0};
        Recorder rec{res};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            f.fn(rec);
        } catch (const Error& e) {
            res.items.push_back({"fixture ran", "no error", std::string(error_code_name(e.code())) + ": " + e.what(), CheckStatus::Fail, {}});
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    if (!only.empty() && out.empty()) fail(ErrorCode::InvalidArgument, "unknown fixture '" + only + "'");
    return out;
}

bool all_passed(const std::vector<FixtureResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const FixtureResult& r) { return r.status() == CheckStatus::Fail; });
}

Json paper_check_json(const std::vector<FixtureResult>& results) {
    Json rows = Json::array();
    for (const auto& r : results) {
        Json items = Json::array();
        for (const auto& i : r.items) {
            Json it{{"claim", i.claim}, {"expected", i.expected}, {"computed", i.computed}, {"status", check_status_name(i.status)}};
            if (!i.note.empty()) it["note"] = i.note;
            items.push_back(std::move(it));
        }
        rows.push_back(Json{{"id", r.id}, {"title", r.title}, {"status", check_status_name(r.status())}, {"seconds", r.seconds}, {"checks", std::move(items)}});
    }
    return Json{{"passed", all_passed(results)}, {"fixtures", std::move(rows)}};
}

}  // namespace cyclicbound
