#include "cyclicbound/nzl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "cyclicbound/error.hpp"
#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

std::uint32_t q_power(std::uint32_t q, std::uint32_t u) {
    const std::uint64_t v = nt::checked_pow(q, u, kMaxFieldSize);
    if (v == 0) {
        std::ostringstream os;
        os << q << "^" << u << " exceeds the 2^20 field limit";
        fail(ErrorCode::FieldTooLarge, os.str());
    }
    return static_cast<std::uint32_t>(v);
}

std::uint32_t characteristic_of(std::uint32_t q) {
    auto pp = nt::prime_power(q);
    if (!pp) fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
    return pp->first;
}

LocatorSpec from_code(LocatorKind kind, std::uint32_t q, std::uint32_t u, const CyclicCodeSpec& code, std::string label) {
    LocatorSpec loc;
    loc.kind = kind;
    loc.q = q;
    loc.u = u;
    loc.n_l = code.n;
    loc.k_l = code.k;
    loc.defining_set = code.defining_set;
    auto mw = min_weight_codeword(kind, q, u, code.n, code.defining_set);
    loc.support = std::move(mw.support);
    loc.coeffs = std::move(mw.coeffs);
    loc.d_l = mw.weight;
    loc.label = std::move(label);
    return loc;
}

}  // namespace

const char* locator_kind_name(LocatorKind k) {
    switch (k) {
        case LocatorKind::Trivial: return "trivial";
        case LocatorKind::Spc: return "spc";
        case LocatorKind::Rs: return "rs";
        case LocatorKind::Hamming: return "hamming";
        case LocatorKind::LowestRateD2: return "lowest-rate-d2";
        case LocatorKind::LowestRateD3: return "lowest-rate-d3";
        case LocatorKind::Custom: return "custom";
    }
    return "unknown";
}

std::optional<LocatorKind> parse_locator_kind(std::string_view s) {
    for (auto k : {LocatorKind::Trivial, LocatorKind::Spc, LocatorKind::Rs, LocatorKind::Hamming, LocatorKind::LowestRateD2,
                   LocatorKind::LowestRateD3, LocatorKind::Custom})
        if (s == locator_kind_name(k)) return k;
    if (s == "d2") return LocatorKind::LowestRateD2;
    if (s == "d3") return LocatorKind::LowestRateD3;
    return std::nullopt;
}

std::uint32_t LocatorSpec::q_l() const { return q_power(q, u); }

std::uint32_t LocatorSpec::s_l() const { return nt::mult_order(q_l(), n_l); }

MinWeightCodeword min_weight_codeword(LocatorKind kind, std::uint32_t q, std::uint32_t u, std::uint32_t n_l,
                                      const std::vector<std::uint32_t>& defining_set) {
    const std::uint32_t ql = q_power(q, u);
    MinWeightCodeword out;
    switch (kind) {
        case LocatorKind::Trivial:
            out.support = {0};
            out.coeffs = {1};
            out.weight = 1;
            return out;
        case LocatorKind::Spc:
            out.support = {0, 1};
            out.coeffs = {1, characteristic_of(q) - 1};  // 1 - x
            out.weight = 2;
            return out;
        case LocatorKind::Rs: {
            FieldPtr f = canonical_field(ql, n_l);
            const Element beta = code_root(f, ql, n_l);
            std::vector<Element> roots;
            for (auto i : defining_set) roots.push_back(f->pow(beta, i));
            Poly g = Poly::from_roots(f, roots);
            BaseFieldMap map(f, ql);
            for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
                if (g.coeffs()[i] == 0) fail(ErrorCode::Internal, "RS generator has a zero coefficient");
                out.support.push_back(static_cast<std::uint32_t>(i));
                out.coeffs.push_back(map.digit(g.coeffs()[i]));
            }
            out.weight = static_cast<std::uint32_t>(out.support.size());
            return out;
        }
        default: break;
    }
    std::vector<std::int64_t> d(defining_set.begin(), defining_set.end());
    auto code = code_from_defining_set(ql, n_l, d);
    DistanceWitness w;
    try {
        w = min_distance_oracle(code, OracleOptions{kMaxFieldSize, 1});
    } catch (const Error& e) {
        if (e.code() == ErrorCode::TooManyCodewords) fail(ErrorCode::SearchCapExceeded, e.what());
        throw;
    }
    if (!w.codeword) fail(ErrorCode::InvalidArgument, "locator code has no nonzero codeword");
    for (std::uint32_t i = 0; i < n_l; ++i)
        if ((*w.codeword)[i]) {
            out.support.push_back(i);
            out.coeffs.push_back((*w.codeword)[i]);
        }
    out.weight = w.d_true;
    return out;
}

LocatorSpec trivial_locator(std::uint32_t q) {
    characteristic_of(q);
    LocatorSpec loc;
    loc.kind = LocatorKind::Trivial;
    loc.q = q;
    loc.support = {0};
    loc.coeffs = {1};
    loc.label = "trivial";
    return loc;
}

LocatorSpec spc_locator(std::uint32_t q, std::uint32_t n_l) {
    const std::uint32_t p = characteristic_of(q);
    if (n_l < 2) fail(ErrorCode::InvalidArgument, "parity check length must be at least 2");
    if (n_l % p == 0) fail(ErrorCode::NotCoprime, "parity check length shares the characteristic");
    LocatorSpec loc;
    loc.kind = LocatorKind::Spc;
    loc.q = q;
    loc.u = nt::mult_order(q, n_l);
    loc.n_l = n_l;
    loc.k_l = n_l - 1;
    loc.d_l = 2;
    loc.defining_set = {0};
    auto mw = min_weight_codeword(LocatorKind::Spc, q, loc.u, n_l, loc.defining_set);
    loc.support = mw.support;
    loc.coeffs = mw.coeffs;
    loc.label = "spc(" + std::to_string(n_l) + ")";
    return loc;
}

LocatorSpec rs_locator(std::uint32_t q, std::uint32_t u, std::uint32_t m, std::uint32_t k) {
    const std::uint32_t ql = q_power(q, u);
    if (m < 2 || k < 1 || k >= m) fail(ErrorCode::InvalidArgument, "RS needs 1 <= k < m");
    if ((ql - 1) % m != 0) {
        std::ostringstream os;
        os << m << " does not divide " << ql << " - 1";
        fail(ErrorCode::OrderDoesNotDivide, os.str());
    }
    LocatorSpec loc;
    loc.kind = LocatorKind::Rs;
    loc.q = q;
    loc.u = u;
    loc.n_l = m;
    loc.k_l = k;
    for (std::uint32_t i = 0; i + k < m; ++i) loc.defining_set.push_back(i);
    auto mw = min_weight_codeword(LocatorKind::Rs, q, u, m, loc.defining_set);
    if (mw.weight != m - k + 1) fail(ErrorCode::Internal, "RS generator is not of MDS weight");
    loc.support = std::move(mw.support);
    loc.coeffs = std::move(mw.coeffs);
    loc.d_l = mw.weight;
    std::ostringstream os;
    os << "rs(" << ql << ";" << m << "," << k << ")";
    loc.label = os.str();
    return loc;
}

LocatorSpec hamming_locator() {
    auto code = code_from_defining_set(2, 7, {3, 5, 6});
    return from_code(LocatorKind::Hamming, 2, 1, code, "hamming(7,4)");
}

LocatorSpec lowest_rate_d2_locator(std::uint32_t a, std::uint32_t g) {
    auto code = lowest_rate_d2_code(a, g);
    return from_code(LocatorKind::LowestRateD2, 2, 1, code, code.name);
}

LocatorSpec lowest_rate_d3_locator(std::uint32_t a, std::uint32_t g, std::uint32_t r) {
    auto code = lowest_rate_d3_code(a, g, r);
    return from_code(LocatorKind::LowestRateD3, 2, 1, code, code.name);
}

LocatorSpec custom_locator(std::uint32_t q, std::uint32_t u, std::uint32_t n_l, const std::vector<std::int64_t>& defining_set) {
    const std::uint32_t ql = q_power(q, u);
    bool closed = false;
    auto code = code_from_defining_set(ql, n_l, defining_set, {}, &closed);
    if (!closed) fail(ErrorCode::PreconditionViolated, "locator defining set is not a union of cyclotomic cosets");
    std::ostringstream os;
    os << "custom(" << ql << ";" << n_l << ")";
    return from_code(LocatorKind::Custom, q, u, code, os.str());
}

bool locator_codeword_valid(const LocatorSpec& loc) {
    if (loc.support.size() != loc.d_l || loc.coeffs.size() != loc.d_l) return false;
    if (loc.n_l == 1) return loc.defining_set.empty() && loc.coeffs == Word{1};
    const std::uint32_t ql = loc.q_l();
    FieldPtr f = canonical_field(ql, loc.n_l);
    const Element beta = code_root(f, ql, loc.n_l);
    BaseFieldMap map(f, ql);
    for (auto c : loc.coeffs)
        if (c == 0 || c >= ql) return false;
    for (auto j : loc.defining_set) {
        Element acc = 0;
        for (std::size_t i = 0; i < loc.support.size(); ++i)
            acc = f->add(acc, f->mul(map.element(loc.coeffs[i]), f->pow(beta, std::int64_t{loc.support[i]} * j)));
        if (acc != 0) return false;
    }
    return true;
}

NzlCertificate mu_search(const std::vector<std::uint32_t>& defining_set, std::uint32_t n, const LocatorSpec& locator,
                         const MuSearchOptions& opts) {
    const std::uint32_t nl = locator.n_l;
    if (n == 0 || nl == 0) fail(ErrorCode::InvalidArgument, "lengths must be positive");
    if (std::gcd(n, nl) != 1) {
        std::ostringstream os;
        os << "gcd(n=" << n << ", n_l=" << nl << ") != 1";
        fail(ErrorCode::NotCoprime, os.str());
    }
    std::vector<char> member(n, 0), lmember(nl, 0);
    for (auto i : defining_set) member.at(i) = 1;
    for (auto i : locator.defining_set) lmember.at(i) = 1;

    std::vector<std::uint32_t> ws;
    if (opts.search_w && n <= opts.search_w_max_n)
        ws = nt::units(n);
    else
        ws = {n == 1 ? 0u : 1u};

    const std::uint64_t big = std::uint64_t{n} * nl;
    std::vector<char> hit(big);
    std::vector<std::uint32_t> run(big);
    std::vector<char> dw(n);

    NzlCertificate best;
    best.locator = locator;
    std::uint32_t best_run = 0;
    bool have = false;
    for (auto w : ws) {
        for (std::uint32_t i = 0; i < n; ++i) dw[i] = member[std::uint64_t{w} * i % n];
        bool all = true;
        for (std::uint64_t k = 0; k < big; ++k) {
            hit[k] = dw[k % n] || lmember[k % nl];
            all = all && hit[k];
        }
        if (all) fail(ErrorCode::DegenerateCover, "every position is covered; the code or the locator is zero-dimensional");
        // run[k]: satisfied positions starting at k around the cycle of length n * n_l
        std::fill(run.begin(), run.end(), 0);
        for (std::uint64_t k = 2 * big; k-- > 0;) {
            const std::uint64_t pos = k % big;
            run[pos] = hit[pos] ? run[(pos + 1) % big] + 1 : 0;
        }
        for (std::uint64_t k = 0; k < big; ++k) {
            const auto e = static_cast<std::uint32_t>(std::uint64_t{w} * (k % n) % n);
            const auto t = static_cast<std::uint32_t>(k % nl);
            const std::uint32_t r = run[k];
            if (!have || std::make_tuple(r, -std::int64_t{e}, -std::int64_t{t}, -std::int64_t{w}) >
                             std::make_tuple(best_run, -std::int64_t{best.e}, -std::int64_t{best.t}, -std::int64_t{best.w})) {
                have = true;
                best_run = r;
                best.e = e;
                best.t = t;
                best.w = w;
            }
        }
    }
    best.mu = best_run + 1;
    best.d_star = nzl_bound(best.mu, locator.d_l);
    return best;
}

bool verify_certificate(const std::vector<std::uint32_t>& defining_set, std::uint32_t n, const NzlCertificate& cert,
                        std::string* why) {
    auto no = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const auto& loc = cert.locator;
    const std::uint32_t nl = loc.n_l;
    if (n == 0 || nl == 0) return no("zero length");
    if (std::gcd(n, nl) != 1) return no("gcd(n, n_l) != 1");
    if (cert.e >= n) return no("offset out of range");
    if (n > 1 && std::gcd(cert.w, n) != 1) return no("multiplier is not a unit");
    if (cert.t >= nl) return no("shift out of range");
    if (cert.mu < 1 || std::uint64_t{cert.mu} > std::uint64_t{n} * nl) return no("mu out of range");
    if (loc.d_l < 1) return no("locator distance must be positive");
    if (cert.d_star != (cert.mu + loc.d_l - 1) / loc.d_l) return no("d* != ceil(mu / d_l)");
    std::set<std::uint32_t> dc(defining_set.begin(), defining_set.end());
    std::set<std::uint32_t> dl(loc.defining_set.begin(), loc.defining_set.end());
    auto ok = [&](std::uint64_t j) {
        return dc.count(static_cast<std::uint32_t>((cert.e + std::uint64_t{cert.w} * j) % n)) ||
               dl.count(static_cast<std::uint32_t>((j + cert.t) % nl));
    };
    for (std::uint64_t j = 0; j + 1 < cert.mu; ++j)
        if (!ok(j)) return no("condition fails at j = " + std::to_string(j));
    if (ok(cert.mu - 1)) return no("run is not maximal");
    return true;
}

std::uint32_t nzl_bound(std::uint32_t mu, std::uint32_t d_l) {
    if (mu < 1 || d_l < 1) fail(ErrorCode::InvalidArgument, "need mu >= 1 and d_l >= 1");
    return static_cast<std::uint32_t>(nt::ceil_div(mu, d_l));
}

std::uint32_t spc_closed_form(std::uint32_t d0, std::uint32_t nu) {
    if (d0 < 2) fail(ErrorCode::InvalidArgument, "need d0 >= 2");
    return d0 + static_cast<std::uint32_t>(nt::ceil_div(std::uint64_t{nu} * (d0 - 1), 2));
}

std::uint32_t rs_closed_form(std::uint32_t d0, std::uint32_t nu, std::uint32_t m) {
    if (m <= nu + 1) fail(ErrorCode::InvalidGeometry, "need m > nu + 1");
    if (d0 < 2) fail(ErrorCode::InvalidArgument, "need d0 >= 2");
    return static_cast<std::uint32_t>(nt::ceil_div(std::uint64_t{m} * d0 - nu, m - nu));
}

bool ht_improvement_predicate(std::uint32_t d0, std::uint32_t nu, std::uint32_t m) {
    if (m <= nu + 1) fail(ErrorCode::InvalidGeometry, "need m > nu + 1");
    // nu = 0: d* = d0 for every m, never an improvement
    return nu > 0 && std::int64_t{d0} > std::int64_t{m} - nu + 1;
}

std::vector<std::uint32_t> ht_pattern_set(std::uint32_t n, std::int64_t b, std::uint32_t d0, std::uint32_t nu, std::uint32_t m) {
    std::set<std::uint32_t> s;
    for (std::int64_t i1 = 0; i1 + 2 <= d0; ++i1)
        for (std::int64_t i2 = 0; i2 <= nu; ++i2) s.insert(static_cast<std::uint32_t>(nt::mod(b + i1 * m + i2, n)));
    return {s.begin(), s.end()};
}

bool CandidateLimits::allows(LocatorKind k) const { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); }

std::vector<LocatorSpec> candidate_locators(std::uint32_t n, std::uint32_t q, const CandidateLimits& limits) {
    const std::uint32_t p = characteristic_of(q);
    std::vector<LocatorSpec> out;
    std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> seen;
    auto usable = [&](std::uint32_t nl) { return nl >= 2 && nl <= limits.max_n_l && std::gcd(nl, n) == 1 && nl % p != 0; };
    auto add = [&](LocatorSpec&& loc) {
        if (seen.emplace(loc.n_l, loc.defining_set).second) out.push_back(std::move(loc));
    };

    if (limits.allows(LocatorKind::Trivial)) add(trivial_locator(q));
    if (limits.allows(LocatorKind::Spc))
        for (std::uint32_t nl = 2; nl <= limits.max_n_l; ++nl)
            if (usable(nl) && nt::checked_pow(q, nt::mult_order(q, nl), kMaxFieldSize)) add(spc_locator(q, nl));
    if (limits.allows(LocatorKind::Rs))
        for (std::uint32_t u = 1; u <= limits.max_u; ++u) {
            const std::uint64_t ql = nt::checked_pow(q, u, kMaxFieldSize);
            if (!ql) break;
            for (std::uint32_t m = 3; m <= limits.max_n_l; ++m) {
                if ((ql - 1) % m || !usable(m)) continue;
                for (std::uint32_t k = 1; k + 2 <= m; ++k) {
                    std::vector<std::uint32_t> dl;
                    for (std::uint32_t i = 0; i + k < m; ++i) dl.push_back(i);
                    if (seen.count({m, dl})) continue;
                    add(rs_locator(q, u, m, k));
                }
            }
        }
    if (q == 2) {
        if (limits.allows(LocatorKind::Hamming) && usable(7)) add(hamming_locator());
        if (limits.allows(LocatorKind::LowestRateD3))
            for (std::uint32_t g = 2; g <= 4; ++g) {
                const std::uint32_t big_n = (1u << g) - 1;
                for (std::uint32_t a = 1; a * big_n <= limits.max_n_l; ++a) {
                    const std::uint32_t nl = a * big_n;
                    if (!usable(nl)) continue;
                    for (std::uint32_t r = 1; r < big_n; ++r) {
                        if (std::gcd(r, big_n) != 1 || std::gcd(r, nl) != 1) continue;
                        auto loc = lowest_rate_d3_locator(a, g, r);
                        if (seen.count({loc.n_l, loc.defining_set})) continue;
                        add(std::move(loc));
                    }
                }
            }
        if (limits.allows(LocatorKind::LowestRateD2))
            for (std::uint32_t g = 2; g <= limits.max_n_l; ++g)
                for (std::uint32_t a = 2; a * g <= limits.max_n_l; ++a) {
                    if (!usable(a * g)) continue;
                    auto loc = lowest_rate_d2_locator(a, g);
                    if (seen.count({loc.n_l, loc.defining_set})) continue;
                    add(std::move(loc));
                }
    }
    return out;
}

BestBound best_bound(const CyclicCodeSpec& code, const BestBoundOptions& opts) {
    BestBound out;
    out.bch = bch_bound(code);
    try {
        out.ht = ht_bound(code, opts.ht);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchCapExceeded) throw;
    }
    const auto cands = candidate_locators(code.n, code.q, opts.limits);
    out.candidates = cands.size();

    std::vector<std::optional<NzlCertificate>> results(cands.size());
    std::vector<std::string> errors(cands.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cands.size();) {
            try {
                results[i] = mu_search(code.defining_set, code.n, cands[i], opts.mu);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegenerateCover) errors[i] = e.what();
            }
        }
    };
    unsigned threads = opts.threads ? opts.threads : default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cands.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (!e.empty()) fail(ErrorCode::Internal, "candidate evaluation failed: " + e);

    auto key = [](const NzlCertificate& c, std::size_t idx) {
        return std::make_tuple(c.d_star, -std::int64_t{c.locator.d_l}, -std::int64_t{c.locator.n_l}, -std::int64_t{c.e},
                               -std::int64_t{c.t}, -std::int64_t{c.w}, -static_cast<std::int64_t>(idx));
    };
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) continue;
        if (!best || key(*results[i], i) > key(*results[*best], *best)) best = i;
    }
    if (!best) fail(ErrorCode::DegenerateCover, "no candidate locator yields a certificate (zero-dimensional code?)");
    out.cert = *results[*best];
    return out;
}

std::vector<RatioRow> ratio_grid(std::uint32_t nu_lo, std::uint32_t nu_hi, std::uint32_t d0_lo, std::uint32_t d0_hi,
                                 const MRule& rule) {
    if (nu_lo > nu_hi || d0_lo > d0_hi || d0_lo < 2) fail(ErrorCode::InvalidArgument, "empty or invalid range");
    if (rule.lo < 2 || rule.lo > rule.hi) fail(ErrorCode::InvalidGeometry, "m rule must give m >= nu + 2");
    std::vector<RatioRow> rows;
    for (std::uint32_t nu = nu_lo; nu <= nu_hi; ++nu)
        for (std::uint32_t d0 = d0_lo; d0 <= d0_hi; ++d0)
            for (std::uint32_t m = nu + rule.lo; m <= nu + rule.hi; ++m) {
                RatioRow r;
                r.nu = nu;
                r.d0 = d0;
                r.m = m;
                r.d_star = rs_closed_form(d0, nu, m);
                r.ht = d0 + nu;
                r.ratio = static_cast<double>(r.d_star) / r.ht;
                rows.push_back(r);
            }
    return rows;
}

std::string ratio_grid_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream os;
    os << "nu,d0,m,d_star,ht,ratio\n";
    char buf[32];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.ratio);
        os << r.nu << ',' << r.d0 << ',' << r.m << ',' << r.d_star << ',' << r.ht << ',' << buf << '\n';
    }
    return os.str();
}

}  // namespace cyclicbound
