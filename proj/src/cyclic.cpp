#include "cyclicbound/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "cyclicbound/error.hpp"
#include "cyclicbound/numtheory.hpp"

namespace cyclicbound {

namespace {

std::pair<std::uint32_t, std::uint32_t> base_prime_power(std::uint32_t q) {
    auto pp = nt::prime_power(q);
    if (!pp) fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
    return *pp;
}

void check_length(std::uint32_t q, std::uint32_t n) {
    base_prime_power(q);
    if (n == 0) fail(ErrorCode::InvalidArgument, "length must be positive");
    if (std::gcd(q, n) != 1) {
        std::ostringstream os;
        os << "gcd(n=" << n << ", q=" << q << ") != 1";
        fail(ErrorCode::NotCoprime, os.str());
    }
}

// GF(q) itself; digits coincide with element encodings there.
FieldPtr digit_field(std::uint32_t q) {
    auto [p, a] = base_prime_power(q);
    return build_field(p, a);
}

Word generator_digits(std::uint32_t q, std::uint32_t n, const std::vector<std::uint32_t>& dset) {
    FieldPtr f;
    try {
        f = canonical_field(q, n);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::FieldTooLarge) return {};
        throw;
    }
    const Element alpha = code_root(f, q, n);
    std::vector<Element> roots;
    roots.reserve(dset.size());
    for (auto i : dset) roots.push_back(f->pow(alpha, i));
    Poly g = Poly::from_roots(f, roots);
    BaseFieldMap map(f, q);
    Word out;
    out.reserve(g.coeffs().size());
    for (Element c : g.coeffs()) {
        if (!map.contains(c)) fail(ErrorCode::Internal, "generator coefficient outside GF(q); defining set not closed");
        out.push_back(map.digit(c));
    }
    return out;
}

CyclicCodeSpec finish_code(std::uint32_t q, std::uint32_t n, std::set<std::uint32_t> dset, std::string name) {
    CyclicCodeSpec c;
    c.name = std::move(name);
    c.q = q;
    c.n = n;
    c.defining_set.assign(dset.begin(), dset.end());
    std::set<std::uint32_t> seen;
    for (auto i : c.defining_set) {
        if (seen.count(i)) continue;
        auto cos = cyclotomic_coset(n, q, i);
        seen.insert(cos.begin(), cos.end());
        c.coset_reps.push_back(i);
    }
    c.k = n - static_cast<std::uint32_t>(c.defining_set.size());
    c.generator = generator_digits(q, n, c.defining_set);
    return c;
}

Poly digits_poly(const FieldPtr& f, const Word& w) { return Poly(f, std::vector<Element>(w.begin(), w.end())); }

// run[i] = number of consecutive members i, i+step, i+2 step, ... (mod n), for a non-full set.
std::vector<std::uint32_t> cyclic_runs(const std::vector<char>& member, std::uint32_t n, std::uint32_t step) {
    std::vector<std::uint32_t> run(n, 0);
    for (std::uint64_t k = 2 * std::uint64_t{n}; k-- > 0;) {
        const std::uint32_t pos = static_cast<std::uint32_t>(k * step % n);
        const std::uint32_t next = static_cast<std::uint32_t>((pos + step) % n);
        run[pos] = member[pos] ? std::min(n, run[next] + 1) : 0;
    }
    return run;
}

struct MinWeight {
    std::uint32_t weight = UINT32_MAX;
    std::uint64_t value = 0;
    bool better_than(const MinWeight& o) const { return std::tie(weight, value) < std::tie(o.weight, o.value); }
};

MinWeight scan_binary(const std::vector<std::uint64_t>& rows, std::uint64_t lo, std::uint64_t hi) {
    MinWeight best;
    std::uint64_t gray = lo ^ (lo >> 1);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (gray >> i & 1) word ^= rows[i];
    for (std::uint64_t i = lo; i < hi; ++i) {
        if (i != lo) {
            const int bit = std::countr_zero(i);
            gray ^= std::uint64_t{1} << bit;
            word ^= rows[static_cast<std::size_t>(bit)];
        }
        const MinWeight cur{static_cast<std::uint32_t>(std::popcount(word)), gray};
        if (cur.better_than(best)) best = cur;
    }
    return best;
}

MinWeight scan_field(const Field& f, std::uint32_t q, const std::vector<std::vector<Element>>& rows, std::uint32_t n,
                     std::uint64_t lo, std::uint64_t hi) {
    const std::size_t k = rows.size();
    MinWeight best;
    std::vector<std::uint32_t> digits(k, 0);
    std::uint64_t rest = lo;
    for (std::size_t i = 0; i < k; ++i) {
        digits[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
    }
    std::vector<Element> word(n, 0);
    for (std::size_t i = 0; i < k; ++i)
        if (digits[i])
            for (std::uint32_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(digits[i], rows[i][j]));
    std::uint32_t weight = static_cast<std::uint32_t>(std::count_if(word.begin(), word.end(), [](Element x) { return x != 0; }));
    for (std::uint64_t v = lo; v < hi; ++v) {
        if (v != lo) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::uint32_t old = digits[i];
                const std::uint32_t nxt = old + 1 == q ? 0 : old + 1;
                digits[i] = nxt;
                const Element delta = f.sub(nxt, old);
                for (std::uint32_t j = 0; j < n; ++j) {
                    const Element before = word[j];
                    word[j] = f.add(before, f.mul(delta, rows[i][j]));
                    weight += (word[j] != 0) - (before != 0);
                }
                if (nxt != 0) break;
            }
        }
        if (v == 0) continue;
        const MinWeight cur{weight, v};
        if (cur.better_than(best)) best = cur;
    }
    return best;
}

template <typename Scan>
MinWeight parallel_min(std::uint64_t lo, std::uint64_t hi, unsigned threads, Scan scan) {
    const std::uint64_t total = hi - lo;
    if (threads <= 1 || total < (1u << 14)) return scan(lo, hi);
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<MinWeight> part(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t a = lo + total * t / threads;
        const std::uint64_t b = lo + total * (t + 1) / threads;
        pool.emplace_back([&, t, a, b] { part[t] = scan(a, b); });
    }
    for (auto& th : pool) th.join();
    MinWeight best;
    for (const auto& m : part)
        if (m.better_than(best)) best = m;
    return best;
}

}  // namespace

bool CyclicCodeSpec::contains(std::uint32_t i) const {
    return std::binary_search(defining_set.begin(), defining_set.end(), i);
}

std::vector<char> CyclicCodeSpec::membership() const {
    std::vector<char> m(n, 0);
    for (auto i : defining_set) m[i] = 1;
    return m;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t n, std::uint32_t q, std::uint32_t r) {
    check_length(q, n);
    if (r >= n) fail(ErrorCode::InvalidArgument, "coset representative out of range");
    std::vector<std::uint32_t> out;
    std::uint64_t x = r;
    do {
        out.push_back(static_cast<std::uint32_t>(x));
        x = x * q % n;
    } while (x != r);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t n, std::uint32_t q) {
    check_length(q, n);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<char> seen(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        auto c = cyclotomic_coset(n, q, i);
        for (auto x : c) seen[x] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

CyclicCodeSpec build_code(std::uint32_t q, std::uint32_t n, const std::vector<std::int64_t>& coset_reps, std::string name) {
    check_length(q, n);
    std::set<std::uint32_t> dset;
    for (auto r : coset_reps) {
        const auto rr = static_cast<std::uint32_t>(nt::mod(r, n));
        if (dset.count(rr)) {
            std::ostringstream os;
            os << "representative " << r << " lies in a coset already selected";
            fail(ErrorCode::DuplicateCoset, os.str());
        }
        auto c = cyclotomic_coset(n, q, rr);
        dset.insert(c.begin(), c.end());
    }
    return finish_code(q, n, std::move(dset), std::move(name));
}

CyclicCodeSpec code_from_defining_set(std::uint32_t q, std::uint32_t n, const std::vector<std::int64_t>& defining_set,
                                      std::string name, bool* was_closed) {
    check_length(q, n);
    std::set<std::uint32_t> given, closed;
    for (auto i : defining_set) given.insert(static_cast<std::uint32_t>(nt::mod(i, n)));
    for (auto i : given) {
        auto c = cyclotomic_coset(n, q, i);
        closed.insert(c.begin(), c.end());
    }
    if (was_closed) *was_closed = closed.size() == given.size();
    return finish_code(q, n, std::move(closed), std::move(name));
}

FieldPtr canonical_field(std::uint32_t q, std::uint32_t n) {
    check_length(q, n);
    auto [p, a] = base_prime_power(q);
    const std::uint32_t s = nt::mult_order(q, n);
    return build_field(p, a * s);
}

Element code_root(const FieldPtr& field, std::uint32_t q, std::uint32_t n) {
    check_length(q, n);
    if (n == 1) return 1;
    if (field->order() % n != 0) fail(ErrorCode::OrderDoesNotDivide, "field has no element of order " + std::to_string(n));

    // Minimal polynomial of the canonical alpha over GF(q), as digits.
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Word> minpolys;
    Word m1;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = minpolys.find({q, n}); it != minpolys.end()) m1 = it->second;
    }
    if (m1.empty()) {
        FieldPtr cf = canonical_field(q, n);
        const Element alpha = cf->exp(cf->order() / n);
        std::vector<Element> roots;
        for (auto i : cyclotomic_coset(n, q, 1)) roots.push_back(cf->pow(alpha, i));
        Poly mp = Poly::from_roots(cf, roots);
        BaseFieldMap cmap(cf, q);
        for (Element c : mp.coeffs()) m1.push_back(cmap.digit(c));
        std::lock_guard<std::mutex> lock(mu);
        minpolys.emplace(std::make_pair(q, n), m1);
    }

    BaseFieldMap map(field, q);
    const Poly mp(field, to_elements(map, m1));
    const std::uint32_t step = field->order() / n;
    for (std::uint32_t j = 1; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        const Element cand = field->exp(std::int64_t{j} * step);
        if (mp.eval(cand) == 0) return cand;
    }
    fail(ErrorCode::Internal, "no root of the canonical minimal polynomial");
}

std::vector<Element> to_elements(const BaseFieldMap& map, const Word& w) {
    std::vector<Element> out;
    out.reserve(w.size());
    for (auto d : w) {
        if (d >= map.q()) fail(ErrorCode::InvalidArgument, "digit " + std::to_string(d) + " out of range");
        out.push_back(map.element(d));
    }
    return out;
}

Word to_digits(const BaseFieldMap& map, const std::vector<Element>& v) {
    Word out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(map.digit(x));
    return out;
}

Word encode(const CyclicCodeSpec& code, const Word& message) {
    if (!code.has_generator()) fail(ErrorCode::FieldTooLarge, "generator polynomial unavailable for this length");
    if (message.size() != code.k) fail(ErrorCode::LengthMismatch, "message must have k digits");
    for (auto d : message)
        if (d >= code.q) fail(ErrorCode::InvalidArgument, "message digit out of range");
    FieldPtr f = digit_field(code.q);
    Poly c = digits_poly(f, message) * digits_poly(f, code.generator);
    Word out(code.n, 0);
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) out[i] = c.coeffs()[i];
    return out;
}

bool is_codeword(const CyclicCodeSpec& code, const Word& word) {
    if (!code.has_generator()) fail(ErrorCode::FieldTooLarge, "generator polynomial unavailable for this length");
    if (word.size() != code.n) fail(ErrorCode::LengthMismatch, "word length differs from n");
    for (auto d : word)
        if (d >= code.q) fail(ErrorCode::InvalidArgument, "word digit out of range");
    FieldPtr f = digit_field(code.q);
    return (digits_poly(f, word) % digits_poly(f, code.generator)).is_zero();
}

std::size_t hamming_weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint32_t d) { return d != 0; }));
}

BchWitness bch_bound(const CyclicCodeSpec& code) {
    const std::uint32_t n = code.n;
    if (code.defining_set.empty()) return {};
    if (code.defining_set.size() == n) return {n + 1, 0, 1};
    const auto member = code.membership();
    BchWitness best;
    std::uint32_t best_len = 0;
    for (auto m1 : nt::units(n)) {
        const auto run = cyclic_runs(member, n, m1);
        for (std::uint32_t b = 0; b < n; ++b) {
            const std::uint32_t len = run[b];
            if (std::make_tuple(len, -std::int64_t{b}, -std::int64_t{m1}) >
                std::make_tuple(best_len, -std::int64_t{best.b}, -std::int64_t{best.m1})) {
                best_len = len;
                best = {len + 1, b, m1};
            }
        }
    }
    return best;
}

namespace {

auto ht_key(const HtWitness& w) {
    return std::make_tuple(w.value, w.d0, -std::int64_t{w.b1}, -std::int64_t{w.m2}, -std::int64_t{w.m1});
}

HtWitness ht_normalized(const CyclicCodeSpec& code) {
    const std::uint32_t n = code.n;
    const auto member = code.membership();
    const auto us = nt::units(n);
    HtWitness best;
    std::vector<char> dw(n);
    for (auto w : us) {
        for (std::uint32_t i = 0; i < n; ++i) dw[i] = member[std::uint64_t{w} * i % n];
        const auto run = cyclic_runs(dw, n, 1);
        for (auto m : us) {
            for (std::uint32_t b = 0; b < n; ++b) {
                std::uint32_t min_run = UINT32_MAX;
                for (std::uint32_t i1 = 0; i1 < n; ++i1) {
                    const std::uint32_t r = run[(b + std::uint64_t{i1} * m) % n];
                    if (r == 0) break;
                    min_run = std::min(min_run, r);
                    HtWitness cand;
                    cand.d0 = i1 + 2;
                    cand.nu = min_run - 1;
                    cand.value = cand.d0 + cand.nu;
                    cand.b1 = static_cast<std::uint32_t>(std::uint64_t{w} * b % n);
                    cand.m1 = static_cast<std::uint32_t>(std::uint64_t{w} * m % n);
                    cand.m2 = w;
                    if (ht_key(cand) > ht_key(best)) best = cand;
                }
            }
        }
    }
    return best;
}

HtWitness ht_full(const CyclicCodeSpec& code) {
    const std::uint32_t n = code.n;
    const auto member = code.membership();
    const auto us = nt::units(n);
    HtWitness best;
    for (auto m1 : us)
        for (auto m2 : us)
            for (std::uint32_t b1 = 0; b1 < n; ++b1) {
                std::uint32_t min_run = UINT32_MAX;
                for (std::uint32_t i1 = 0; i1 < n; ++i1) {
                    const std::uint64_t start = b1 + std::uint64_t{i1} * m1;
                    std::uint32_t r = 0;
                    while (r < n && member[(start + std::uint64_t{r} * m2) % n]) ++r;
                    if (r == 0) break;
                    min_run = std::min(min_run, r);
                    HtWitness cand{i1 + 2 + min_run - 1, b1, m1, m2, i1 + 2, min_run - 1};
                    if (ht_key(cand) > ht_key(best)) best = cand;
                }
            }
    return best;
}

}  // namespace

HtWitness ht_bound(const CyclicCodeSpec& code, const HtOptions& opts) {
    const std::uint32_t n = code.n;
    if (code.defining_set.empty()) return {};
    if (code.defining_set.size() == n) return {n + 1, 0, 1, 1, n + 1, 0};
    if (n > opts.max_n) {
        std::ostringstream os;
        os << "HT search limited to n <= " << opts.max_n << " (n = " << n << ")";
        fail(ErrorCode::SearchCapExceeded, os.str());
    }
    return opts.full_search ? ht_full(code) : ht_normalized(code);
}

bool ht_template_holds(const CyclicCodeSpec& code, const HtWitness& w) {
    const std::uint32_t n = code.n;
    if (w.d0 < 2) return w.value <= 1;
    if (std::gcd(w.m1, n) != 1 || std::gcd(w.m2, n) != 1) return false;
    if (w.value != w.d0 + w.nu) return false;
    if (code.defining_set.size() == n) return true;
    const auto member = code.membership();
    for (std::uint64_t i1 = 0; i1 + 2 <= w.d0; ++i1)
        for (std::uint64_t i2 = 0; i2 <= w.nu; ++i2)
            if (!member[(w.b1 + i1 * w.m1 + i2 * w.m2) % n]) return false;
    return true;
}

const char* distance_method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Oracle: return "oracle";
        case DistanceMethod::GcdTest: return "gcd-test";
        case DistanceMethod::WeightThreeConstruction: return "weight-three-construction";
    }
    return "unknown";
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("CYCLIC_BOUND_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DistanceWitness min_distance_oracle(const CyclicCodeSpec& code, const OracleOptions& opts) {
    const std::uint32_t n = code.n, k = code.k, q = code.q;
    DistanceWitness out;
    out.method = DistanceMethod::Oracle;
    if (k == 0) {
        out.d_true = n + 1;
        return out;
    }
    const std::uint64_t total = nt::checked_pow(q, k, opts.cap);
    if (total == 0) {
        std::ostringstream os;
        os << q << "^" << k << " codewords exceed the oracle cap " << opts.cap;
        fail(ErrorCode::TooManyCodewords, os.str());
    }
    if (!code.has_generator()) fail(ErrorCode::FieldTooLarge, "generator polynomial unavailable for this length");
    const unsigned threads = opts.threads ? opts.threads : default_thread_count();

    MinWeight best;
    if (k == n) {
        best = {1, 1};
    } else if (q == 2 && n <= 64) {
        std::vector<std::uint64_t> rows(k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < code.generator.size(); ++j)
                if (code.generator[j]) rows[i] |= std::uint64_t{1} << (i + j);
        best = parallel_min(1, total, threads, [&](std::uint64_t a, std::uint64_t b) { return scan_binary(rows, a, b); });
    } else {
        FieldPtr f = digit_field(q);
        std::vector<std::vector<Element>> rows(k, std::vector<Element>(n, 0));
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < code.generator.size(); ++j) rows[i][i + j] = code.generator[j];
        best = parallel_min(1, total, threads,
                            [&](std::uint64_t a, std::uint64_t b) { return scan_field(*f, q, rows, n, a, b); });
    }

    Word message(k, 0);
    std::uint64_t rest = best.value;
    for (std::uint32_t i = 0; i < k; ++i) {
        message[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
    }
    out.codeword = encode(code, message);
    out.d_true = best.weight;
    if (hamming_weight(*out.codeword) != out.d_true) fail(ErrorCode::Internal, "oracle weight bookkeeping mismatch");
    return out;
}

bool has_distance_two(std::uint32_t n, const std::vector<std::uint32_t>& coset_reps) {
    if (coset_reps.empty()) return false;
    std::uint32_t g = n;
    for (auto r : coset_reps) g = std::gcd(g, r % n);
    return g > 1;
}

DistanceWitness distance_three_witness(std::uint32_t n, const std::vector<std::uint32_t>& coset_reps, std::uint32_t g,
                                       std::uint32_t r) {
    auto bad = [](const std::string& why) { fail(ErrorCode::PreconditionViolated, why); };
    if (g < 2 || g > 20) bad("need 2 <= g <= 20");
    const std::uint32_t big_n = (1u << g) - 1;
    if (n % big_n != 0) bad("2^g - 1 does not divide n");
    if (n % 2 == 0) bad("n must be odd");
    if (r == 0 || r >= big_n || std::gcd(r, big_n) != 1) bad("need 0 < r < 2^g - 1 and gcd(r, 2^g - 1) = 1");
    if (coset_reps.empty()) bad("empty representative list");
    const auto rcos = cyclotomic_coset(big_n, 2, r);
    std::uint32_t gg = n;
    for (auto i : coset_reps) {
        if (!std::binary_search(rcos.begin(), rcos.end(), i % big_n)) bad("representative " + std::to_string(i) + " not in C_r mod 2^g - 1");
        gg = std::gcd(gg, i % n);
    }
    if (gg != 1) bad("gcd(n, reps) != 1");

    const std::uint32_t u = n / big_n;
    // beta = alpha^u, taken from the canonical field when it fits, else the generator of GF(2^g).
    FieldPtr f;
    Element beta = 0;
    try {
        f = canonical_field(2, n);
        beta = f->pow(code_root(f, 2, n), u);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::FieldTooLarge) throw;
        f = build_field(2, g);
        beta = f->generator();
    }
    std::uint32_t b = 0;
    for (std::uint32_t cand = 1; cand + 1 < big_n + 1 && !b; ++cand)
        if (f->add(f->add(1, beta), f->pow(beta, cand)) == 0) b = cand;
    if (!b) fail(ErrorCode::Internal, "no b with 1 + beta + beta^b = 0");

    const auto inv_r = static_cast<std::uint32_t>(*nt::inverse_mod(r, big_n));
    const std::uint32_t x1 = inv_r % big_n;
    const std::uint32_t x2 = static_cast<std::uint32_t>(std::uint64_t{b} * inv_r % big_n);
    Word c(n, 0);
    c[0] = 1;
    c[u * x1] = 1;
    c[u * x2] = 1;
    if (hamming_weight(c) != 3) fail(ErrorCode::Internal, "construction collapsed below weight 3");

    // c(alpha^i) = 1 + beta^{i x1} + beta^{i x2} for every defining-set exponent
    for (auto rep : coset_reps)
        for (auto i : cyclotomic_coset(n, 2, rep % n)) {
            const Element v = f->add(f->add(1, f->pow(beta, std::int64_t{i} * x1)), f->pow(beta, std::int64_t{i} * x2));
            if (v != 0) fail(ErrorCode::Internal, "constructed word does not vanish at alpha^" + std::to_string(i));
        }

    DistanceWitness out;
    out.d_true = 3;
    out.codeword = std::move(c);
    out.method = DistanceMethod::WeightThreeConstruction;
    return out;
}

CyclicCodeSpec lowest_rate_d2_code(std::uint32_t a, std::uint32_t g) {
    if (a < 2 || g < 2) fail(ErrorCode::PreconditionViolated, "need a > 1 and g > 1");
    const std::uint32_t n = a * g;
    if (n % 2 == 0) fail(ErrorCode::NotCoprime, "n = a*g must be odd for a binary cyclic code");
    std::vector<std::int64_t> d;
    for (std::uint32_t j = 0; j < a; ++j) d.push_back(std::int64_t{j} * g);
    bool closed = false;
    std::ostringstream name;
    name << "lowest-rate-d2(" << a << "," << g << ")";
    auto code = code_from_defining_set(2, n, d, name.str(), &closed);
    if (!closed) fail(ErrorCode::Internal, "multiples of g are not coset-closed");
    return code;
}

std::vector<std::uint32_t> lowest_rate_d2_proof_set(std::uint32_t a, std::uint32_t g) {
    if (a < 2 || g < 2) fail(ErrorCode::PreconditionViolated, "need a > 1 and g > 1");
    const std::uint32_t n = a * g;
    if (n % 2 == 0) fail(ErrorCode::NotCoprime, "n = a*g must be odd for a binary cyclic code");
    std::set<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n; ++i)
        if (std::gcd(i, g) > 1) {
            auto c = cyclotomic_coset(n, 2, i);
            out.insert(c.begin(), c.end());
        }
    return {out.begin(), out.end()};
}

CyclicCodeSpec lowest_rate_d3_code(std::uint32_t a, std::uint32_t g, std::uint32_t r) {
    auto bad = [](const std::string& why) { fail(ErrorCode::PreconditionViolated, why); };
    if (a < 1 || g < 2 || g > 20) bad("need a >= 1 and 2 <= g <= 20");
    const std::uint32_t big_n = (1u << g) - 1;
    const std::uint64_t n64 = std::uint64_t{a} * big_n;
    if (n64 > (1u << 24)) bad("length too large");
    const auto n = static_cast<std::uint32_t>(n64);
    if (r == 0 || r >= big_n || std::gcd(r, big_n) != 1) bad("need 0 < r < 2^g - 1 and gcd(r, 2^g - 1) = 1");
    if (n % 2 == 0) bad("n = a(2^g - 1) must be odd");
    // gcd(r, n) > 1 would put every element in the multiples of a common factor: distance two.
    if (std::gcd(r, n) != 1) bad("gcd(r, n) != 1");
    std::vector<std::int64_t> d;
    for (std::uint64_t j = 0; j < a; ++j)
        for (std::uint32_t t = 0; t < g; ++t) d.push_back(static_cast<std::int64_t>(r * (j * big_n + (1u << t)) % n));
    bool closed = false;
    std::ostringstream name;
    name << "lowest-rate-d3(" << a << "," << g << "," << r << ")";
    auto code = code_from_defining_set(2, n, d, name.str(), &closed);
    if (!closed) fail(ErrorCode::Internal, "lowest-rate d=3 defining set is not coset-closed");
    if (code.k != a * (big_n - g)) fail(ErrorCode::Internal, "unexpected dimension");
    return code;
}

}  // namespace cyclicbound
