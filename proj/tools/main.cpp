// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclicbound/cyclicbound.h"

using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInternal = 2 };

struct CbFailure {
    int status;
    std::string message;
};

void check(int status) {
    if (status != CB_OK) throw CbFailure{status, cb_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    cb_string_free(s);
    return out;
}

using CodePtr = std::unique_ptr<cb_code, decltype(&cb_code_free)>;
using DecoderPtr = std::unique_ptr<cb_decoder, decltype(&cb_decoder_free)>;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CbFailure{CB_PARSE_ERROR, "cannot read " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CodePtr load_code(const std::string& path) {
    cb_code* c = nullptr;
    char* warn = nullptr;
    check(cb_code_from_json(read_file(path).c_str(), &c, &warn));
    for (const auto& w : Json::parse(take(warn))) std::cerr << "warning: " << w.get<std::string>() << "\n";
    return CodePtr(c, cb_code_free);
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s, const char* what) {
    const auto colon = s.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const auto v = std::stoul(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v)};
        }
        const auto a = std::stoul(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(s);
        const auto rest = s.substr(colon + 1);
        const auto b = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
        return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    } catch (const std::logic_error&) {
        throw CbFailure{CB_PARSE_ERROR, std::string("bad ") + what + " '" + s + "', expected LO:HI"};
    }
}

std::string join(const Json& arr) {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + arr[i].dump();
    return "{" + s + "}";
}

void print_bound_human(const Json& r) {
    const auto& c = r["code"];
    std::cout << "code       " << (c["name"].get<std::string>().empty() ? "-" : c["name"].get<std::string>()) << "  q=" << c["q"]
              << " n=" << c["n"] << " k=" << c["k"] << "\n";
    std::cout << "reps       " << join(c["coset_reps"]) << "\n";
    if (r.contains("bch")) {
        const auto& w = r["bch"]["witness"];
        std::cout << "bch        " << r["bch"]["value"] << "  (b=" << w["b"] << " m1=" << w["m1"] << ")\n";
    }
    if (r.contains("ht")) {
        const auto& h = r["ht"];
        if (h["value"].is_null()) {
            std::cout << "ht         skipped: " << h["skipped"].get<std::string>() << "\n";
        } else {
            const auto& w = h["witness"];
            std::cout << "ht         " << h["value"] << "  (b1=" << w["b1"] << " m1=" << w["m1"] << " m2=" << w["m2"] << " d0=" << w["d0"]
                      << " nu=" << w["nu"] << ")\n";
        }
    }
    if (r.contains("nzl")) {
        const auto& z = r["nzl"];
        std::cout << "nzl d*     " << z["d_star"];
        if (!z["certificate"].is_null()) {
            const auto& ct = z["certificate"];
            const auto& l = ct["locator"];
            std::cout << "  (mu=" << ct["mu"] << " e=" << ct["e"] << " w=" << ct["w"] << " t=" << ct["t_l"] << " locator "
                      << l["label"].get<std::string>() << " over GF(" << l["q_l"] << "), d_l=" << l["d_l"] << ")";
        }
        std::cout << "\n";
    }
    if (r.contains("oracle")) {
        const auto& o = r["oracle"];
        if (o["capped"].get<bool>())
            std::cout << "oracle     capped: " << o["note"].get<std::string>() << "\n";
        else
            std::cout << "oracle d   " << o["d"] << "\n";
    }
}

void print_paper_check(const Json& r) {
    for (const auto& f : r["fixtures"]) {
        std::printf("%-13s %-9s %6.2fs  %s\n", f["id"].get<std::string>().c_str(), f["status"].get<std::string>().c_str(),
                    f["seconds"].get<double>(), f["title"].get<std::string>().c_str());
        for (const auto& c : f["checks"]) {
            std::printf("    [%s] %s: expected %s, computed %s\n", c["status"].get<std::string>().c_str(),
                        c["claim"].get<std::string>().c_str(), c["expected"].get<std::string>().c_str(),
                        c["computed"].get<std::string>().c_str());
            if (c.contains("note")) std::printf("           note: %s\n", c["note"].get<std::string>().c_str());
        }
    }
    std::printf("%s\n", r["passed"].get<bool>() ? "all fixtures pass" : "FIXTURE MISMATCH");
}

struct BoundFlags {
    bool bch = false, ht = false, nzl = false, oracle = false;
    std::uint32_t max_nl = 0, max_u = 0, ht_max_n = 0;
    bool no_search_w = false;
    std::uint64_t cap = 0;
    unsigned threads = 0;

    void add(CLI::App* app, bool selectors) {
        if (selectors) {
            app->add_flag("--bch", bch, "BCH bound");
            app->add_flag("--ht", ht, "Hartmann-Tzeng bound");
            app->add_flag("--nzl", nzl, "non-zero-locator bound");
            app->add_flag("--oracle", oracle, "exhaustive minimum distance");
            app->add_option("--cap", cap, "most codewords the oracle enumerates (default 2^24)");
            app->add_option("--ht-max-n", ht_max_n, "skip the HT search above this length (default 255)");
        }
        app->add_option("--max-nl", max_nl, "largest candidate locator length (default 16)");
        app->add_option("--max-u", max_u, "largest RS locator extension degree (default 4)");
        app->add_flag("--no-search-w", no_search_w, "keep the exponent step w = 1");
        app->add_option("--threads", threads, "worker threads (default CYCLIC_BOUND_THREADS or all cores)");
    }
    cb_bound_options options() const {
        cb_bound_options o;
        cb_bound_options_default(&o);
        if (bch || ht || nzl || oracle) {
            o.bch = bch;
            o.ht = ht;
            o.nzl = nzl;
            o.oracle = oracle;
        }
        if (max_nl) o.max_n_l = max_nl;
        if (max_u) o.max_u = max_u;
        if (ht_max_n) o.ht_max_n = ht_max_n;
        if (cap) o.oracle_cap = cap;
        o.search_w = no_search_w ? 0 : 1;
        o.threads = threads;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-distance bounds and decoding for cyclic codes."};
    app.require_subcommand(1);
    app.set_version_flag("--version", cb_version());
    app.footer(
        "Code spec files are JSON: {\"q\": 2, \"n\": 21, \"coset_reps\": [1,3,7,9]} or with \"defining_set\" instead.\n"
        "Words are base-q digit strings, coefficient of x^0 first; one hex character per symbol for q <= 16,\n"
        "comma separated otherwise.\n"
        "Exit codes: 0 ran (including decoding failures), 1 usage or parse error, 2 internal error or fixture mismatch.");

    std::uint32_t cos_n = 0, cos_q = 0;
    bool cos_json = false;
    auto* cosets = app.add_subcommand("cosets", "list cyclotomic cosets of q modulo n");
    cosets->add_option("n", cos_n, "length")->required();
    cosets->add_option("q", cos_q, "field size")->required();
    cosets->add_flag("--json", cos_json, "JSON output");

    std::string spec_path;
    bool human = false;
    BoundFlags bflags;
    auto* bound = app.add_subcommand("bound", "BCH, HT and non-zero-locator bounds with witnesses");
    bound->add_option("spec", spec_path, "code spec JSON file, - for stdin")->required();
    bound->add_flag("--human", human, "aligned text instead of JSON");
    bflags.add(bound, true);

    std::string dec_spec, locator, received;
    BoundFlags dflags;
    auto* dec = app.add_subcommand("decode", "decode a received word up to (d*-1)/2 errors");
    dec->add_option("spec", dec_spec, "code spec JSON file, - for stdin")->required();
    dec->add_option("--received,-r", received, "received word")->required();
    dec->add_option("--locator,-l", locator,
                    "trivial | spc:N | rs:N:K[:u] | hamming | d2:a:g | d3:a:g:r | custom:N:i,j,..[:u]; default: best candidate");
    dflags.add(dec, false);

    std::string enc_spec, message;
    auto* enc = app.add_subcommand("encode", "multiply a message by the generator polynomial");
    enc->add_option("spec", enc_spec, "code spec JSON file, - for stdin")->required();
    enc->add_option("--message,-m", message, "k message digits")->required();

    std::string only;
    bool pc_json = false;
    auto* pc = app.add_subcommand("paper-check", "regression table over the published examples");
    pc->add_option("--only", only, "run one fixture");
    pc->add_flag("--json", pc_json, "JSON output");

    std::string nu_range = "1:6", d0_range = "2:20", m_rule = "2:2", out_path;
    auto* grid = app.add_subcommand("ratio-grid", "CSV of d*/(d0+nu) with RS locators");
    grid->add_option("--nu-range", nu_range, "nu range LO:HI")->capture_default_str();
    grid->add_option("--d0-range", d0_range, "d0 range LO:HI")->capture_default_str();
    grid->add_option("--m-rule", m_rule, "m - nu range LO:HI, LO >= 2")->capture_default_str();
    grid->add_option("--out,-o", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*cosets) {
            char* out = nullptr;
            check(cb_cosets_json(cos_n, cos_q, &out));
            const auto j = Json::parse(take(out));
            if (cos_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& c : j["cosets"]) std::cout << "C_" << c["rep"] << " " << join(c["elements"]) << "\n";
            }
        } else if (*bound) {
            auto code = load_code(spec_path);
            const auto opts = bflags.options();
            char* out = nullptr;
            check(cb_bound_report_json(code.get(), &opts, &out));
            const auto j = Json::parse(take(out));
            if (human)
                print_bound_human(j);
            else
                std::cout << j.dump(2) << "\n";
        } else if (*dec) {
            auto code = load_code(dec_spec);
            const auto opts = dflags.options();
            cb_decoder* d = nullptr;
            check(cb_decoder_new(code.get(), locator.empty() ? nullptr : locator.c_str(), &opts, &d));
            DecoderPtr dp(d, cb_decoder_free);
            char* out = nullptr;
            check(cb_decode_json(dp.get(), received.c_str(), &out));
            std::cout << Json::parse(take(out)).dump(2) << "\n";
        } else if (*enc) {
            auto code = load_code(enc_spec);
            char* out = nullptr;
            check(cb_encode(code.get(), message.c_str(), &out));
            std::cout << take(out) << "\n";
        } else if (*pc) {
            char* out = nullptr;
            int passed = 0;
            check(cb_paper_check_json(only.empty() ? nullptr : only.c_str(), &out, &passed));
            const auto j = Json::parse(take(out));
            if (pc_json)
                std::cout << j.dump(2) << "\n";
            else
                print_paper_check(j);
            return passed ? kOk : kInternal;
        } else if (*grid) {
            const auto [nl, nh] = parse_range(nu_range, "--nu-range");
            const auto [dl, dh] = parse_range(d0_range, "--d0-range");
            const auto [ml, mh] = parse_range(m_rule, "--m-rule");
            char* out = nullptr;
            check(cb_ratio_grid_csv(nl, nh, dl, dh, ml, mh, &out));
            const auto csv = take(out);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream f(out_path);
                if (!(f << csv)) throw CbFailure{CB_INVALID_ARGUMENT, "cannot write " + out_path};
            }
        }
    } catch (const CbFailure& e) {
        std::cerr << "error: " << cb_status_name(e.status) << ": " << e.message << "\n";
        return e.status == CB_INTERNAL ? kInternal : kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
