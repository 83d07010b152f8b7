#ifndef CYCLICBOUND_REPORT_HPP
#define CYCLICBOUND_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclicbound/cyclic.hpp"
#include "cyclicbound/decoder.hpp"
#include "cyclicbound/nzl.hpp"

namespace cyclicbound {

using Json = nlohmann::ordered_json;

// {"q": .., "n": .., "coset_reps": [..]} or {.., "defining_set": [..]}, optional "name".
// Non-closed defining sets are closed and a warning is appended.
CyclicCodeSpec parse_code_spec(const std::string& text, std::vector<std::string>* warnings = nullptr);
CyclicCodeSpec code_spec_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);
Json code_spec_file_json(const CyclicCodeSpec& code);

// Locator syntax: trivial | spc:N | rs:N:K[:u] | hamming | d2:a:g | d3:a:g:r | custom:N:i,j,..[:u]
LocatorSpec parse_locator(const std::string& text, std::uint32_t q);

// Base-q digits, x^0 first. q <= 16: one hex character per symbol, otherwise comma separated.
Word parse_word(const std::string& text, std::uint32_t q);
std::string format_word(const Word& w, std::uint32_t q);

Json code_json(const CyclicCodeSpec& code);
Json locator_json(const LocatorSpec& loc);
Json certificate_json(const NzlCertificate& cert);
Json bch_json(const BchWitness& w);
Json ht_json(const HtWitness& w);

struct ReportOptions {
    bool bch = true;
    bool ht = true;
    bool nzl = true;
    bool oracle = true;
    BestBoundOptions bound;
    OracleOptions oracle_opts;
};

// ReportRecord; see docs/report-record.md.
Json bound_report(const CyclicCodeSpec& code, const ReportOptions& opts = {});

Json decode_result_json(const DecoderContext& ctx, const DecodeResult& res);
Json decoder_json(const DecoderContext& ctx);

}  // namespace cyclicbound

#endif
