#ifndef CYCLICBOUND_PAPER_CHECK_HPP
#define CYCLICBOUND_PAPER_CHECK_HPP

#include <string>
#include <vector>

#include "cyclicbound/report.hpp"

namespace cyclicbound {

// Deviation: the published value cannot be reproduced literally and the difference is understood
// (documented in the note). It does not count as a failure.
enum class CheckStatus { Pass, Fail, Deviation };
const char* check_status_name(CheckStatus s);

struct CheckItem {
    std::string claim;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct FixtureResult {
    std::string id;
    std::string title;
    std::vector<CheckItem> items;
    double seconds = 0;
    CheckStatus status() const;
};

std::vector<std::string> paper_fixture_ids();
// only: empty for all fixtures, otherwise a fixture id. Unknown ids raise InvalidArgument.
std::vector<FixtureResult> run_paper_check(const std::string& only = {});
Json paper_check_json(const std::vector<FixtureResult>& results);
bool all_passed(const std::vector<FixtureResult>& results);

}  // namespace cyclicbound

#endif
