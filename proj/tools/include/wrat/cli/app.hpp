#pragma once

#include "wrat/cli/serialize.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace wrat::cli {

enum ExitCode : int { kPass = 0, kMathFail = 2, kDataError = 3, kIoError = 4 };

/// Entry point shared by the executable and the in-process tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// One row per record in exceptional_records(), ordered by algebra then q.
json report_all(bool timings);
std::string report_tsv(const json &report);

/// Every record passed every check.
bool report_passed(const json &report);

} // namespace wrat::cli
