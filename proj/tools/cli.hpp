#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapn::cli {

// Exit codes: 0 success (verdicts are data, not failures), 2 parse or
// configuration error, 3 guard violation, 4 dual-arc hypothesis failure,
// 5 dual-arc verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gapn::cli
