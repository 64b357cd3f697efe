#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schub {

// Exit codes: 0 success, 2 grammar/parse error, 3 domain violation,
// 4 internal inconsistency (oracle mismatch).
int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace schub
