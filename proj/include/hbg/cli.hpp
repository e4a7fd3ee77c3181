#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbg::cli {

/// Entry point behind the `hbg` binary. Artifacts go to --output (stdout
/// when absent); failures are reported as one JSON object on `err` and give
/// a nonzero status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbg::cli
