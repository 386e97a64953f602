#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lomuf {

/// Entry point behind the `lomuf` binary. Exit codes: 0 success,
/// 2 validation/usage error, 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lomuf
