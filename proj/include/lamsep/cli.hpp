#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lamsep {

/// Dispatches the lamsep subcommands. Exit codes: 0 success or property
/// true, 1 property false, 2 usage or parse error, 3 internal invariant
/// violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lamsep
