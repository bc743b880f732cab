#pragma once

#include <string>
#include <vector>

namespace morsify {

// The `morsify` command line. Exit codes: 0 success, 2 injectivity
// failure (the report is still written), 3 validation or usage error,
// 4 oracle / tree-isomorphism disagreement, 1 unexpected failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace morsify
