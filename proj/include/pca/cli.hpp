#pragma once

// Command-line front end. Exit codes: 0 success, 2 a negative mathematical
// answer (not separable, not semisimple) with the report still written,
// 1 input or usage errors.

#include <ostream>
#include <string>
#include <vector>

namespace pca::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pca::cli
