#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nalg::cli {

enum Exit { ok = 0, failed = 1, usage = 2 };

// args exclude the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> suite_names();

}  // namespace nalg::cli
