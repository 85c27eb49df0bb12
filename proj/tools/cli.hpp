#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicegap::cli {

// exit code: 0 ok, 1 check-failed, 2 usage or error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicegap::cli
