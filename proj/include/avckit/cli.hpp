#ifndef AVCKIT_CLI_HPP
#define AVCKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace avckit {

// Exit codes: 0 success, 1 infeasible / insufficient headroom, 2 input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avckit

#endif
