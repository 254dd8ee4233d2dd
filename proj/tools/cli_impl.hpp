#ifndef COSK_TOOLS_CLI_IMPL_HPP
#define COSK_TOOLS_CLI_IMPL_HPP

#include <iosfwd>
#include <vector>

namespace cosk::cli {

// Exit codes: 0 ok, 1 usage/parse error, 2 invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosk::cli

#endif
