#ifndef BPP_CLI_HPP
#define BPP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bpp::cli {

// Dispatch a full command line (without argv[0]).  Results go to `out`,
// diagnostics to `err`.  Returns 0 on success, 1 on verification failure,
// 2 on usage errors (bad subcommand, bad integers, DSL parse errors).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bpp::cli

#endif
