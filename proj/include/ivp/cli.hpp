#ifndef IVP_CLI_HPP
#define IVP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ivp::cli {

// One entry per subcommand with the library operations it exercises; the
// coverage test checks that the union reaches every operation.
struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> reaches;
};

const std::vector<CommandInfo>& command_table();
const std::vector<std::string>& operation_list();

// Exit codes: 0 success, 1 check failure (a counterexample or failed
// verification), 2 usage error (bad arguments or malformed input).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ivp::cli

#endif
