#ifndef QSPEC_CLI_HPP
#define QSPEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qspec::cli {

  enum ExitCode : int {
    kAllPassed = 0,
    kVerdictFailed = 1,
    kInvalidInput = 2
  };

  // Entry point shared by the qspec binary and the tests. args excludes the
  // program name.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

  // "2,2,3" -> {2,2,3}; throws std::invalid_argument.
  std::vector<int> parse_degrees(const std::string& text);

} // namespace qspec::cli

#endif // QSPEC_CLI_HPP
