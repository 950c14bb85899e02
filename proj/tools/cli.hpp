#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sunsys::cli {

// Exit statuses of the command-line tool.
enum exit_code : int {
  ok = 0,           // success, or the certificate verified
  failed = 1,       // verification failed or the search proved no system
  unsupported = 2,  // inadmissible or not covered by any construction
  usage = 3,        // bad arguments or an unreadable certificate
};

// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sunsys::cli
