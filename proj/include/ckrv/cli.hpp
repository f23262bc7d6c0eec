#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ckrv
{
  /// Run the command-line front end on \a args (without the program name).
  /// Returns 0 for yes/ok, 1 for no, 2 for usage or input errors and 3 when
  /// a size cap was exceeded.
  int run(const std::vector<std::string>& args, std::istream& in,
          std::ostream& out, std::ostream& err);
}
