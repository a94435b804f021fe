#pragma once

/*
  Command-line driver: enumerate, stratum, poset, classify, verify.
  Exit codes: 0 success, 1 mathematical/validation failure, 2 usage or parse
  failure. All output is byte-deterministic for identical invocations.
*/

#include <iosfwd>

namespace eo::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eo::cli
