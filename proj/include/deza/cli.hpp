#ifndef DEZA_CLI_HPP
#define DEZA_CLI_HPP

#include <iosfwd>

namespace deza {

/// Runs one deza-tool invocation. Returns 0 on success (one JSON document on
/// `out`), 1 on domain errors ({"error", "detail"} on `out`), 2 on usage
/// errors (message on `err`).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace deza

#endif  // DEZA_CLI_HPP
